#pragma once

// JSON bindings for every value the command-line front end reads or writes.
// Complex numbers serialize as two-element [re, im] arrays; functions carry a
// "repr" tag so a pair file can mix representations.  All emitters go through
// nlohmann-json, whose object type keeps keys sorted, so a dumped document is
// canonical byte-for-byte given identical contents.

#include <complex>

#include "json.hpp"
#include "radlab/experiments.hpp"
#include "radlab/funcspace.hpp"
#include "radlab/gaussfit.hpp"
#include "radlab/radsets.hpp"
#include "radlab/spectral.hpp"

namespace nlohmann {

template <>
struct adl_serializer<std::complex<double>> {
  static void to_json(json& j, const std::complex<double>& z);
  static void from_json(const json& j, std::complex<double>& z);
};

}  // namespace nlohmann

namespace radlab {

using nlohmann::json;

// A labeled input pair as stored in a pair file:
//   { "f": {...}, "g": {...}, "label": "free text" }
struct PairState {
  AnyFun f;
  AnyFun g;
  std::string label;
};

// Function representations ("repr": gausspoly | monomial | profile).
void to_json(json& j, const GaussPolyFun& f);
void from_json(const json& j, GaussPolyFun& f);
void to_json(json& j, const MonomialGaussFun& f);
void from_json(const json& j, MonomialGaussFun& f);
void to_json(json& j, const ProfileFun& f);
void from_json(const json& j, ProfileFun& f);
void to_json(json& j, const AnyFun& f);
void from_json(const json& j, AnyFun& f);

void to_json(json& j, const PairState& p);
void from_json(const json& j, PairState& p);

void to_json(json& j, const RadialSet& s);
void from_json(const json& j, RadialSet& s);

// Report payloads (write-only).
void to_json(json& j, const GaussFitResult& r);
void to_json(json& j, const GaugeRecord& r);
void to_json(json& j, const BoundReport& r);
void to_json(json& j, const SpectralBasis& b);
void to_json(json& j, const QuadFormResult& r);
void to_json(json& j, const DeficitReport& r);
void to_json(json& j, const SweepPoint& p);
void to_json(json& j, const SweepReport& r);
void to_json(json& j, const ProbeEntry& e);
void to_json(json& j, const ProbeReport& r);
void to_json(json& j, const ScanSample& s);
void to_json(json& j, const ScanReport& r);
void to_json(json& j, const FourierInvarianceReport& r);
void to_json(json& j, const LorentzEntry& e);
void to_json(json& j, const LorentzReport& r);

}  // namespace radlab
