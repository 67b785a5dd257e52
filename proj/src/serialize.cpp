#include "radlab/serialize.hpp"

#include "radlab/scalars.hpp"

namespace nlohmann {

void adl_serializer<std::complex<double>>::to_json(
    json& j, const std::complex<double>& z) {
  j = json::array({z.real(), z.imag()});
}

void adl_serializer<std::complex<double>>::from_json(const json& j,
                                                     std::complex<double>& z) {
  if (!j.is_array() || j.size() != 2)
    throw radlab::UsageError("complex value must be a [re, im] array");
  z = std::complex<double>(j[0].get<double>(), j[1].get<double>());
}

}  // namespace nlohmann

namespace radlab {

// ---- function representations ----------------------------------------------

void to_json(json& j, const GaussPolyFun& f) {
  j = json{{"repr", "gausspoly"},
           {"d", f.d},
           {"width", f.width},
           {"coeffs", f.coeffs}};
}

void from_json(const json& j, GaussPolyFun& f) {
  f.d = j.at("d").get<int>();
  f.width = j.at("width").get<cplx>();
  f.coeffs = j.at("coeffs").get<std::vector<cplx>>();
}

void to_json(json& j, const MonomialGaussFun& f) {
  j = json{{"repr", "monomial"},
           {"d", f.d},
           {"alpha", f.alpha},
           {"coeff", f.coeff},
           {"width", f.width}};
}

void from_json(const json& j, MonomialGaussFun& f) {
  f.d = j.at("d").get<int>();
  f.alpha = j.at("alpha").get<std::vector<int>>();
  f.coeff = j.at("coeff").get<cplx>();
  f.width = j.at("width").get<cplx>();
}

void to_json(json& j, const ProfileFun& f) {
  j = json{{"repr", "profile"},
           {"d", f.d},
           {"nodes", f.nodes},
           {"weights", f.weights},
           {"values", f.values}};
}

void from_json(const json& j, ProfileFun& f) {
  f.d = j.at("d").get<int>();
  f.nodes = j.at("nodes").get<std::vector<double>>();
  f.weights = j.at("weights").get<std::vector<double>>();
  f.values = j.at("values").get<std::vector<cplx>>();
}

void to_json(json& j, const AnyFun& f) {
  std::visit([&](const auto& u) { j = u; }, f);
}

void from_json(const json& j, AnyFun& f) {
  const std::string repr = j.at("repr").get<std::string>();
  if (repr == "gausspoly")
    f = j.get<GaussPolyFun>();
  else if (repr == "monomial")
    f = j.get<MonomialGaussFun>();
  else if (repr == "profile")
    f = j.get<ProfileFun>();
  else
    throw UsageError("unknown function repr '" + repr + "'");
}

void to_json(json& j, const PairState& p) {
  j = json{{"f", p.f}, {"g", p.g}, {"label", p.label}};
}

void from_json(const json& j, PairState& p) {
  p.f = j.at("f").get<AnyFun>();
  p.g = j.at("g").get<AnyFun>();
  p.label = j.value("label", "");
}

void to_json(json& j, const RadialSet& s) {
  j = json{{"d", s.d}, {"annuli", s.annuli}};
}

void from_json(const json& j, RadialSet& s) {
  s.d = j.at("d").get<int>();
  s.annuli = j.at("annuli").get<std::vector<std::pair<double, double>>>();
}

// ---- report payloads -------------------------------------------------------

void to_json(json& j, const GaussFitResult& r) {
  j = json{{"gamma", r.gamma},
           {"a", r.a},
           {"b", r.b},
           {"dist", r.dist},
           {"converged", r.converged},
           {"evaluations", r.evaluations},
           {"grad_norm", r.grad_norm}};
}

void to_json(json& j, const GaugeRecord& r) {
  j = json{{"dilation", r.dilation},
           {"modulation", r.modulation},
           {"scale_f", r.scale_f},
           {"scale_g", r.scale_g}};
}

void to_json(json& j, const BoundReport& r) {
  json params = json::array();
  for (const auto& [name, value] : r.params)
    params.push_back(json::array({name, value}));
  j = json{{"lemma", r.lemma},
           {"config", r.config},
           {"ratio", r.ratio},
           {"attained_at", r.attained_at},
           {"finite", r.finite},
           {"params", params}};
}

void to_json(json& j, const SpectralBasis& b) {
  json rows = json::array();
  for (int m = 0; m <= b.max_m; ++m)
    rows.push_back(json{{"m", m},
                        {"lambda_formula", eigenvalue_lambda(b.d, m)},
                        {"lambda_recomputed", b.lambda_rayleigh[m]},
                        {"eigen_residual", b.eigen_residual[m]},
                        {"coefficients", b.psi[m].coeffs}});
  j = json{{"d", b.d},
           {"max_m", b.max_m},
           {"gram_deviation", b.gram_deviation},
           {"rows", rows}};
}

void to_json(json& j, const QuadFormResult& r) {
  j = json{{"proof_form", r.proof_form},
           {"statement_form", r.statement_form},
           {"bound", r.bound},
           {"slack", r.slack}};
}

void to_json(json& j, const DeficitReport& r) {
  j = json{{"d", r.d},
           {"norm_f", r.norm_f},
           {"norm_g", r.norm_g},
           {"phi", r.phi},
           {"deficit", r.deficit},
           {"dist", r.dist},
           {"has_ratios", r.has_ratios},
           {"ratio_one_minus_phi", r.ratio_one_minus_phi},
           {"ratio_one_minus_root", r.ratio_one_minus_root},
           {"fit", r.fit}};
}

void to_json(json& j, const SweepPoint& p) {
  j = json{{"eps", p.eps}, {"phi", p.phi}, {"deficit", p.deficit}};
}

void to_json(json& j, const SweepReport& r) {
  j = json{{"d", r.d},
           {"c2", r.c2},
           {"c3", r.c3},
           {"c2_predicted", r.c2_predicted},
           {"fit_residual", r.fit_residual},
           {"points", r.points}};
}

void to_json(json& j, const ProbeEntry& e) {
  j = json{{"m", e.m},
           {"antisym", e.antisym},
           {"c2_deficit", e.c2_deficit},
           {"d2_dist", e.d2_dist},
           {"limit_ratio", e.limit_ratio},
           {"limit_ratio_root", e.limit_ratio_root}};
}

void to_json(json& j, const ProbeReport& r) {
  j = json{{"d", r.d},
           {"entries", r.entries},
           {"min_ratio", r.min_ratio},
           {"argmin_m", r.argmin_m},
           {"predicted_local_constant", r.predicted_local_constant}};
}

void to_json(json& j, const ScanSample& s) {
  j = json{{"index", s.index},
           {"deficit", s.deficit},
           {"dist", s.dist},
           {"ratio", s.ratio},
           {"has_ratio", s.has_ratio},
           {"control", s.control}};
}

void to_json(json& j, const ScanReport& r) {
  j = json{{"d", r.d},
           {"n", r.n},
           {"seed", r.seed},
           {"amp", r.amp},
           {"min_deficit", r.min_deficit},
           {"min_ratio", r.min_ratio},
           {"max_ratio", r.max_ratio},
           {"mean_ratio", r.mean_ratio},
           {"n_ratio", r.n_ratio},
           {"samples", r.samples}};
}

void to_json(json& j, const FourierInvarianceReport& r) {
  j = json{{"d", r.d}, {"diffs", r.diffs}, {"max_diff", r.max_diff}};
}

void to_json(json& j, const LorentzEntry& e) {
  j = json{{"config", e.config},
           {"pn", e.pn},
           {"l24_f", e.l24_f},
           {"l24_g", e.l24_g},
           {"ratio", e.ratio}};
}

void to_json(json& j, const LorentzReport& r) {
  j = json{{"family", r.family},
           {"d", r.d},
           {"entries", r.entries},
           {"max_ratio", r.max_ratio},
           {"invariance_err", r.invariance_err}};
}

}  // namespace radlab
