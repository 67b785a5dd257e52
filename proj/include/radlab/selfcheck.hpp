#pragma once

// The acceptance checklist as a library: eleven numbered checks covering the
// eigenvalue formula, the eigenbasis, projection consistency, the sharp local
// constant, the averaged-energy bound, Fourier invariance, the sphere-slice
// measure, the Lorentz lemma scans, Gaussian fitting, the stability scan, and
// modulus monotonicity.  Every tolerance is pinned here; callers display the
// results but never decide them.

#include <cstdint>
#include <string>
#include <vector>

namespace radlab {

struct CheckDetail {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = true;
};

struct CheckResult {
  int criterion = 0;  // 1-based position in the checklist
  std::string name;
  bool pass = true;  // primary comparison and every detail
  double value = 0.0;
  double tolerance = 0.0;
  std::vector<CheckDetail> details;
  double budget_seconds = 0.0;
  double seconds = 0.0;  // measured wall time; never serialized to artifacts
};

// Runs all eleven checks deterministically from the seed.  The twelfth
// acceptance item (byte-identical artifacts across runs) is a statement
// about the command-line tool and lives with its callers.
std::vector<CheckResult> run_selfcheck(std::uint64_t seed);

}  // namespace radlab
