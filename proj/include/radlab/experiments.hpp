#pragma once

// End-to-end experiments on the product-projection stability functional
//   Phi(f, g) = ||P(f x g)||^2 for unit slots,
// tying together the projection, the spectral quadratic form, and the
// nearest-Gaussian distance.

#include <cstdint>
#include <string>
#include <vector>

#include "radlab/funcspace.hpp"
#include "radlab/gaussfit.hpp"

namespace radlab {

// ---- single-pair deficit ---------------------------------------------------

struct DeficitReport {
  int d = 1;
  double norm_f = 1.0, norm_g = 1.0;  // slot norms before normalization
  double phi = 0.0;                   // ||P(f x g)||^2 on normalized slots
  double deficit = 0.0;               // 1 - phi
  double dist = 0.0;                  // joint Gaussian distance, normalized pair
  bool has_ratios = false;            // set when dist > 1e-6
  double ratio_one_minus_phi = 0.0;   // (1 - phi) / dist^2
  double ratio_one_minus_root = 0.0;  // (1 - sqrt(phi)) / dist^2
  GaussFitResult fit;
};

// Normalizes each slot, evaluates the functional and the Gaussian distance.
// Throws ConvergenceError if the contraction bound is violated beyond 1e-9
// or the fit fails; UsageError on vanishing slots.
DeficitReport deficit_report(const AnyFun& f, const AnyFun& g);

// ---- second-order sweep ----------------------------------------------------

struct SweepPoint {
  double eps = 0.0;
  double phi = 0.0;
  double deficit = 0.0;
};

struct SweepReport {
  int d = 1;
  double c2 = 0.0, c3 = 0.0;     // fitted deficit ~ c2 eps^2 + c3 eps^3
  double c2_predicted = 0.0;     // ||(f,g)||^2 - Q(f,g) from the quadratic form
  double fit_residual = 0.0;     // max |data - model| / eps^2 over the grid
  std::vector<SweepPoint> points;
};

// Sweeps Phi along (F + eps dir_f, F + eps dir_g) and extracts the
// second-order deficit coefficient by weighted least squares.  Directions
// must satisfy the admissibility constraints (checked to 1e-10); the
// predicted coefficient comes from the operator quadratic form.
SweepReport second_order_sweep(const GaussPolyFun& dir_f,
                               const GaussPolyFun& dir_g,
                               double eps_lo = 0.002, double eps_hi = 0.02,
                               int n_eps = 9);

// ---- sharp constant probe --------------------------------------------------

struct ProbeEntry {
  int m = 2;              // eigen index of the perturbing direction
  bool antisym = false;   // (psi_m, -psi_m) instead of (psi_m, psi_m)
  double c2_deficit = 0.0;
  double d2_dist = 0.0;   // second-order coefficient of dist^2
  double limit_ratio = 0.0;       // c2_deficit / d2_dist
  double limit_ratio_root = 0.0;  // for (1 - sqrt(phi)) / dist^2, report only
};

struct ProbeReport {
  int d = 1;
  std::vector<ProbeEntry> entries;
  double min_ratio = 0.0;  // over symmetric entries
  int argmin_m = 0;
  double predicted_local_constant = 0.0;  // d / (2 (d + 1))
};

// Measures the limiting ratio (1 - phi) / dist^2 along each eigen direction
// m = m_lo .. m_hi plus one antisymmetric pair at m_lo.
ProbeReport sharp_constant_probe(int d, int m_lo = 2, int m_hi = 8,
                                 double eps_lo = 0.002, double eps_hi = 0.02,
                                 int n_eps = 7);

// ---- randomized stability scan ---------------------------------------------

struct ScanSample {
  int index = 0;
  double deficit = 0.0;
  double dist = 0.0;
  double ratio = 0.0;  // deficit / dist^2 when measurable
  bool has_ratio = false;
  bool control = false;  // planted pure-Gaussian pair
};

struct ScanReport {
  int d = 1;
  int n = 0;
  std::uint64_t seed = 0;
  double amp = 0.1;
  double min_deficit = 0.0;
  double min_ratio = 0.0, max_ratio = 0.0, mean_ratio = 0.0;
  int n_ratio = 0;
  std::vector<ScanSample> samples;
};

// Draws random eigen-direction perturbations of the Gaussian, hides each
// pair inside the symmetry group, and reports deficits and ratios.  Every
// 25th sample is a pure-Gaussian control pair, excluded from ratio stats.
ScanReport random_stability_scan(int d, int n, std::uint64_t seed,
                                 double amp = 0.1);

// ---- Fourier invariance ----------------------------------------------------

struct FourierInvarianceReport {
  int d = 1;
  std::vector<double> diffs;  // |pn(fhat, ghat) - pn(f, g)| per pair
  double max_diff = 0.0;
};

FourierInvarianceReport fourier_invariance_check(int d, int n,
                                                 std::uint64_t seed);

// ---- Lorentz ratio scan ----------------------------------------------------

struct LorentzEntry {
  std::string config;
  double pn = 0.0;        // projection norm of the pair
  double l24_f = 0.0, l24_g = 0.0;
  double ratio = 0.0;     // pn / (l24_f l24_g)
};

struct LorentzReport {
  std::string family;  // "gauss" or "indicator"
  int d = 1;
  std::vector<LorentzEntry> entries;
  double max_ratio = 0.0;
  double invariance_err = 0.0;  // relative spread under joint dilation
};

// Ratios ||P(f x g)|| / (||f||_{2,4} ||g||_{2,4}) over a seeded family of
// polynomial Gaussians or radial indicator sets, with a dilation sweep
// verifying scale invariance of each ratio.
LorentzReport lorentz_ratio_scan(const std::string& family, int d, int n,
                                 std::uint64_t seed);

}  // namespace radlab
