#pragma once

// Radial set geometry: unions of annuli, the section measure sigma_r of a
// product set on the sphere |(x,y)| = r, and empirical ratio checks of the
// section-measure inequalities.
//
// With t = |y|^2 / r^2 ~ Beta(d/2, d/2) on the sphere of radius r in
// R^d x R^d, the section measure of A x B is the Beta mass of
//   { t : r sqrt(1-t) in A,  r sqrt(t) in B },
// a finite union of intervals whose endpoints come from the annulus radii;
// each piece is an incomplete-beta difference, so sigma_r is exact up to
// the special-function kernels.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "radlab/common.hpp"

namespace radlab {

struct RadialSet {
  int d = 1;
  // Disjoint half-open annuli [a, b), ascending, 0 <= a < b <= next a.
  std::vector<std::pair<double, double>> annuli;
};

void check(const RadialSet& s);
RadialSet ball(int d, double radius);
RadialSet annulus(int d, double a, double b);
RadialSet scale_set(const RadialSet& s, double factor);
std::string describe(const RadialSet& s);

// Lebesgue measure sum_i (sphere_area(d)/d) (b_i^d - a_i^d).
double measure(const RadialSet& s);

// L^{2,4} quasinorm of the indicator: rearrangement collapses to |A|^{1/2}.
double lorentz_24_norm(const RadialSet& s);

// Section measure sigma_r(A x B); a probability, 1 exactly when the section
// sphere lies inside A x B and 0 when it misses it.
double sigma_r(const RadialSet& A, const RadialSet& B, double r);

// Monte Carlo estimate of the same quantity from n uniform sphere points.
double sigma_r_monte_carlo(const RadialSet& A, const RadialSet& B, double r,
                           int n, std::uint64_t seed);

// Measure of the radial set {z in R^{2d} : |z| in E} for a disjoint union
// of radius intervals: mu(E) = sphere_area(2d) sum (hi^{2d} - lo^{2d})/(2d).
double mu_measure(int d, const std::vector<std::pair<double, double>>& E);

// || P(1_A (x) 1_B) || = sqrt( omega_d int sigma_r^2 r^{2d-1} dr ) with
// omega_d = sphere_area(2d).  Verifies the first-moment identity
// omega_d int sigma_r r^{2d-1} dr = |A| |B| to 1e-8 relative as a built-in
// self-check and throws ConvergenceError on failure.
double indicator_projection_norm(const RadialSet& A, const RadialSet& B);

// Relative residual of the first-moment identity (exposed for tests).
double first_moment_residual(const RadialSet& A, const RadialSet& B);

// int sigma_r(A x B)^2 r^{2d-1} dr (no omega factor, as in the L^2 lemma).
double sigma_sq_integral(const RadialSet& A, const RadialSet& B);

// omega_d int_E sigma_r(A x B) r^{2d-1} dr = <P(1_A (x) 1_B), 1_{A_E}>.
double pairing_with_window(const RadialSet& A, const RadialSet& B,
                           const std::vector<std::pair<double, double>>& E);

// One empirical ratio check of an inequality: observed quantity divided by
// its envelope, never asserted against a constant.
struct BoundReport {
  std::string lemma;
  std::string config;
  double ratio = 0.0;
  double attained_at = 0.0;
  bool finite = true;
  std::vector<std::pair<std::string, double>> params;
};

// sigma_r <= C min(1, r^{-d}|A|, r^{-d}|B|)^{1/2}: worst observed ratio over
// a radius grid, plus the exact-scale-invariance residual in params.
BoundReport check_sigma_pointwise(const RadialSet& A, const RadialSet& B,
                                  int nr = 400);

// int sigma^2 r^{2d-1} dr <= C min(|A|/|B|, |B|/|A|)^{1/5} |A| |B|.
BoundReport check_l2_bound(const RadialSet& A, const RadialSet& B);

// Pairing <= C min(|A||B|/mu, mu/|A||B|)^{1/6} (|A||B| mu)^{1/2}.
BoundReport check_pairing_bound(const RadialSet& A, const RadialSet& B,
                                const std::vector<std::pair<double, double>>& E);

// Pairing <= C Lambda(|A|, |B|, mu^{1/2})^gamma (|A||B| mu)^{1/2} where
// Lambda is the smallest pairwise ratio; the exponent gamma is a parameter.
BoundReport check_combined_bound(const RadialSet& A, const RadialSet& B,
                                 const std::vector<std::pair<double, double>>& E,
                                 double gamma_exp);

// Deterministic eccentric families plus seeded random multi-annulus pairs;
// every config contributes all four reports.
std::vector<BoundReport> bound_sweep(int d, int n_configs, std::uint64_t seed,
                                     double gamma_exp);

}  // namespace radlab
