#pragma once

// Closed-form scalar kernels: gamma-family special functions, sphere areas,
// the operator eigenvalue sequence, sphere moments and gaussian radial
// moments.  Everything downstream (quadrature checks, the spectral solver,
// the set geometry) reduces to these.

#include <vector>

#include "radlab/common.hpp"

namespace radlab {

// log Gamma(x) for x > 0, Lanczos approximation (g = 7, 9 published
// coefficients).  Relative error of exp(log_gamma) is ~1e-15 on [0.5, 200].
// Throws DomainError for x <= 0.
double log_gamma(double x);

// log Beta(a, b) = log_gamma(a) + log_gamma(b) - log_gamma(a + b), a, b > 0.
double log_beta(double a, double b);
double beta_fn(double a, double b);

// Surface measure of the unit sphere S^{n-1} in R^n:
//   sphere_area(n) = 2 pi^{n/2} / Gamma(n/2),  n >= 1.
// sphere_area(1) = 2 (two points), sphere_area(2) = 2 pi, sphere_area(3) = 4 pi.
double sphere_area(int n);

// Eigenvalue sequence of the radial product-projection operator:
//   lambda(d, m) = Gamma(m + d/2) Gamma(d) / (Gamma(m + d) Gamma(d/2)),
// d >= 1, m >= 0.  lambda(d, 0) = 1 and lambda(d, 1) = 1/2 exactly; the
// sequence is strictly decreasing in m with ratio (m + d/2)/(m + d).
double eigenvalue_lambda(int d, int m);

// Moment of the split of squared norm across the two factors of R^d x R^d
// on the unit sphere S^{2d-1}: with t = |y|^2 distributed Beta(d/2, d/2),
//   sphere_moment(d, j, k) = E[(1 - t)^j t^k] = B(j + d/2, k + d/2) / B(d/2, d/2).
// Symmetric in (j, k); sphere_moment(d, m, 0) = eigenvalue_lambda(d, m).
double sphere_moment(int d, int j, int k);

// Even direction moment on S^{d-1}: for a multi-index beta (length d),
//   E[xi^{2 beta}] = Gamma(d/2)/Gamma(d/2 + |beta|) * prod Gamma(beta_i + 1/2)/Gamma(1/2).
double direction_even_moment(int d, const std::vector<int>& beta);

// Gaussian radial moment over R^d, Re c > 0, s >= 0:
//   grm(d, s, c) = int |x|^{2s} e^{-c |x|^2} dx
//               = (sphere_area(d)/2) c^{-(s + d/2)} Gamma(s + d/2),
// principal branch of c^{-(s+d/2)}.  grm(d, 0, c) = (pi/c)^{d/2}.
cplx gaussian_radial_moment(int d, int s, cplx c);

// Moments grm(d, 0..smax, c) in one pass via the exact recursion
//   grm(d, s+1, c) = grm(d, s, c) * (s + d/2) / c,
// seeded with grm(d, 0, c) = (pi/c)^{d/2}.  This is the form the inner-product
// loops consume; it agrees with the closed form to machine precision.
std::vector<cplx> gaussian_radial_moments(int d, int smax, cplx c);

// Regularized incomplete beta I_x(a, b), x in [0, 1], a, b > 0, via the
// continued fraction (modified Lentz) with the symmetry switch at
// x = (a+1)/(a+b+2).  Absolute error ~1e-15.
double regularized_incomplete_beta(double x, double a, double b);

// Unnormalized incomplete beta int_0^u t^{a-1} (1-t)^{b-1} dt
//   = regularized_incomplete_beta(u, a, b) * Beta(a, b).
double incomplete_beta(double u, double a, double b);

// Binomial coefficient as a double, exact for the ranges used here (n <= 60).
double binomial(int n, int k);

}  // namespace radlab
