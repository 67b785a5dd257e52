#pragma once

// Spectral decomposition of the radial averaging operator
//   (T f)(x) = integral F(y) * P(f (x) F)(x, y) dy
// on the weighted space spanned by |x|^{2m} F.  T is self-adjoint, lower
// triangular in the monomial chain, and has eigenvalues lambda(d, m) with
// radial polynomial eigenfunctions psi_m = q_m(|x|^2) F.

#include <vector>

#include "radlab/funcspace.hpp"

namespace radlab {

// ---- operator application --------------------------------------------------

// Applies T to a radial polynomial Gaussian.  The input must be in the unit
// gauge (width exactly pi/2 up to 1e-14); dilate and modulate into gauge
// before calling.  Output has the same width and degree.
GaussPolyFun apply_t(const GaussPolyFun& f);

// Applies T to a monomial Gaussian x^alpha exp(-pi |x|^2 / 2).  Odd moments
// vanish; even ones reduce to the radial chain through the directional
// average, so the image is always radial.
GaussPolyFun apply_t(const MonomialGaussFun& f);

// ---- eigenbasis ------------------------------------------------------------

struct SpectralBasis {
  int d = 1;
  int max_m = 12;
  // psi[m] is the orthonormal eigenfunction of eigenvalue lambda(d, m),
  // normalized with positive leading coefficient.
  std::vector<GaussPolyFun> psi;
  // ||(T - lambda_m) psi_m|| measured in the function norm.
  std::vector<double> eigen_residual;
  // Rayleigh quotient <T psi_m, psi_m>, recomputed through the operator.
  std::vector<double> lambda_rayleigh;
  // max |<psi_i, psi_j> - delta_ij| over the constructed family.
  double gram_deviation = 0.0;
};

// Builds psi_0 .. psi_max_m by twice-reorthogonalized Gram-Schmidt on the
// scaled monomial chain.  All internal linear algebra runs in quadruple
// precision; the returned coefficients are rounded to double.  max_m is
// capped at 40: beyond that the monomial chain falls below numerical rank
// even in quadruple precision.
SpectralBasis build_spectral_basis(int d, int max_m);

// Orthonormal psi_m for a single m without building the whole family.
GaussPolyFun eigenfunction(int d, int m);

// ---- constrained quadratic form --------------------------------------------

struct QuadFormResult {
  // <Tf, f> + 2 Re <Tf, g> + <Tg, g>; the form controlled by the bound.
  double proof_form = 0.0;
  // ||Tf||^2 + 2 Re <Tf, g> + ||Tg||^2; reported for side-by-side display,
  // never asserted against the bound.
  double statement_form = 0.0;
  // (d + 2) / (2 (d + 1)) * (||f||^2 + ||g||^2).
  double bound = 0.0;
  // bound - proof_form; nonnegative up to roundoff on admissible pairs.
  double slack = 0.0;
};

// Evaluates the quadratic form under the admissibility constraints
//   <f, psi_0> = <g, psi_0> = 0   and   <f + g, psi_1> = 0.
// Throws DomainError if a constraint is violated beyond constraint_tol
// (scaled by max(1, norm)).
QuadFormResult t_quadratic_form(const GaussPolyFun& f, const GaussPolyFun& g,
                                double constraint_tol = 1e-10);

}  // namespace radlab
