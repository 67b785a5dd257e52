#pragma once

// Quadrature rules used throughout: Gauss-Legendre and Gauss-Jacobi via
// Golub-Welsch on the monic three-term recurrence, and an adaptive
// Gauss-Kronrod 7/15 integrator for the piecewise-smooth radial integrands
// of the set-geometry checks.

#include <functional>
#include <vector>

#include "radlab/common.hpp"

namespace radlab {

struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n-point Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree
// <= 2n - 1, weights positive and summing to 2.
QuadRule gauss_legendre(int n);

// Gauss-Legendre mapped onto [a, b].
QuadRule gauss_legendre_ab(int n, double a, double b);

// n-point Gauss-Jacobi rule on [-1, 1] for the weight (1-x)^A (1+x)^B,
// A, B > -1.  The weights absorb the weight function: sum_i w_i h(x_i)
// approximates int h(x) (1-x)^A (1+x)^B dx.
QuadRule gauss_jacobi(int n, double A, double B);

// Beta-weight rule on [0, 1]: sum_i w_i h(u_i) approximates
// int_0^1 h(u) u^{a-1} (1-u)^{b-1} du, a, b > 0.  Total weight is B(a, b).
// This is the backbone of the theta-reduction of the product projection.
QuadRule gauss_beta01(int n, double a, double b);

// One 7/15 Gauss-Kronrod panel on [a, b]; the difference of the two
// embedded estimates drives the adaptive subdivision.
struct GK15Panel {
  double gauss;
  double kronrod;
};
GK15Panel gk15_panel(const std::function<double(double)>& f, double a, double b);

struct QuadResult {
  double value;
  double abs_error;   // accumulated |K15 - G7| over accepted panels
  int evaluations;
};

// Adaptive bisection on [a, b] until each panel's |K15 - G7| passes its
// share of max(abs_tol, rel_tol * |whole|).  Throws ConvergenceError when
// the depth limit is hit with the tolerance still unmet.
QuadResult adaptive_gk15(const std::function<double(double)>& f, double a,
                         double b, double abs_tol = 1e-12,
                         double rel_tol = 1e-12, int max_depth = 48);

}  // namespace radlab
