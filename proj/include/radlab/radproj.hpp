#pragma once

// The bilinear product projection: averaging a tensor product f(x) g(y)
// over the spheres |(x, y)| = r of R^d x R^d yields a radial function of
// z = (x, y) in R^{2d}.  With t = |y|^2 / r^2 distributed Beta(d/2, d/2),
//   P(f (x) g)(z) = E_t[ f(r sqrt(1 - t)) g(r sqrt(t)) ],   r = |z|.
//
// Equal-width analytic pairs reduce exactly: the coefficient of |z|^{2n}
// collects sum_{j+k=n} p_j q_k * sphere_moment(d, j, k).  Everything else
// goes through the Beta-weighted quadrature on a 2d radial grid.

#include <functional>
#include <variant>

#include "radlab/funcspace.hpp"

namespace radlab {

// Radial function on R^{2d}; the stored representation has ambient
// dimension 2 * pair_dim.
struct RadialFun2d {
  int pair_dim = 1;
  std::variant<GaussPolyFun, ProfileFun> fn;
};

AnyFun as_anyfun(const RadialFun2d& h);

// Beta-weighted theta average at radius r:
//   (1/B(d/2, d/2)) int_0^1 u(r sqrt(1-t)) v(r sqrt(t)) t^{d/2-1}(1-t)^{d/2-1} dt
// with an ntheta-point Gauss rule for the weight (exact for polynomial
// integrands of the split variable up to degree 2 ntheta - 1).
cplx theta_reduction(const std::function<cplx(double)>& u,
                     const std::function<cplx(double)>& v, int d, double r,
                     int ntheta = 96);

// Projection of a tensor pair.  Analytic inputs with matching widths take
// the closed form; any other combination is sampled onto a 2d radial grid
// of n2d nodes (monomial factors must then be constant, since only radial
// functions admit a profile).
RadialFun2d project_tensor(const AnyFun& f, const AnyFun& g, int n2d = 256,
                           int ntheta = 96);

// Quadrature path unconditionally; the cross-representation check compares
// this against the closed form.
RadialFun2d project_tensor_sampled(const AnyFun& f, const AnyFun& g,
                                   int n2d = 256, int ntheta = 96);

// || P(f (x) g) ||_{L^2(R^{2d})}; never exceeds ||f|| ||g||.
double projection_norm(const AnyFun& f, const AnyFun& g);

// <P(f (x) g), h> for radial h on R^{2d}.
cplx pair_with_radial(const AnyFun& f, const AnyFun& g, const RadialFun2d& h);
cplx pair_with_radial(const AnyFun& f, const AnyFun& g, const GaussPolyFun& h);

}  // namespace radlab
