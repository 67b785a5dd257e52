#pragma once

// Function-space layer: the concrete representations of square-integrable
// inputs and the exact operations on them.
//
// Three representations cover everything the laboratory manipulates:
//   GaussPolyFun     radial polynomial-times-gaussian  P(|x|^2) e^{-w |x|^2}
//   MonomialGaussFun monomial-times-gaussian           c x^alpha e^{-w |x|^2}
//   ProfileFun       sampled radial profile on a quadrature grid
// plus GaussPolySum, a finite sum of GaussPolyFun with distinct widths
// (closed under the gauge group; inner products stay exact pairwise).
//
// Inner products between analytic representations are closed-form gamma
// sums; anything involving a profile is radial quadrature on its grid.

#include <functional>
#include <variant>
#include <vector>

#include "radlab/common.hpp"

namespace radlab {

struct GaussPolyFun {
  int d = 1;                            // ambient dimension
  cplx width{0.5 * kPi, 0.0};           // w, Re w > 0
  std::vector<cplx> coeffs{cplx(1.0)};  // p_j multiplying |x|^{2j}
};

struct MonomialGaussFun {
  int d = 1;
  std::vector<int> alpha{0};  // per-coordinate exponents, length d
  cplx coeff{1.0};
  cplx width{0.5 * kPi, 0.0};
};

struct ProfileFun {
  int d = 1;
  std::vector<double> nodes;    // radii, strictly increasing, >= 16 of them
  std::vector<double> weights;  // plain dr quadrature weights on the nodes
  std::vector<cplx> values;     // samples u(r_i)
};

struct GaussPolySum {
  int d = 1;
  std::vector<GaussPolyFun> terms;
};

using AnyFun = std::variant<GaussPolyFun, MonomialGaussFun, ProfileFun>;

// Structural validation; every public operation routes its inputs through
// these and throws DomainError / UsageError on violation.
void check(const GaussPolyFun& f);
void check(const MonomialGaussFun& f);
void check(const ProfileFun& f);
void check(const AnyFun& f);

int dimension(const AnyFun& f);

// The unit-norm standard gaussian F(x) = e^{-pi |x|^2 / 2}.
GaussPolyFun standard_gaussian(int d);

// Pure gaussian E_w(x) = e^{-w |x|^2}.
GaussPolyFun pure_gaussian(int d, cplx w);

// Drop trailing coefficients below 1e-15 of the largest magnitude; keeps at
// least the constant term.  Canonical form for serialization round-trips.
void trim(GaussPolyFun& f);

cplx eval_radial(const GaussPolyFun& f, double r);
cplx eval_radial(const ProfileFun& f, double r);  // linear interpolation

// Radial evaluator view for quadrature loops; throws UsageError for
// monomials (not radial unless constant).
std::function<cplx(double)> radial_evaluator(const AnyFun& f);

// ---- inner products and norms ---------------------------------------------
// inner(f, g) = int f conj(g); conjugate-linear in the second slot.
cplx inner(const GaussPolyFun& f, const GaussPolyFun& g);
cplx inner(const MonomialGaussFun& f, const MonomialGaussFun& g);
cplx inner(const GaussPolyFun& f, const MonomialGaussFun& g);
cplx inner(const MonomialGaussFun& f, const GaussPolyFun& g);
cplx inner(const ProfileFun& f, const ProfileFun& g);
cplx inner(const GaussPolyFun& f, const ProfileFun& g);
cplx inner(const ProfileFun& f, const GaussPolyFun& g);
cplx inner(const AnyFun& f, const AnyFun& g);

double norm(const AnyFun& f);
double norm(const GaussPolyFun& f);
double norm(const ProfileFun& f);

// GaussPolySum algebra: exact pairwise closed forms.
cplx inner(const GaussPolySum& f, const GaussPolySum& g);
cplx inner(const GaussPolySum& f, const GaussPolyFun& g);
double norm(const GaussPolySum& f);
GaussPolySum sum_of(const GaussPolyFun& a);
void add_term(GaussPolySum& s, const GaussPolyFun& t, cplx scale = cplx(1.0));

// Same-width polynomial arithmetic (width mismatch beyond 1e-12 relative is
// a UsageError; use GaussPolySum for mixed widths).
GaussPolyFun gp_add(const GaussPolyFun& a, const GaussPolyFun& b);
GaussPolyFun gp_scale(const GaussPolyFun& a, cplx s);
GaussPolyFun gp_mul_radius2(const GaussPolyFun& a);  // multiply by |x|^2

// ---- symmetry group --------------------------------------------------------
// dilate(f, rho):        x -> f(rho x); with normalized = true the L^2
//                        invariant form rho^{d/2} f(rho x).
// modulate(f, t):        x -> e^{i t |x|^2} f(x).
GaussPolyFun dilate(const GaussPolyFun& f, double rho, bool normalized);
MonomialGaussFun dilate(const MonomialGaussFun& f, double rho, bool normalized);
ProfileFun dilate(const ProfileFun& f, double rho, bool normalized);
AnyFun dilate(const AnyFun& f, double rho, bool normalized);
GaussPolyFun modulate(const GaussPolyFun& f, double t);
MonomialGaussFun modulate(const MonomialGaussFun& f, double t);
ProfileFun modulate(const ProfileFun& f, double t);
AnyFun modulate(const AnyFun& f, double t);
GaussPolySum dilate(const GaussPolySum& f, double rho, bool normalized);
GaussPolySum modulate(const GaussPolySum& f, double t);

// ---- Fourier transform -----------------------------------------------------
// Convention  f^(xi) = int e^{-2 pi i x . xi} f(x) dx;  the class of radial
// polynomial gaussians is closed: width w maps to pi^2 / w.  fourier twice
// is the identity on this even class.
GaussPolyFun fourier(const GaussPolyFun& f);
// A monomial gaussian maps to a finite sum of monomial gaussians sharing
// width pi^2 / w (single-term only when every exponent is 0 or 1).
std::vector<MonomialGaussFun> fourier(const MonomialGaussFun& f);
cplx inner(const std::vector<MonomialGaussFun>& f,
           const std::vector<MonomialGaussFun>& g);

// ---- Lorentz quasinorm -----------------------------------------------------
// ||f||_{L^{2,4}} = (4 int_0^inf tau^3 lambda_f(tau)^2 dtau)^{1/4} with
// lambda_f the distribution function; equals |A|^{1/2} for indicators and is
// invariant under normalized dilation.
double lorentz_24_norm(const GaussPolyFun& f);
double lorentz_24_norm(const ProfileFun& f);

// ---- representation conversion --------------------------------------------
// Sample onto a Gauss-Legendre radial grid of n >= 16 nodes on [0, rmax];
// rmax <= 0 selects sqrt(40 / Re width) so the discarded tail is below
// e^{-40} of the peak.
ProfileFun to_profile(const GaussPolyFun& f, int n = 128, double rmax = 0.0);
ProfileFun to_profile(const AnyFun& f, int n = 128, double rmax = 0.0);

}  // namespace radlab
