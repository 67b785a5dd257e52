#include "radlab/radproj.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "radlab/quadrature.hpp"
#include "radlab/scalars.hpp"

namespace radlab {

namespace {

// Cached Beta(d/2, d/2) rules; the laboratory is single-threaded by design
// (deterministic summation order), so a plain static map suffices.
const QuadRule& beta_rule(int ntheta, int d) {
  static std::map<std::pair<int, int>, QuadRule> cache;
  const auto key = std::make_pair(ntheta, d);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, gauss_beta01(ntheta, 0.5 * d, 0.5 * d)).first;
  return it->second;
}

double effective_radius(const AnyFun& f) {
  if (std::holds_alternative<ProfileFun>(f))
    return std::get<ProfileFun>(f).nodes.back();
  if (std::holds_alternative<GaussPolyFun>(f))
    return std::sqrt(40.0 / std::get<GaussPolyFun>(f).width.real());
  return std::sqrt(40.0 / std::get<MonomialGaussFun>(f).width.real());
}

bool widths_match(cplx a, cplx b) {
  return std::abs(a - b) <= 1e-12 * (std::abs(a) + std::abs(b));
}

// Closed-form branch helpers.  Each analytic factor contributes either a
// polynomial coefficient list (radial part) or a fixed even monomial whose
// angular average multiplies in as a direction moment.
struct AnalyticFactor {
  cplx width;
  std::vector<cplx> coeffs;  // radial polynomial in |.|^2
  int beta_total = 0;        // |beta| for a monomial x^{2 beta}
  double angular = 1.0;      // direction_even_moment of beta
  bool zero = false;         // odd monomial: projects to zero
};

AnalyticFactor analyze(const AnyFun& f, int d) {
  AnalyticFactor out;
  if (std::holds_alternative<GaussPolyFun>(f)) {
    const auto& g = std::get<GaussPolyFun>(f);
    out.width = g.width;
    out.coeffs = g.coeffs;
    return out;
  }
  const auto& m = std::get<MonomialGaussFun>(f);
  out.width = m.width;
  std::vector<int> beta(d);
  for (int i = 0; i < d; ++i) {
    if (m.alpha[i] % 2 == 1) {
      out.zero = true;
      return out;
    }
    beta[i] = m.alpha[i] / 2;
    out.beta_total += beta[i];
  }
  out.angular = direction_even_moment(d, beta);
  out.coeffs.assign(out.beta_total + 1, cplx(0.0));
  out.coeffs[out.beta_total] = m.coeff;
  return out;
}

RadialFun2d project_closed(const AnalyticFactor& a, const AnalyticFactor& b,
                           int d) {
  RadialFun2d out;
  out.pair_dim = d;
  GaussPolyFun h;
  h.d = 2 * d;
  h.width = a.width;
  if (a.zero || b.zero) {
    h.coeffs = {cplx(0.0)};
    out.fn = std::move(h);
    return out;
  }
  const int da = int(a.coeffs.size()) - 1, db = int(b.coeffs.size()) - 1;
  h.coeffs.assign(da + db + 1, cplx(0.0));
  // sum_{j,k} p_j q_k E[(1-t)^j t^k] |z|^{2(j+k)}; for monomial factors the
  // radial power j is |beta| and the angular moment scales the whole term.
  for (int j = 0; j <= da; ++j) {
    if (a.coeffs[j] == cplx(0.0)) continue;
    for (int k = 0; k <= db; ++k) {
      if (b.coeffs[k] == cplx(0.0)) continue;
      h.coeffs[j + k] +=
          a.coeffs[j] * b.coeffs[k] * sphere_moment(d, j, k);
    }
  }
  const double ang = a.angular * b.angular;
  if (ang != 1.0)
    for (cplx& c : h.coeffs) c *= ang;
  trim(h);
  out.fn = std::move(h);
  return out;
}

}  // namespace

AnyFun as_anyfun(const RadialFun2d& h) {
  if (std::holds_alternative<GaussPolyFun>(h.fn))
    return std::get<GaussPolyFun>(h.fn);
  return std::get<ProfileFun>(h.fn);
}

cplx theta_reduction(const std::function<cplx(double)>& u,
                     const std::function<cplx(double)>& v, int d, double r,
                     int ntheta) {
  if (d < 1) throw DomainError("theta_reduction: dimension must be >= 1");
  if (r < 0.0) throw DomainError("theta_reduction: radius must be >= 0");
  if (ntheta < 4) throw UsageError("theta_reduction: need at least 4 nodes");
  const QuadRule& rule = beta_rule(ntheta, d);
  const double z = beta_fn(0.5 * d, 0.5 * d);
  NeumaierSumC acc;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double t = rule.nodes[i];
    acc.add(rule.weights[i] * u(r * std::sqrt(1.0 - t)) *
            v(r * std::sqrt(t)));
  }
  return acc.value() / z;
}

RadialFun2d project_tensor_sampled(const AnyFun& f, const AnyFun& g, int n2d,
                                   int ntheta) {
  check(f);
  check(g);
  const int d = dimension(f);
  if (d != dimension(g)) throw UsageError("project_tensor: dimension mismatch");
  if (n2d < 16) throw UsageError("project_tensor: need at least 16 grid nodes");
  const auto ue = radial_evaluator(f);  // throws for non-radial monomials
  const auto ve = radial_evaluator(g);
  const double rmax =
      std::hypot(effective_radius(f), effective_radius(g));
  const QuadRule grid = gauss_legendre_ab(n2d, 0.0, rmax);
  ProfileFun p;
  p.d = 2 * d;
  p.nodes = grid.nodes;
  p.weights = grid.weights;
  p.values.resize(n2d);
  for (int i = 0; i < n2d; ++i)
    p.values[i] = theta_reduction(ue, ve, d, grid.nodes[i], ntheta);
  RadialFun2d out;
  out.pair_dim = d;
  out.fn = std::move(p);
  return out;
}

RadialFun2d project_tensor(const AnyFun& f, const AnyFun& g, int n2d,
                           int ntheta) {
  check(f);
  check(g);
  const int d = dimension(f);
  if (d != dimension(g)) throw UsageError("project_tensor: dimension mismatch");
  const bool fa = !std::holds_alternative<ProfileFun>(f);
  const bool ga = !std::holds_alternative<ProfileFun>(g);
  if (fa && ga) {
    const AnalyticFactor A = analyze(f, d);
    const AnalyticFactor B = analyze(g, d);
    if (A.zero || B.zero || widths_match(A.width, B.width))
      return project_closed(A, B, d);
  }
  return project_tensor_sampled(f, g, n2d, ntheta);
}

double projection_norm(const AnyFun& f, const AnyFun& g) {
  const RadialFun2d h = project_tensor(f, g);
  if (std::holds_alternative<GaussPolyFun>(h.fn))
    return norm(std::get<GaussPolyFun>(h.fn));
  return norm(std::get<ProfileFun>(h.fn));
}

cplx pair_with_radial(const AnyFun& f, const AnyFun& g, const RadialFun2d& h) {
  const RadialFun2d p = project_tensor(f, g);
  if (2 * h.pair_dim != 2 * p.pair_dim)
    throw UsageError("pair_with_radial: dimension mismatch");
  return inner(as_anyfun(p), as_anyfun(h));
}

cplx pair_with_radial(const AnyFun& f, const AnyFun& g, const GaussPolyFun& h) {
  check(h);
  const int d = dimension(f);
  if (h.d != 2 * d)
    throw UsageError("pair_with_radial: h must live on R^{2d}");
  RadialFun2d hh;
  hh.pair_dim = d;
  hh.fn = h;
  return pair_with_radial(f, g, hh);
}

}  // namespace radlab
