#include "radlab/funcspace.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "radlab/quadrature.hpp"
#include "radlab/scalars.hpp"

namespace radlab {

// ---- validation ------------------------------------------------------------

void check(const GaussPolyFun& f) {
  if (f.d < 1) throw DomainError("GaussPolyFun: dimension must be >= 1");
  if (!(f.width.real() > 0.0))
    throw DomainError("GaussPolyFun: Re(width) must be positive");
  if (f.coeffs.empty())
    throw UsageError("GaussPolyFun: coefficient list may not be empty");
}

void check(const MonomialGaussFun& f) {
  if (f.d < 1) throw DomainError("MonomialGaussFun: dimension must be >= 1");
  if (!(f.width.real() > 0.0))
    throw DomainError("MonomialGaussFun: Re(width) must be positive");
  if (int(f.alpha.size()) != f.d)
    throw UsageError("MonomialGaussFun: exponent list must have length d");
  for (int a : f.alpha)
    if (a < 0) throw DomainError("MonomialGaussFun: exponents must be >= 0");
}

void check(const ProfileFun& f) {
  if (f.d < 1) throw DomainError("ProfileFun: dimension must be >= 1");
  const size_t n = f.nodes.size();
  if (n < 16) throw UsageError("ProfileFun: need at least 16 radial nodes");
  if (f.weights.size() != n || f.values.size() != n)
    throw UsageError("ProfileFun: nodes/weights/values sizes must agree");
  if (f.nodes.front() < 0.0)
    throw DomainError("ProfileFun: radii must be nonnegative");
  for (size_t i = 1; i < n; ++i)
    if (!(f.nodes[i] > f.nodes[i - 1]))
      throw DomainError("ProfileFun: radii must be strictly increasing");
}

void check(const AnyFun& f) {
  std::visit([](const auto& g) { check(g); }, f);
}

int dimension(const AnyFun& f) {
  return std::visit([](const auto& g) { return g.d; }, f);
}

GaussPolyFun standard_gaussian(int d) {
  GaussPolyFun f;
  f.d = d;
  f.width = cplx(0.5 * kPi, 0.0);
  f.coeffs = {cplx(1.0)};
  check(f);
  return f;
}

GaussPolyFun pure_gaussian(int d, cplx w) {
  GaussPolyFun f;
  f.d = d;
  f.width = w;
  f.coeffs = {cplx(1.0)};
  check(f);
  return f;
}

void trim(GaussPolyFun& f) {
  double peak = 0.0;
  for (const cplx& c : f.coeffs) peak = std::max(peak, std::abs(c));
  size_t n = f.coeffs.size();
  while (n > 1 && std::abs(f.coeffs[n - 1]) <= 1e-15 * peak) --n;
  f.coeffs.resize(n);
}

cplx eval_radial(const GaussPolyFun& f, double r) {
  const double u = r * r;
  cplx p(0.0);
  for (size_t j = f.coeffs.size(); j-- > 0;) p = p * u + f.coeffs[j];
  return p * std::exp(-f.width * u);
}

cplx eval_radial(const ProfileFun& f, double r) {
  if (r <= f.nodes.front()) return f.values.front();
  if (r >= f.nodes.back()) return cplx(0.0);
  const auto it = std::upper_bound(f.nodes.begin(), f.nodes.end(), r);
  const size_t i = size_t(it - f.nodes.begin());
  const double t = (r - f.nodes[i - 1]) / (f.nodes[i] - f.nodes[i - 1]);
  return f.values[i - 1] * (1.0 - t) + f.values[i] * t;
}

std::function<cplx(double)> radial_evaluator(const AnyFun& f) {
  check(f);
  if (std::holds_alternative<MonomialGaussFun>(f)) {
    const auto& m = std::get<MonomialGaussFun>(f);
    // A constant monomial is radial; anything else has no radial profile.
    int total = 0;
    for (int a : m.alpha) total += a;
    if (total != 0)
      throw UsageError("radial_evaluator: monomial gaussians are not radial");
    return [c = m.coeff, w = m.width](double r) {
      return c * std::exp(-w * (r * r));
    };
  }
  if (std::holds_alternative<GaussPolyFun>(f)) {
    return [g = std::get<GaussPolyFun>(f)](double r) { return eval_radial(g, r); };
  }
  return [p = std::get<ProfileFun>(f)](double r) { return eval_radial(p, r); };
}

// ---- inner products --------------------------------------------------------

cplx inner(const GaussPolyFun& f, const GaussPolyFun& g) {
  check(f);
  check(g);
  if (f.d != g.d) throw UsageError("inner: dimension mismatch");
  const cplx c = f.width + std::conj(g.width);
  const int degf = int(f.coeffs.size()) - 1, degg = int(g.coeffs.size()) - 1;
  const auto mom = gaussian_radial_moments(f.d, degf + degg, c);
  NeumaierSumC acc;
  for (int j = 0; j <= degf; ++j)
    for (int k = 0; k <= degg; ++k)
      acc.add(f.coeffs[j] * std::conj(g.coeffs[k]) * mom[j + k]);
  return acc.value();
}

namespace {

// int_R t^k e^{-c t^2} dt = Gamma((k+1)/2) c^{-(k+1)/2} for even k, else 0.
cplx moment_1d(int k, cplx c) {
  if (k % 2 == 1) return cplx(0.0);
  const double e = 0.5 * (k + 1);
  return std::exp(cplx(log_gamma(e), 0.0) - e * std::log(c));
}

}  // namespace

cplx inner(const MonomialGaussFun& f, const MonomialGaussFun& g) {
  check(f);
  check(g);
  if (f.d != g.d) throw UsageError("inner: dimension mismatch");
  const cplx c = f.width + std::conj(g.width);
  cplx acc = f.coeff * std::conj(g.coeff);
  for (int i = 0; i < f.d; ++i) {
    acc *= moment_1d(f.alpha[i] + g.alpha[i], c);
    if (acc == cplx(0.0)) return acc;
  }
  return acc;
}

cplx inner(const GaussPolyFun& f, const MonomialGaussFun& g) {
  check(f);
  check(g);
  if (f.d != g.d) throw UsageError("inner: dimension mismatch");
  // <P(|x|^2) E_w, c x^alpha E_v> vanishes unless alpha is even; with
  // alpha = 2 beta the angular factor is the direction moment and the
  // radial factor a gaussian radial moment at combined power j + |beta|.
  int total = 0;
  std::vector<int> beta(f.d);
  for (int i = 0; i < f.d; ++i) {
    if (g.alpha[i] % 2 == 1) return cplx(0.0);
    beta[i] = g.alpha[i] / 2;
    total += beta[i];
  }
  const cplx c = f.width + std::conj(g.width);
  const double ang = direction_even_moment(f.d, beta);
  const int degf = int(f.coeffs.size()) - 1;
  const auto mom = gaussian_radial_moments(f.d, degf + total, c);
  NeumaierSumC acc;
  for (int j = 0; j <= degf; ++j) acc.add(f.coeffs[j] * mom[j + total]);
  return acc.value() * std::conj(g.coeff) * ang;
}

cplx inner(const MonomialGaussFun& f, const GaussPolyFun& g) {
  return std::conj(inner(g, f));
}

namespace {

void require_same_grid(const ProfileFun& f, const ProfileFun& g) {
  if (f.nodes.size() != g.nodes.size() || f.nodes != g.nodes ||
      f.weights != g.weights)
    throw UsageError(
        "inner: profile grids differ; resample onto a common grid first");
}

}  // namespace

cplx inner(const ProfileFun& f, const ProfileFun& g) {
  check(f);
  check(g);
  if (f.d != g.d) throw UsageError("inner: dimension mismatch");
  require_same_grid(f, g);
  const double area = sphere_area(f.d);
  NeumaierSumC acc;
  for (size_t i = 0; i < f.nodes.size(); ++i)
    acc.add(f.weights[i] * f.values[i] * std::conj(g.values[i]) *
            std::pow(f.nodes[i], f.d - 1));
  return acc.value() * area;
}

cplx inner(const GaussPolyFun& f, const ProfileFun& g) {
  check(f);
  check(g);
  if (f.d != g.d) throw UsageError("inner: dimension mismatch");
  const double area = sphere_area(f.d);
  NeumaierSumC acc;
  for (size_t i = 0; i < g.nodes.size(); ++i)
    acc.add(g.weights[i] * eval_radial(f, g.nodes[i]) * std::conj(g.values[i]) *
            std::pow(g.nodes[i], f.d - 1));
  return acc.value() * area;
}

cplx inner(const ProfileFun& f, const GaussPolyFun& g) {
  return std::conj(inner(g, f));
}

cplx inner(const AnyFun& f, const AnyFun& g) {
  return std::visit(
      [](const auto& a, const auto& b) -> cplx {
        if constexpr (std::is_same_v<std::decay_t<decltype(a)>, MonomialGaussFun> &&
                      std::is_same_v<std::decay_t<decltype(b)>, ProfileFun>)
          throw UsageError("inner: monomial x profile is not supported");
        else if constexpr (std::is_same_v<std::decay_t<decltype(a)>, ProfileFun> &&
                           std::is_same_v<std::decay_t<decltype(b)>, MonomialGaussFun>)
          throw UsageError("inner: profile x monomial is not supported");
        else
          return inner(a, b);
      },
      f, g);
}

namespace {

double norm_from_self_inner(cplx self) {
  // Imaginary part is roundoff; clamp a tiny negative real part to zero.
  return std::sqrt(std::max(0.0, self.real()));
}

}  // namespace

double norm(const AnyFun& f) { return norm_from_self_inner(inner(f, f)); }
double norm(const GaussPolyFun& f) { return norm_from_self_inner(inner(f, f)); }
double norm(const ProfileFun& f) { return norm_from_self_inner(inner(f, f)); }

// ---- GaussPolySum ----------------------------------------------------------

cplx inner(const GaussPolySum& f, const GaussPolySum& g) {
  NeumaierSumC acc;
  for (const auto& a : f.terms)
    for (const auto& b : g.terms) acc.add(inner(a, b));
  return acc.value();
}

cplx inner(const GaussPolySum& f, const GaussPolyFun& g) {
  NeumaierSumC acc;
  for (const auto& a : f.terms) acc.add(inner(a, g));
  return acc.value();
}

double norm(const GaussPolySum& f) { return norm_from_self_inner(inner(f, f)); }

GaussPolySum sum_of(const GaussPolyFun& a) {
  check(a);
  return GaussPolySum{a.d, {a}};
}

void add_term(GaussPolySum& s, const GaussPolyFun& t, cplx scale) {
  check(t);
  if (s.terms.empty()) s.d = t.d;
  if (t.d != s.d) throw UsageError("GaussPolySum: dimension mismatch");
  GaussPolyFun scaled = t;
  for (cplx& c : scaled.coeffs) c *= scale;
  s.terms.push_back(std::move(scaled));
}

// ---- same-width arithmetic -------------------------------------------------

namespace {

void require_same_width(const GaussPolyFun& a, const GaussPolyFun& b) {
  const double scale = std::abs(a.width) + std::abs(b.width);
  if (std::abs(a.width - b.width) > 1e-12 * scale)
    throw UsageError(
        "gp_add: widths differ; combine through GaussPolySum instead");
}

}  // namespace

GaussPolyFun gp_add(const GaussPolyFun& a, const GaussPolyFun& b) {
  check(a);
  check(b);
  if (a.d != b.d) throw UsageError("gp_add: dimension mismatch");
  require_same_width(a, b);
  GaussPolyFun out = a;
  if (b.coeffs.size() > out.coeffs.size()) out.coeffs.resize(b.coeffs.size());
  for (size_t j = 0; j < b.coeffs.size(); ++j) out.coeffs[j] += b.coeffs[j];
  return out;
}

GaussPolyFun gp_scale(const GaussPolyFun& a, cplx s) {
  check(a);
  GaussPolyFun out = a;
  for (cplx& c : out.coeffs) c *= s;
  return out;
}

GaussPolyFun gp_mul_radius2(const GaussPolyFun& a) {
  check(a);
  GaussPolyFun out = a;
  out.coeffs.insert(out.coeffs.begin(), cplx(0.0));
  return out;
}

// ---- symmetry group --------------------------------------------------------

namespace {

void require_positive_rho(double rho) {
  if (!(rho > 0.0)) throw DomainError("dilate: dilation factor must be > 0");
}

}  // namespace

GaussPolyFun dilate(const GaussPolyFun& f, double rho, bool normalized) {
  check(f);
  require_positive_rho(rho);
  GaussPolyFun out = f;
  out.width = f.width * (rho * rho);
  const double amp = normalized ? std::pow(rho, 0.5 * f.d) : 1.0;
  double p = amp;
  for (size_t j = 0; j < out.coeffs.size(); ++j) {
    out.coeffs[j] *= p;
    p *= rho * rho;
  }
  return out;
}

MonomialGaussFun dilate(const MonomialGaussFun& f, double rho, bool normalized) {
  check(f);
  require_positive_rho(rho);
  MonomialGaussFun out = f;
  out.width = f.width * (rho * rho);
  int total = 0;
  for (int a : f.alpha) total += a;
  out.coeff *= std::pow(rho, total + (normalized ? 0.5 * f.d : 0.0));
  return out;
}

ProfileFun dilate(const ProfileFun& f, double rho, bool normalized) {
  check(f);
  require_positive_rho(rho);
  ProfileFun out = f;
  const double amp = normalized ? std::pow(rho, 0.5 * f.d) : 1.0;
  for (size_t i = 0; i < out.nodes.size(); ++i) {
    out.nodes[i] /= rho;
    out.weights[i] /= rho;
    out.values[i] *= amp;
  }
  return out;
}

AnyFun dilate(const AnyFun& f, double rho, bool normalized) {
  return std::visit(
      [&](const auto& g) -> AnyFun { return dilate(g, rho, normalized); }, f);
}

GaussPolyFun modulate(const GaussPolyFun& f, double t) {
  check(f);
  GaussPolyFun out = f;
  out.width -= cplx(0.0, t);
  return out;
}

MonomialGaussFun modulate(const MonomialGaussFun& f, double t) {
  check(f);
  MonomialGaussFun out = f;
  out.width -= cplx(0.0, t);
  return out;
}

ProfileFun modulate(const ProfileFun& f, double t) {
  check(f);
  ProfileFun out = f;
  for (size_t i = 0; i < out.nodes.size(); ++i)
    out.values[i] *= std::polar(1.0, t * out.nodes[i] * out.nodes[i]);
  return out;
}

AnyFun modulate(const AnyFun& f, double t) {
  return std::visit([&](const auto& g) -> AnyFun { return modulate(g, t); }, f);
}

GaussPolySum dilate(const GaussPolySum& f, double rho, bool normalized) {
  GaussPolySum out;
  out.d = f.d;
  for (const auto& t : f.terms) out.terms.push_back(dilate(t, rho, normalized));
  return out;
}

GaussPolySum modulate(const GaussPolySum& f, double t) {
  GaussPolySum out;
  out.d = f.d;
  for (const auto& g : f.terms) out.terms.push_back(modulate(g, t));
  return out;
}

// ---- Fourier transform -----------------------------------------------------

GaussPolyFun fourier(const GaussPolyFun& f) {
  check(f);
  const int n = f.d;  // ambient dimension of the transform
  const cplx w = f.width;
  const cplx b = cplx(kPi * kPi, 0.0) / w;
  const cplx base = std::pow(cplx(kPi, 0.0) / w, 0.5 * n);
  // T_j holds the transform of |x|^{2j} e^{-w|x|^2} as a polynomial in
  // s = |xi|^2 against e^{-b s}; each step applies -(4 pi^2)^{-1} Laplacian.
  std::vector<cplx> T{base};
  std::vector<cplx> result(f.coeffs.size(), cplx(0.0));
  result[0] = f.coeffs[0] * T[0];
  const double inv4p2 = 1.0 / (4.0 * kPi * kPi);
  for (size_t j = 1; j < f.coeffs.size(); ++j) {
    std::vector<cplx> next(T.size() + 1, cplx(0.0));
    for (size_t k = 0; k < next.size(); ++k) {
      cplx v(0.0);
      if (k + 1 < T.size())
        v += (4.0 * (k + 1.0) * k + 2.0 * n * (k + 1.0)) * T[k + 1];
      if (k < T.size()) v -= (8.0 * double(k) + 2.0 * n) * b * T[k];
      if (k >= 1) v += 4.0 * b * b * T[k - 1];
      next[k] = -inv4p2 * v;
    }
    T = std::move(next);
    if (result.size() < T.size()) result.resize(T.size(), cplx(0.0));
    for (size_t k = 0; k < T.size(); ++k) result[k] += f.coeffs[j] * T[k];
  }
  GaussPolyFun out;
  out.d = n;
  out.width = b;
  out.coeffs = std::move(result);
  trim(out);
  return out;
}

std::vector<MonomialGaussFun> fourier(const MonomialGaussFun& f) {
  check(f);
  const cplx w = f.width;
  const cplx b = cplx(kPi * kPi, 0.0) / w;
  const cplx ihalf = cplx(0.0, 1.0 / kTwoPi);  // i / (2 pi)
  // One-dimensional coordinate polynomials: transform of t^m e^{-w t^2} is
  // (pi/w)^{1/2} P_m(xi) e^{-b xi^2} with P_0 = 1 and
  // P_{m+1} = (i/2pi)(P_m' - 2 b xi P_m).
  std::vector<std::vector<cplx>> polys(f.d);
  for (int i = 0; i < f.d; ++i) {
    std::vector<cplx> p{cplx(1.0)};
    for (int m = 0; m < f.alpha[i]; ++m) {
      std::vector<cplx> q(p.size() + 1, cplx(0.0));
      for (size_t k = 0; k < q.size(); ++k) {
        cplx v(0.0);
        if (k + 1 < p.size()) v += (k + 1.0) * p[k + 1];
        if (k >= 1) v -= 2.0 * b * p[k - 1];
        q[k] = ihalf * v;
      }
      p = std::move(q);
    }
    polys[i] = std::move(p);
  }
  const cplx base = f.coeff * std::pow(cplx(kPi, 0.0) / w, 0.5 * f.d);
  // Expand the product of per-coordinate polynomials into monomial terms.
  std::vector<MonomialGaussFun> out;
  std::vector<int> idx(f.d, 0);
  while (true) {
    cplx c = base;
    std::vector<int> expo(f.d);
    for (int i = 0; i < f.d; ++i) {
      c *= polys[i][idx[i]];
      expo[i] = idx[i];
    }
    if (std::abs(c) > 0.0) {
      MonomialGaussFun t;
      t.d = f.d;
      t.alpha = expo;
      t.coeff = c;
      t.width = b;
      out.push_back(std::move(t));
    }
    int i = 0;
    for (; i < f.d; ++i) {
      if (++idx[i] < int(polys[i].size())) break;
      idx[i] = 0;
    }
    if (i == f.d) break;
  }
  return out;
}

cplx inner(const std::vector<MonomialGaussFun>& f,
           const std::vector<MonomialGaussFun>& g) {
  NeumaierSumC acc;
  for (const auto& a : f)
    for (const auto& b : g) acc.add(inner(a, b));
  return acc.value();
}

// ---- Lorentz quasinorm -----------------------------------------------------

namespace {

double poly_eval(const std::vector<double>& c, double u) {
  double p = 0.0;
  for (size_t j = c.size(); j-- > 0;) p = p * u + c[j];
  return p;
}

// Upper bound on the magnitude of every root (Fujiwara form).  Stays tight
// even when the leading coefficient sits orders of magnitude below the rest,
// which happens after wide unnormalized dilations.
double root_window(const std::vector<double>& c) {
  const size_t n = c.size() - 1;
  double b = 1.0;
  if (n >= 1 && c[n] != 0.0) {
    for (size_t k = 1; k <= n; ++k)
      b = std::max(b, std::pow(std::abs(c[n - k] / c[n]), 1.0 / double(k)));
  }
  return 2.0 * b;
}

// Ascending sign-change roots of the polynomial c inside [lo, hi].  The
// recursion walks the derivative chain, so every piece between consecutive
// break points is monotone and holds at most one crossing.
std::vector<double> poly_roots(const std::vector<double>& c, double lo,
                               double hi) {
  std::vector<double> p = c;
  while (p.size() > 1 && p.back() == 0.0) p.pop_back();
  std::vector<double> roots;
  if (p.size() <= 1) return roots;
  std::vector<double> breaks{lo};
  if (p.size() > 2) {
    std::vector<double> dp(p.size() - 1);
    for (size_t k = 1; k < p.size(); ++k) dp[k - 1] = double(k) * p[k];
    for (double r : poly_roots(dp, lo, hi)) breaks.push_back(r);
  }
  breaks.push_back(hi);
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    double l = breaks[i], r = breaks[i + 1];
    const double fl = poly_eval(p, l);
    if (fl == 0.0) {
      roots.push_back(l);
      continue;
    }
    if ((fl < 0.0) == (poly_eval(p, r) < 0.0)) continue;
    for (int it = 0; it < 90; ++it) {
      const double m = 0.5 * (l + r);
      if ((poly_eval(p, m) < 0.0) == (fl < 0.0))
        l = m;
      else
        r = m;
    }
    roots.push_back(0.5 * (l + r));
  }
  return roots;
}

// Superlevel measure |{ |h| > tau }| machinery for |h|^2 = Q(u) e^{-2au},
// u = r^2.  The critical points of g(u) split [0, inf) into monotone pieces;
// each level set is then a finite union of intervals found by bisection.
struct LevelSetter {
  int d;
  double a;                  // Re(width)
  std::vector<double> Q;     // real coefficients of |P|^2
  std::vector<double> crit;  // interior critical points, ascending
  double area_over_d;

  double g(double u) const {
    double p = 0.0;
    for (size_t j = Q.size(); j-- > 0;) p = p * u + Q[j];
    return p * std::exp(-2.0 * a * u);
  }

  // Measure of {x : |h(x)| > sqrt(v)} in R^d; u-interval [l, r] contributes
  // r^{d/2} - l^{d/2} times sphere_area(d)/d.
  double measure_above(double v) const {
    double meas = 0.0;
    double lo = 0.0;
    bool inside = g(0.0) > v;
    auto close_at = [&](double u) {
      meas += std::pow(u, 0.5 * d) - std::pow(lo, 0.5 * d);
    };
    auto cross = [&](double ul, double ur) {
      // g is monotone on [ul, ur] and g - v changes sign there.
      for (int it = 0; it < 90; ++it) {
        const double um = 0.5 * (ul + ur);
        if ((g(ul) > v) == (g(um) > v))
          ul = um;
        else
          ur = um;
      }
      return 0.5 * (ul + ur);
    };
    double prev = 0.0;
    for (double uc : crit) {
      if ((g(prev) > v) != (g(uc) > v)) {
        const double u = cross(prev, uc);
        if (inside) {
          close_at(u);
          inside = false;
        } else {
          lo = u;
          inside = true;
        }
      }
      prev = uc;
    }
    // Tail piece: g decays to zero beyond the last critical point, so an
    // open interval always closes out here.
    if (g(prev) > v) {
      if (!inside) lo = prev;
      double hi = std::max(2.0 * prev + 1.0, 1.0 / a);
      while (g(hi) > v) hi *= 2.0;
      close_at(cross(prev, hi));
    }
    return meas * area_over_d;
  }
};

}  // namespace

double lorentz_24_norm(const GaussPolyFun& f) {
  check(f);
  const int M = int(f.coeffs.size()) - 1;
  LevelSetter ls;
  ls.d = f.d;
  ls.a = f.width.real();
  ls.area_over_d = sphere_area(f.d) / f.d;
  ls.Q.assign(2 * M + 1, 0.0);
  for (int j = 0; j <= M; ++j)
    for (int k = 0; k <= M; ++k)
      ls.Q[j + k] += (f.coeffs[j] * std::conj(f.coeffs[k])).real();
  double qpeak = 0.0;
  for (double q : ls.Q) qpeak = std::max(qpeak, std::abs(q));
  if (qpeak == 0.0) return 0.0;

  // Critical points of g are the roots of R(u) = Q'(u) - 2a Q(u).
  std::vector<double> R(ls.Q.size() + 1, 0.0);
  for (size_t k = 0; k < ls.Q.size(); ++k) {
    R[k] -= 2.0 * ls.a * ls.Q[k];
    if (k >= 1) R[k - 1] += double(k) * ls.Q[k];
  }
  while (R.size() > 1 && R.back() == 0.0) R.pop_back();
  ls.crit = poly_roots(R, 0.0, root_window(R));

  // ||f||^4 = 4 int tau^3 lambda(tau)^2 dtau = 2 int_0^{vmax} lambda(sqrt v)^2 v dv,
  // split at the critical values of g where the level-set combinatorics change.
  std::vector<double> vsplit{0.0, ls.g(0.0)};
  for (double uc : ls.crit) vsplit.push_back(ls.g(uc));
  double vmax = 0.0;
  for (double v : vsplit) vmax = std::max(vmax, v);
  if (vmax <= 0.0) return 0.0;
  vsplit.push_back(vmax);
  std::sort(vsplit.begin(), vsplit.end());
  vsplit.erase(std::unique(vsplit.begin(), vsplit.end(),
                           [&](double x, double y) {
                             return std::abs(x - y) < 1e-14 * vmax;
                           }),
               vsplit.end());

  auto integrand = [&](double v) {
    const double lam = ls.measure_above(v);
    return v * lam * lam;
  };
  NeumaierSum total;
  for (size_t i = 0; i + 1 < vsplit.size(); ++i) {
    if (vsplit[i + 1] > vmax) break;
    total.add(adaptive_gk15(integrand, vsplit[i], vsplit[i + 1], 1e-14, 5e-11)
                  .value);
  }
  return std::pow(2.0 * total.value(), 0.25);
}

double lorentz_24_norm(const ProfileFun& f) {
  check(f);
  // Treat |f| as piecewise linear: constant on [0, r_0], linear between
  // nodes, zero beyond the last node.
  const size_t n = f.nodes.size();
  std::vector<double> m(n);
  double vmax = 0.0;
  for (size_t i = 0; i < n; ++i) {
    m[i] = std::abs(f.values[i]);
    vmax = std::max(vmax, m[i]);
  }
  if (vmax == 0.0) return 0.0;
  const double aod = sphere_area(f.d) / f.d;

  auto lambda = [&](double tau) {
    double meas = 0.0;
    bool inside = m[0] > tau;
    double lo = 0.0;
    for (size_t i = 0; i + 1 < n; ++i) {
      const bool nxt = m[i + 1] > tau;
      if (nxt != inside) {
        const double t = (tau - m[i]) / (m[i + 1] - m[i]);
        const double r = f.nodes[i] + t * (f.nodes[i + 1] - f.nodes[i]);
        if (inside)
          meas += std::pow(r, f.d) - std::pow(lo, f.d);
        else
          lo = r;
        inside = nxt;
      }
    }
    if (inside) meas += std::pow(f.nodes.back(), f.d) - std::pow(lo, f.d);
    return meas * aod;
  };

  std::vector<double> splits{0.0};
  for (double v : m)
    if (v > 0.0) splits.push_back(v);
  std::sort(splits.begin(), splits.end());
  splits.erase(std::unique(splits.begin(), splits.end(),
                           [&](double x, double y) {
                             return std::abs(x - y) < 1e-14 * vmax;
                           }),
               splits.end());
  NeumaierSum total;
  auto integrand = [&](double tau) {
    const double lam = lambda(tau);
    return tau * tau * tau * lam * lam;
  };
  for (size_t i = 0; i + 1 < splits.size(); ++i)
    total.add(adaptive_gk15(integrand, splits[i], splits[i + 1], 1e-14, 5e-11)
                  .value);
  return std::pow(4.0 * total.value(), 0.25);
}

// ---- conversion ------------------------------------------------------------

ProfileFun to_profile(const GaussPolyFun& f, int n, double rmax) {
  check(f);
  if (n < 16) throw UsageError("to_profile: need at least 16 nodes");
  if (rmax <= 0.0) rmax = std::sqrt(40.0 / f.width.real());
  const QuadRule r = gauss_legendre_ab(n, 0.0, rmax);
  ProfileFun out;
  out.d = f.d;
  out.nodes = r.nodes;
  out.weights = r.weights;
  out.values.resize(n);
  for (int i = 0; i < n; ++i) out.values[i] = eval_radial(f, r.nodes[i]);
  return out;
}

ProfileFun to_profile(const AnyFun& f, int n, double rmax) {
  check(f);
  if (std::holds_alternative<ProfileFun>(f)) return std::get<ProfileFun>(f);
  if (std::holds_alternative<GaussPolyFun>(f))
    return to_profile(std::get<GaussPolyFun>(f), n, rmax);
  throw UsageError("to_profile: monomial gaussians have no radial profile");
}

}  // namespace radlab
