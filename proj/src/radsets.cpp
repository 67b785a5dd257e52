#include "radlab/radsets.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "radlab/quadrature.hpp"
#include "radlab/rng.hpp"
#include "radlab/scalars.hpp"

namespace radlab {

namespace {

using Intervals = std::vector<std::pair<double, double>>;

// Intersection of two disjoint ascending interval unions.
Intervals intersect(const Intervals& a, const Intervals& b) {
  Intervals out;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const double lo = std::max(a[i].first, b[j].first);
    const double hi = std::min(a[i].second, b[j].second);
    if (hi > lo) out.emplace_back(lo, hi);
    if (a[i].second < b[j].second)
      ++i;
    else
      ++j;
  }
  return out;
}

bool starts_at_zero(const RadialSet& s) {
  return !s.annuli.empty() && s.annuli.front().first == 0.0;
}

double max_radius(const RadialSet& s) {
  return s.annuli.empty() ? 0.0 : s.annuli.back().second;
}

void require_same_dim(const RadialSet& A, const RadialSet& B) {
  if (A.d != B.d) throw UsageError("radsets: dimension mismatch");
}

void check_window(const Intervals& E) {
  double prev = -1.0;
  for (const auto& [lo, hi] : E) {
    if (lo < 0.0 || !(hi > lo) || lo < prev)
      throw DomainError("radius window: need disjoint ascending [lo, hi)");
    prev = hi;
  }
}

}  // namespace

void check(const RadialSet& s) {
  if (s.d < 1) throw DomainError("RadialSet: dimension must be >= 1");
  if (s.annuli.empty()) throw DomainError("RadialSet: need at least one annulus");
  double prev = 0.0;
  bool first = true;
  for (const auto& [a, b] : s.annuli) {
    if (a < 0.0 || !(b > a))
      throw DomainError("RadialSet: annuli must satisfy 0 <= a < b");
    if (!first && a < prev)
      throw DomainError("RadialSet: annuli must be disjoint and ascending");
    prev = b;
    first = false;
  }
}

RadialSet ball(int d, double radius) {
  RadialSet s{d, {{0.0, radius}}};
  check(s);
  return s;
}

RadialSet annulus(int d, double a, double b) {
  RadialSet s{d, {{a, b}}};
  check(s);
  return s;
}

RadialSet scale_set(const RadialSet& s, double factor) {
  check(s);
  if (!(factor > 0.0)) throw DomainError("scale_set: factor must be positive");
  RadialSet out = s;
  for (auto& [a, b] : out.annuli) {
    a *= factor;
    b *= factor;
  }
  return out;
}

std::string describe(const RadialSet& s) {
  std::ostringstream os;
  os << "d=" << s.d;
  for (const auto& [a, b] : s.annuli) os << " [" << a << "," << b << ")";
  return os.str();
}

double measure(const RadialSet& s) {
  check(s);
  const double shell = sphere_area(s.d) / s.d;
  NeumaierSum acc;
  for (const auto& [a, b] : s.annuli)
    acc.add(shell * (std::pow(b, s.d) - std::pow(a, s.d)));
  return acc.value();
}

double lorentz_24_norm(const RadialSet& s) { return std::sqrt(measure(s)); }

double sigma_r(const RadialSet& A, const RadialSet& B, double r) {
  check(A);
  check(B);
  require_same_dim(A, B);
  if (r < 0.0) throw DomainError("sigma_r: radius must be >= 0");
  if (r == 0.0) return (starts_at_zero(A) && starts_at_zero(B)) ? 1.0 : 0.0;
  const double r2 = r * r;
  // x-constraint: 1 - t in [a^2, b^2]/r^2, so t descends as the annuli ascend.
  Intervals ua;
  for (auto it = A.annuli.rbegin(); it != A.annuli.rend(); ++it) {
    const auto& [a, b] = *it;
    if (a >= r) continue;
    const double lo = std::max(0.0, 1.0 - (b * b) / r2);
    const double hi = 1.0 - (a * a) / r2;
    ua.emplace_back(lo, hi);
  }
  if (ua.empty()) return 0.0;
  Intervals ub;
  for (const auto& [c, e] : B.annuli) {
    if (c >= r) continue;
    ub.emplace_back((c * c) / r2, std::min((e * e) / r2, 1.0));
  }
  if (ub.empty()) return 0.0;
  const double h = 0.5 * A.d;
  NeumaierSum acc;
  for (const auto& [lo, hi] : intersect(ua, ub))
    acc.add(regularized_incomplete_beta(hi, h, h) -
            regularized_incomplete_beta(lo, h, h));
  return std::min(1.0, std::max(0.0, acc.value()));
}

double sigma_r_monte_carlo(const RadialSet& A, const RadialSet& B, double r,
                           int n, std::uint64_t seed) {
  check(A);
  check(B);
  require_same_dim(A, B);
  if (n < 1) throw UsageError("sigma_r_monte_carlo: need n >= 1");
  const int d = A.d;
  auto member = [](const RadialSet& s, double rad) {
    for (const auto& [a, b] : s.annuli)
      if (rad >= a && rad < b) return true;
    return false;
  };
  CounterRng rng(seed, 0);
  long hits = 0;
  for (int i = 0; i < n; ++i) {
    const auto z = rng.sphere_point(2 * d);
    double x2 = 0.0;
    for (int k = 0; k < d; ++k) x2 += z[k] * z[k];
    const double rx = r * std::sqrt(x2);
    const double ry = r * std::sqrt(std::max(0.0, 1.0 - x2));
    if (member(A, rx) && member(B, ry)) ++hits;
  }
  return double(hits) / double(n);
}

double mu_measure(int d, const Intervals& E) {
  if (d < 1) throw DomainError("mu_measure: dimension must be >= 1");
  check_window(E);
  const double shell = sphere_area(2 * d) / (2 * d);
  NeumaierSum acc;
  for (const auto& [lo, hi] : E)
    acc.add(shell * (std::pow(hi, 2 * d) - std::pow(lo, 2 * d)));
  return acc.value();
}

namespace {

// Radii where the section combinatorics can change: annulus endpoints of
// either factor and every hypot of an A-endpoint with a B-endpoint.
std::vector<double> breakpoints(const RadialSet& A, const RadialSet& B) {
  std::vector<double> ea{0.0}, eb{0.0};
  for (const auto& [a, b] : A.annuli) {
    ea.push_back(a);
    ea.push_back(b);
  }
  for (const auto& [a, b] : B.annuli) {
    eb.push_back(a);
    eb.push_back(b);
  }
  std::vector<double> out;
  for (double x : ea)
    for (double y : eb) out.push_back(std::hypot(x, y));
  out.insert(out.end(), ea.begin(), ea.end());
  out.insert(out.end(), eb.begin(), eb.end());
  std::sort(out.begin(), out.end());
  const double top = out.back();
  out.erase(std::unique(out.begin(), out.end(),
                        [&](double x, double y) {
                          return std::abs(x - y) <= 1e-13 * (1.0 + top);
                        }),
            out.end());
  return out;
}

// int over [0, rmax] of w(sigma_r) r^{2d-1} dr split at the breakpoints.
template <typename W>
double sigma_integral(const RadialSet& A, const RadialSet& B, W weight,
                      const Intervals* window) {
  const int d = A.d;
  std::vector<double> bp = breakpoints(A, B);
  if (window) {
    for (const auto& [lo, hi] : *window) {
      bp.push_back(lo);
      bp.push_back(hi);
    }
    std::sort(bp.begin(), bp.end());
  }
  auto in_window = [&](double r) {
    if (!window) return true;
    for (const auto& [lo, hi] : *window)
      if (r >= lo && r < hi) return true;
    return false;
  };
  NeumaierSum acc;
  for (size_t i = 0; i + 1 < bp.size(); ++i) {
    const double a = bp[i], b = bp[i + 1];
    if (!(b > a)) continue;
    if (!in_window(0.5 * (a + b))) continue;
    auto f = [&](double r) {
      return weight(sigma_r(A, B, r)) * std::pow(r, 2 * d - 1);
    };
    acc.add(adaptive_gk15(f, a, b, 1e-14, 1e-10).value);
  }
  return acc.value();
}

}  // namespace

double first_moment_residual(const RadialSet& A, const RadialSet& B) {
  require_same_dim(A, B);
  const double lhs = sphere_area(2 * A.d) *
                     sigma_integral(A, B, [](double s) { return s; }, nullptr);
  const double rhs = measure(A) * measure(B);
  return std::abs(lhs - rhs) / rhs;
}

double sigma_sq_integral(const RadialSet& A, const RadialSet& B) {
  require_same_dim(A, B);
  return sigma_integral(A, B, [](double s) { return s * s; }, nullptr);
}

double indicator_projection_norm(const RadialSet& A, const RadialSet& B) {
  const double resid = first_moment_residual(A, B);
  if (!(resid <= 1e-8))
    throw ConvergenceError(
        "indicator_projection_norm: first-moment self-check failed, residual " +
        std::to_string(resid) + " for " + describe(A) + " x " + describe(B));
  return std::sqrt(sphere_area(2 * A.d) * sigma_sq_integral(A, B));
}

double pairing_with_window(const RadialSet& A, const RadialSet& B,
                           const Intervals& E) {
  require_same_dim(A, B);
  check_window(E);
  return sphere_area(2 * A.d) *
         sigma_integral(A, B, [](double s) { return s; }, &E);
}

BoundReport check_sigma_pointwise(const RadialSet& A, const RadialSet& B,
                                  int nr) {
  check(A);
  check(B);
  require_same_dim(A, B);
  if (nr < 8) throw UsageError("check_sigma_pointwise: need nr >= 8");
  const int d = A.d;
  const double mA = measure(A), mB = measure(B);
  const double rmax = std::hypot(max_radius(A), max_radius(B));
  BoundReport rep;
  rep.lemma = "sigma_pointwise";
  rep.config = describe(A) + " x " + describe(B);
  double scale_resid = 0.0;
  for (int i = 0; i < nr; ++i) {
    // Log grid over three decades below the joint outer radius.
    const double r = rmax * std::pow(10.0, -3.0 + 3.05 * (i + 0.5) / nr);
    const double s = sigma_r(A, B, r);
    const double env = std::sqrt(std::min(
        {1.0, mA / std::pow(r, d), mB / std::pow(r, d)}));
    const double ratio = env > 0.0 ? s / env : 0.0;
    if (ratio > rep.ratio) {
      rep.ratio = ratio;
      rep.attained_at = r;
    }
    if (i % 16 == 0) {
      const double alt =
          sigma_r(scale_set(A, 1.0 / r), scale_set(B, 1.0 / r), 1.0);
      scale_resid = std::max(scale_resid, std::abs(alt - s));
    }
  }
  rep.finite = std::isfinite(rep.ratio);
  rep.params = {{"scale_invariance_abs_err", scale_resid},
                {"measure_A", mA},
                {"measure_B", mB}};
  return rep;
}

BoundReport check_l2_bound(const RadialSet& A, const RadialSet& B) {
  const double mA = measure(A), mB = measure(B);
  const double lhs = sigma_sq_integral(A, B);
  const double env =
      std::pow(std::min(mA / mB, mB / mA), 0.2) * mA * mB;
  BoundReport rep;
  rep.lemma = "sigma_l2";
  rep.config = describe(A) + " x " + describe(B);
  rep.ratio = lhs / env;
  rep.finite = std::isfinite(rep.ratio);
  rep.params = {{"lhs_integral", lhs},
                {"eccentricity", std::max(mA / mB, mB / mA)}};
  return rep;
}

BoundReport check_pairing_bound(const RadialSet& A, const RadialSet& B,
                                const Intervals& E) {
  const double mA = measure(A), mB = measure(B);
  const double mu = mu_measure(A.d, E);
  const double lhs = pairing_with_window(A, B, E);
  const double balance = std::min(mA * mB / mu, mu / (mA * mB));
  const double env = std::pow(balance, 1.0 / 6.0) *
                     std::sqrt(mA * mB * mu);
  BoundReport rep;
  rep.lemma = "pairing";
  rep.config = describe(A) + " x " + describe(B) + " window_mu=" +
               std::to_string(mu);
  rep.ratio = env > 0.0 ? lhs / env : 0.0;
  rep.finite = std::isfinite(rep.ratio);
  rep.params = {{"pairing", lhs}, {"mu", mu}, {"balance", balance}};
  return rep;
}

BoundReport check_combined_bound(const RadialSet& A, const RadialSet& B,
                                 const Intervals& E, double gamma_exp) {
  if (!(gamma_exp > 0.0))
    throw DomainError("check_combined_bound: exponent must be positive");
  const double mA = measure(A), mB = measure(B);
  const double mu = mu_measure(A.d, E);
  const double lhs = pairing_with_window(A, B, E);
  const double a1 = mA, a2 = mB, a3 = std::sqrt(mu);
  const double lam = std::min({a1 / a2, a2 / a1, a1 / a3, a3 / a1, a2 / a3,
                               a3 / a2});
  const double env = std::pow(lam, gamma_exp) * std::sqrt(mA * mB * mu);
  BoundReport rep;
  rep.lemma = "combined";
  rep.config = describe(A) + " x " + describe(B) + " window_mu=" +
               std::to_string(mu);
  rep.ratio = env > 0.0 ? lhs / env : 0.0;
  rep.finite = std::isfinite(rep.ratio);
  rep.params = {{"lambda", lam}, {"gamma", gamma_exp}, {"mu", mu}};
  return rep;
}

std::vector<BoundReport> bound_sweep(int d, int n_configs, std::uint64_t seed,
                                     double gamma_exp) {
  if (n_configs < 1) throw UsageError("bound_sweep: need at least one config");
  std::vector<BoundReport> out;
  for (int k = 0; k < n_configs; ++k) {
    RadialSet A, B;
    if (k % 3 == 0) {
      // Deterministic eccentric family: ball against a growing ball.
      const double s = std::pow(10.0, -2.0 + 4.0 * k / std::max(1, n_configs - 1));
      A = ball(d, 1.0);
      B = ball(d, std::pow(s, 1.0 / d));
    } else if (k % 3 == 1) {
      // Thin shell against a ball: stresses the pointwise envelope.
      const double w = std::pow(10.0, -1.0 - 2.0 * k / std::max(1, n_configs));
      A = annulus(d, 1.0, 1.0 + w);
      B = ball(d, 1.0);
    } else {
      // Seeded multi-annulus pairs.
      CounterRng rng(seed, std::uint64_t(k));
      auto random_set = [&](int pieces) {
        RadialSet s;
        s.d = d;
        double lo = rng.uniform(0.0, 0.3);
        for (int p = 0; p < pieces; ++p) {
          const double hi = lo + rng.uniform(0.05, 0.8);
          s.annuli.emplace_back(lo, hi);
          lo = hi + rng.uniform(0.05, 0.6);
        }
        return s;
      };
      A = random_set(1 + int(3 * rng.uniform01()));
      B = random_set(1 + int(3 * rng.uniform01()));
    }
    const double top = std::hypot(max_radius(A), max_radius(B));
    const Intervals E{{0.25 * top, 0.7 * top}};
    out.push_back(check_sigma_pointwise(A, B));
    out.push_back(check_l2_bound(A, B));
    out.push_back(check_pairing_bound(A, B, E));
    out.push_back(check_combined_bound(A, B, E, gamma_exp));
  }
  return out;
}

}  // namespace radlab
