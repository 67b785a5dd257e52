#include "radlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "radlab/scalars.hpp"

namespace radlab {

namespace {

// Implicit-shift QL on a symmetric tridiagonal matrix, accumulating the
// rotations into z (row-major n x n, started as identity).  d holds the
// diagonal, e the subdiagonal with e[i] coupling rows i and i+1.
void tridiag_ql(std::vector<double>& d, std::vector<double>& e,
                std::vector<double>& z, int n) {
  const double eps = std::numeric_limits<double>::epsilon();
  e[n - 1] = 0.0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 60)
          throw ConvergenceError("tridiag_ql: QL iteration did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (int k = 0; k < n; ++k) {
            f = z[k * n + i + 1];
            z[k * n + i + 1] = s * z[k * n + i] + c * f;
            z[k * n + i] = c * z[k * n + i] - s * f;
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

// Golub-Welsch from monic recurrence coefficients: alpha[k] is the Jacobi
// matrix diagonal, beta[0] the total weight mass, beta[k] (k >= 1) the
// squared off-diagonal entries.
QuadRule golub_welsch(const std::vector<double>& alpha,
                      const std::vector<double>& beta) {
  const int n = int(alpha.size());
  std::vector<double> d = alpha;
  std::vector<double> e(n);
  for (int k = 1; k < n; ++k) e[k - 1] = std::sqrt(beta[k]);
  std::vector<double> z(size_t(n) * n, 0.0);
  for (int i = 0; i < n; ++i) z[size_t(i) * n + i] = 1.0;
  tridiag_ql(d, e, z, n);

  QuadRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return d[i] < d[j]; });
  for (int j = 0; j < n; ++j) {
    const int col = order[j];
    rule.nodes[j] = d[col];
    const double v0 = z[col];  // first component of the j-th eigenvector
    rule.weights[j] = beta[0] * v0 * v0;
  }
  return rule;
}

}  // namespace

QuadRule gauss_jacobi(int n, double A, double B) {
  if (n < 1) throw DomainError("gauss_jacobi: need n >= 1");
  if (!(A > -1.0) || !(B > -1.0))
    throw DomainError("gauss_jacobi: exponents must exceed -1");
  std::vector<double> alpha(n), beta(n);
  const double apb = A + B;
  alpha[0] = (B - A) / (apb + 2.0);
  // Total mass int_{-1}^1 (1-x)^A (1+x)^B dx = 2^{A+B+1} B(A+1, B+1).
  beta[0] = std::exp((apb + 1.0) * std::log(2.0) + log_beta(A + 1.0, B + 1.0));
  for (int k = 1; k < n; ++k) {
    const double t = 2.0 * k + apb;
    alpha[k] = (B * B - A * A) / (t * (t + 2.0));
    if (k == 1)
      // Limit form: the (1 + A + B) factors of the generic expression cancel.
      beta[1] = 4.0 * (A + 1.0) * (B + 1.0) / ((apb + 2.0) * (apb + 2.0) * (apb + 3.0));
    else
      beta[k] = 4.0 * k * (k + A) * (k + B) * (k + apb) /
                (t * t * (t + 1.0) * (t - 1.0));
  }
  return golub_welsch(alpha, beta);
}

QuadRule gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

QuadRule gauss_legendre_ab(int n, double a, double b) {
  QuadRule r = gauss_legendre(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    r.nodes[i] = mid + half * r.nodes[i];
    r.weights[i] *= half;
  }
  return r;
}

QuadRule gauss_beta01(int n, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw DomainError("gauss_beta01: parameters must be positive");
  // u = (1+x)/2 maps weight u^{a-1}(1-u)^{b-1} du to
  // 2^{1-a-b} (1-x)^{b-1} (1+x)^{a-1} dx.
  QuadRule r = gauss_jacobi(n, b - 1.0, a - 1.0);
  const double scale = std::exp((1.0 - a - b) * std::log(2.0));
  for (int i = 0; i < n; ++i) {
    r.nodes[i] = 0.5 * (1.0 + r.nodes[i]);
    r.weights[i] *= scale;
  }
  return r;
}

namespace {

// 7/15 Gauss-Kronrod constants (positive half; nodes symmetric about 0).
// Odd-index abscissae carry the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

}  // namespace

GK15Panel gk15_panel(const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  const double fc = f(mid);
  NeumaierSum kron, gauss;
  kron.add(kWgk[7] * fc);
  gauss.add(kWg[3] * fc);
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const double fsum = f(mid - dx) + f(mid + dx);
    kron.add(kWgk[i] * fsum);
    if (i % 2 == 1) gauss.add(kWg[i / 2] * fsum);
  }
  return {gauss.value() * half, kron.value() * half};
}

namespace {

// Child tolerances halve per level but never drop below tol_floor; without
// the floor an endpoint cusp (error ~ width^{3/2} against budget ~ width)
// exhausts the depth limit even though the remaining error is negligible.
void gk_recurse(const std::function<double(double)>& f, double a, double b,
                double tol, double tol_floor, int depth, int max_depth,
                NeumaierSum& acc, NeumaierSum& err, int& evals) {
  const GK15Panel p = gk15_panel(f, a, b);
  evals += 15;
  const double delta = std::abs(p.kronrod - p.gauss);
  if (delta <= tol || b - a < 1e-14 * (1.0 + std::abs(a))) {
    acc.add(p.kronrod);
    err.add(delta);
    return;
  }
  if (depth >= max_depth)
    throw ConvergenceError("adaptive_gk15: depth limit reached on [" +
                           std::to_string(a) + ", " + std::to_string(b) + "]");
  const double mid = 0.5 * (a + b);
  const double child = std::max(0.5 * tol, tol_floor);
  gk_recurse(f, a, mid, child, tol_floor, depth + 1, max_depth, acc, err,
             evals);
  gk_recurse(f, mid, b, child, tol_floor, depth + 1, max_depth, acc, err,
             evals);
}

}  // namespace

QuadResult adaptive_gk15(const std::function<double(double)>& f, double a,
                         double b, double abs_tol, double rel_tol,
                         int max_depth) {
  if (!(b >= a)) throw UsageError("adaptive_gk15: need b >= a");
  if (a == b) return {0.0, 0.0, 0};
  const GK15Panel first = gk15_panel(f, a, b);
  const double tol = std::max(abs_tol, rel_tol * std::abs(first.kronrod));
  NeumaierSum acc, err;
  int evals = 15;
  gk_recurse(f, a, b, tol, abs_tol, 0, max_depth, acc, err, evals);
  return {acc.value(), err.value(), evals};
}

}  // namespace radlab
