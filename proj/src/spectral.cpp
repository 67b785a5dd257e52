#include "radlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "radlab/scalars.hpp"

namespace radlab {

namespace {

// ---- quadruple-precision kernel --------------------------------------------
// The scaled monomial Gram has condition ~1e10 at degree 12 and grows fast;
// double (and even 80-bit) accumulation cannot certify orthonormality at the
// 1e-10 level.  All basis construction runs in __float128.

using f128 = __float128;

const f128 kPiQ = 3.14159265358979323846264338327950288Q;

f128 sqrt_q(f128 x) {
  if (x <= 0) return 0;
  f128 y = sqrtl(static_cast<long double>(x));
  y = (y + x / y) / 2;
  y = (y + x / y) / 2;
  return y;
}

f128 abs_q(f128 x) { return x < 0 ? -x : x; }

// Moments M_s = <|x|^{2j} F, |x|^{2k} F> with s = j + k, via the recurrence
// M_{s+1} = M_s (s + d/2) / pi from M_0 = 1.
std::vector<f128> moments_q(int d, int smax) {
  std::vector<f128> m(smax + 1);
  m[0] = 1;
  const f128 half_d = f128(d) / 2;
  for (int s = 0; s < smax; ++s) m[s + 1] = m[s] * (s + half_d) / kPiQ;
  return m;
}

// lambda(d, m) via the ratio recurrence lambda_{m+1}/lambda_m = (m+d/2)/(m+d).
std::vector<f128> lambdas_q(int d, int mmax) {
  std::vector<f128> lam(mmax + 1);
  lam[0] = 1;
  const f128 half_d = f128(d) / 2;
  for (int m = 0; m < mmax; ++m) lam[m + 1] = lam[m] * (m + half_d) / (m + d);
  return lam;
}

std::vector<std::vector<f128>> binomials_q(int n) {
  std::vector<std::vector<f128>> c(n + 1, std::vector<f128>(n + 1, 0));
  for (int j = 0; j <= n; ++j) {
    c[j][0] = 1;
    for (int i = 1; i <= j; ++i) c[j][i] = c[j - 1][i - 1] + (i <= j - 1 ? c[j - 1][i] : 0);
  }
  return c;
}

struct QuadKernel {
  int n = 0;                            // basis size max_m + 1
  std::vector<f128> mom;                // M_0 .. M_{2 max_m}
  std::vector<f128> lam;                // lambda_0 .. lambda_max_m
  std::vector<f128> scale;              // sqrt(M_{2j})
  std::vector<std::vector<f128>> gram;  // G_{jk} = M_{j+k}/(scale_j scale_k)
  std::vector<std::vector<f128>> top;   // T in the scaled basis
};

QuadKernel make_kernel(int d, int max_m) {
  QuadKernel k;
  k.n = max_m + 1;
  k.mom = moments_q(d, 2 * max_m);
  k.lam = lambdas_q(d, max_m);
  const auto binom = binomials_q(max_m);
  k.scale.resize(k.n);
  for (int j = 0; j < k.n; ++j) k.scale[j] = sqrt_q(k.mom[2 * j]);
  k.gram.assign(k.n, std::vector<f128>(k.n, 0));
  k.top.assign(k.n, std::vector<f128>(k.n, 0));
  for (int j = 0; j < k.n; ++j)
    for (int i = 0; i < k.n; ++i) {
      k.gram[i][j] = k.mom[i + j] / (k.scale[i] * k.scale[j]);
      // T |x|^{2j} F = sum_{i<=j} lambda_j binom(j,i) M_{j-i} |x|^{2i} F,
      // rescaled into the normalized chain.
      if (i <= j)
        k.top[i][j] = k.lam[j] * binom[j][i] * k.mom[j - i] * k.scale[i] / k.scale[j];
    }
  return k;
}

f128 bilinear(const QuadKernel& k, const std::vector<f128>& a,
              const std::vector<f128>& b) {
  f128 acc = 0;
  for (int i = 0; i < k.n; ++i) {
    if (a[i] == 0) continue;
    f128 row = 0;
    for (int j = 0; j < k.n; ++j) row += k.gram[i][j] * b[j];
    acc += a[i] * row;
  }
  return acc;
}

std::vector<f128> apply_top(const QuadKernel& k, const std::vector<f128>& a) {
  std::vector<f128> out(k.n, 0);
  for (int i = 0; i < k.n; ++i)
    for (int j = i; j < k.n; ++j) out[i] += k.top[i][j] * a[j];
  return out;
}

// ---- double-precision operator matrix --------------------------------------

std::vector<double> moments_d(int d, int smax) {
  std::vector<double> m(smax + 1);
  m[0] = 1.0;
  const double half_d = 0.5 * d;
  for (int s = 0; s < smax; ++s) m[s + 1] = m[s] * (s + half_d) / kPi;
  return m;
}

void require_unit_gauge(cplx width) {
  if (std::abs(width.real() - kPi / 2) > 1e-14 || std::abs(width.imag()) > 1e-14)
    throw UsageError(
        "radial averaging operator requires the unit gauge width pi/2; "
        "dilate and modulate the input into gauge first");
}

}  // namespace

// ---- operator application --------------------------------------------------

GaussPolyFun apply_t(const GaussPolyFun& f) {
  check(f);
  require_unit_gauge(f.width);
  const int deg = static_cast<int>(f.coeffs.size()) - 1;
  GaussPolyFun out;
  out.d = f.d;
  out.width = f.width;
  out.coeffs.assign(f.coeffs.size(), cplx(0.0));
  if (deg < 0) return out;
  const auto mom = moments_d(f.d, deg);
  std::vector<double> lam(deg + 1);
  lam[0] = 1.0;
  for (int m = 0; m < deg; ++m) lam[m + 1] = lam[m] * (m + 0.5 * f.d) / (m + f.d);
  for (int i = 0; i <= deg; ++i) {
    NeumaierSumC acc;
    for (int j = i; j <= deg; ++j)
      acc.add(f.coeffs[j] * (lam[j] * binomial(j, i) * mom[j - i]));
    out.coeffs[i] = acc.value();
  }
  return out;
}

GaussPolyFun apply_t(const MonomialGaussFun& f) {
  check(f);
  require_unit_gauge(f.width);
  GaussPolyFun out;
  out.d = f.d;
  out.width = f.width;
  for (int a : f.alpha)
    if (a % 2 != 0) {
      out.coeffs = {cplx(0.0)};
      return out;
    }
  std::vector<int> beta(f.alpha.size());
  int m = 0;
  for (size_t i = 0; i < f.alpha.size(); ++i) {
    beta[i] = f.alpha[i] / 2;
    m += beta[i];
  }
  // x^{2 beta} averages to dem(beta) |x|^{2m} on every centered sphere, so
  // the image coincides with T on the radial chain up to that factor.
  GaussPolyFun chain;
  chain.d = f.d;
  chain.width = f.width;
  chain.coeffs.assign(m + 1, cplx(0.0));
  chain.coeffs[m] = f.coeff * direction_even_moment(f.d, beta);
  return apply_t(chain);
}

// ---- eigenbasis ------------------------------------------------------------

SpectralBasis build_spectral_basis(int d, int max_m) {
  if (d < 1) throw UsageError("dimension must be positive");
  if (max_m < 0) throw UsageError("max_m must be nonnegative");
  if (max_m > 40)
    throw UsageError(
        "max_m above 40 exceeds the numerical rank of the monomial chain");
  const QuadKernel kern = make_kernel(d, max_m);
  const int n = kern.n;

  // Twice-reorthogonalized Gram-Schmidt on the unit coordinate directions.
  // The chain is triangular, so q_m keeps component m equal to 1 until the
  // final normalization and the leading coefficient stays positive.
  std::vector<std::vector<f128>> q;
  q.reserve(n);
  for (int m = 0; m < n; ++m) {
    std::vector<f128> a(n, 0);
    a[m] = 1;
    for (int pass = 0; pass < 2; ++pass)
      for (int i = 0; i < m; ++i) {
        const f128 c = bilinear(kern, q[i], a);
        for (int j = 0; j <= i; ++j) a[j] -= c * q[i][j];
      }
    const f128 nrm2 = bilinear(kern, a, a);
    if (!(nrm2 > 1e-60))
      throw ConvergenceError(
          "monomial chain lost numerical rank at degree " + std::to_string(m));
    const f128 inv = 1 / sqrt_q(nrm2);
    for (auto& v : a) v *= inv;
    q.push_back(std::move(a));
  }

  SpectralBasis basis;
  basis.d = d;
  basis.max_m = max_m;
  basis.psi.resize(n);
  basis.eigen_residual.resize(n);
  basis.lambda_rayleigh.resize(n);
  // All diagnostics describe the published double-rounded coefficients, not
  // the internal quad vectors, so they certify what callers actually use.
  std::vector<std::vector<f128>> qd(n, std::vector<f128>(n, 0));
  for (int m = 0; m < n; ++m) {
    GaussPolyFun p;
    p.d = d;
    p.width = cplx(kPi / 2, 0.0);
    p.coeffs.resize(m + 1);
    for (int j = 0; j <= m; ++j) {
      p.coeffs[j] = cplx(static_cast<double>(q[m][j] / kern.scale[j]), 0.0);
      qd[m][j] = f128(p.coeffs[j].real()) * kern.scale[j];
    }
    basis.psi[m] = std::move(p);

    const std::vector<f128> tq = apply_top(kern, qd[m]);
    const f128 nrm2 = bilinear(kern, qd[m], qd[m]);
    basis.lambda_rayleigh[m] =
        static_cast<double>(bilinear(kern, qd[m], tq) / nrm2);
    std::vector<f128> rho(n);
    for (int j = 0; j < n; ++j) rho[j] = tq[j] - kern.lam[m] * qd[m][j];
    const f128 r2 = bilinear(kern, rho, rho);
    basis.eigen_residual[m] = r2 > 0 ? std::sqrt(static_cast<double>(r2)) : 0.0;
  }
  f128 dev = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      f128 e = bilinear(kern, qd[i], qd[j]);
      if (i == j) e -= 1;
      if (abs_q(e) > dev) dev = abs_q(e);
    }
  basis.gram_deviation = static_cast<double>(dev);
  return basis;
}

GaussPolyFun eigenfunction(int d, int m) {
  return build_spectral_basis(d, m).psi[m];
}

// ---- constrained quadratic form --------------------------------------------

QuadFormResult t_quadratic_form(const GaussPolyFun& f, const GaussPolyFun& g,
                                double constraint_tol) {
  if (f.d != g.d) throw UsageError("operands must share the ambient dimension");
  check(f);
  check(g);
  require_unit_gauge(f.width);
  require_unit_gauge(g.width);
  const int d = f.d;
  const double nf = norm(f);
  const double ng = norm(g);

  const GaussPolyFun psi0 = standard_gaussian(d);
  const double m1 = d / (2.0 * kPi);
  const double m2 = m1 * (1.0 + 0.5 * d) / kPi;
  const double nu = 1.0 / std::sqrt(m2 - m1 * m1);
  GaussPolyFun psi1;
  psi1.d = d;
  psi1.width = cplx(kPi / 2, 0.0);
  psi1.coeffs = {cplx(-nu * m1, 0.0), cplx(nu, 0.0)};

  const cplx f0 = inner(f, psi0);
  const cplx g0 = inner(g, psi0);
  const cplx s1 = inner(gp_add(f, g), psi1);
  if (std::abs(f0) > constraint_tol * std::max(1.0, nf))
    throw DomainError("first slot is not orthogonal to the ground state");
  if (std::abs(g0) > constraint_tol * std::max(1.0, ng))
    throw DomainError("second slot is not orthogonal to the ground state");
  if (std::abs(s1) > constraint_tol * std::max(1.0, nf + ng))
    throw DomainError("slot sum is not orthogonal to the first excited state");

  const GaussPolyFun tf = apply_t(f);
  const GaussPolyFun tg = apply_t(g);
  QuadFormResult r;
  const double cross = 2.0 * inner(tf, g).real();
  r.proof_form = inner(tf, f).real() + cross + inner(tg, g).real();
  r.statement_form = norm(tf) * norm(tf) + cross + norm(tg) * norm(tg);
  r.bound = (d + 2.0) / (2.0 * (d + 1.0)) * (nf * nf + ng * ng);
  r.slack = r.bound - r.proof_form;
  return r;
}

}  // namespace radlab
