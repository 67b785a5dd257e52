#include "radlab/selfcheck.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "radlab/experiments.hpp"
#include "radlab/funcspace.hpp"
#include "radlab/gaussfit.hpp"
#include "radlab/radproj.hpp"
#include "radlab/radsets.hpp"
#include "radlab/rng.hpp"
#include "radlab/scalars.hpp"
#include "radlab/spectral.hpp"

namespace radlab {

namespace {

std::uint64_t sub_seed(std::uint64_t seed, int k) {
  return seed * 1000003ULL + std::uint64_t(k);
}

// Criterion 1: the recomputed leading coefficient of T on each monomial
// matches the closed-form eigenvalue.
CheckResult check_eigenvalues() {
  CheckResult r{1, "eigenvalue-recomputation", true, 0.0, 1e-10, {}, 1.0, 0.0};
  for (int d : {1, 2, 3})
    for (int m = 0; m <= 12; ++m) {
      GaussPolyFun u;
      u.d = d;
      u.coeffs.assign(m + 1, cplx(0.0));
      u.coeffs[m] = 1.0;
      const GaussPolyFun tu = apply_t(u);
      r.value = std::max(
          r.value, std::abs(tu.coeffs[m] - cplx(eigenvalue_lambda(d, m))));
    }
  r.pass = r.value <= r.tolerance;
  return r;
}

// Criterion 2: the published eigenbasis is orthonormal and the operator
// residuals are small.
CheckResult check_eigenbasis() {
  CheckResult r{2, "eigenbasis-orthonormality", true, 0.0, 1e-10, {}, 1.0,
                0.0};
  double res = 0.0;
  for (int d : {1, 2, 3}) {
    const SpectralBasis b = build_spectral_basis(d, 12);
    r.value = std::max(r.value, b.gram_deviation);
    for (double e : b.eigen_residual) res = std::max(res, e);
  }
  r.details.push_back({"eigen_residual_max", res, 1e-8, res <= 1e-8});
  r.pass = r.value <= r.tolerance && r.details[0].pass;
  return r;
}

// Criterion 3: closed-form projection norms agree with the theta-quadrature
// path on random equal-width analytic pairs.
CheckResult check_projection_paths(std::uint64_t seed) {
  CheckResult r{3, "projection-closed-vs-quadrature", true, 0.0, 1e-8, {}, 5.0,
                0.0};
  for (int i = 0; i < 10; ++i) {
    const int d = 1 + i % 3;
    CounterRng rng(sub_seed(seed, 300), i + 1);
    const cplx w(std::exp(rng.uniform(-0.7, 0.7)) * kPi / 2,
                 rng.uniform(-1.0, 1.0));
    auto draw = [&] {
      GaussPolyFun f;
      f.d = d;
      f.width = w;
      f.coeffs.resize(1 + rng.next_u64() % 7);
      for (auto& c : f.coeffs) c = rng.normal_c();
      return f;
    };
    const GaussPolyFun f = draw(), g = draw();
    const double closed = projection_norm(f, g);
    const double sampled = norm(as_anyfun(project_tensor_sampled(f, g)));
    r.value = std::max(r.value,
                       std::abs(closed - sampled) / std::max(closed, 1e-30));
  }
  r.pass = r.value <= r.tolerance;
  return r;
}

// Criterion 4: the limiting deficit ratio along eigen directions attains its
// minimum at m = 2 with the predicted local constant.
CheckResult check_sharp_constant() {
  CheckResult r{4, "sharp-local-constant", true, 0.0, 0.02, {}, 30.0, 0.0};
  for (int d : {1, 2}) {
    const ProbeReport p = sharp_constant_probe(d, 2, 8);
    const double target = d / (2.0 * (d + 1));
    const double rel = std::abs(p.min_ratio - target) / target;
    r.value = std::max(r.value, rel);
    r.details.push_back({"argmin_m_d" + std::to_string(d),
                         double(p.argmin_m), 0.0, p.argmin_m == 2});
  }
  r.pass = r.value <= r.tolerance;
  for (const auto& dt : r.details) r.pass = r.pass && dt.pass;
  return r;
}

// Criterion 5: the averaged-energy quadratic form stays below its bound on
// random admissible pairs and attains it on the m = 2 eigen direction.
CheckResult check_energy_bound(std::uint64_t seed) {
  CheckResult r{5, "t-energy-bound", true, 0.0, 1e-9, {}, 10.0, 0.0};
  std::vector<SpectralBasis> bases;
  for (int d : {1, 2, 3}) bases.push_back(build_spectral_basis(d, 8));
  double min_slack = 0.0;
  bool first = true;
  for (int i = 0; i < 1000; ++i) {
    const int d = 1 + i % 3;
    const SpectralBasis& b = bases[d - 1];
    CounterRng rng(sub_seed(seed, 500), i + 1);
    cplx a[9], bb[9];
    for (int m = 1; m <= 8; ++m) {
      a[m] = rng.normal_c();
      bb[m] = rng.normal_c();
    }
    bb[1] = -a[1];
    GaussPolyFun f = gp_scale(b.psi[1], a[1]);
    GaussPolyFun g = gp_scale(b.psi[1], bb[1]);
    for (int m = 2; m <= 8; ++m) {
      f = gp_add(f, gp_scale(b.psi[m], a[m]));
      g = gp_add(g, gp_scale(b.psi[m], bb[m]));
    }
    const QuadFormResult q = t_quadratic_form(f, g);
    if (first || q.slack < min_slack) min_slack = q.slack;
    first = false;
  }
  r.value = min_slack;
  const GaussPolyFun psi2 = bases[0].psi[2];
  const double eq = std::abs(t_quadratic_form(psi2, psi2).slack);
  r.details.push_back({"equality_slack_m2", eq, 1e-10, eq <= 1e-10});
  r.pass = r.value >= -r.tolerance && r.details[0].pass;
  return r;
}

// Criterion 6: the Fourier transform leaves the projection norm invariant.
CheckResult check_fourier(std::uint64_t seed) {
  CheckResult r{6, "fourier-invariance", true, 0.0, 1e-8, {}, 5.0, 0.0};
  for (int d : {1, 2}) {
    const FourierInvarianceReport rep =
        fourier_invariance_check(d, 10, sub_seed(seed, 600 + d));
    r.value = std::max(r.value, rep.max_diff);
  }
  r.pass = r.value <= r.tolerance;
  return r;
}

RadialSet random_radial_set(int d, CounterRng& rng) {
  RadialSet s;
  s.d = d;
  const int k = 1 + int(rng.next_u64() % 2);
  double lo = rng.uniform(0.2, 0.8);
  for (int i = 0; i < k; ++i) {
    const double hi = lo + rng.uniform(0.2, 1.0);
    s.annuli.push_back({lo, hi});
    lo = hi + rng.uniform(0.1, 0.5);
  }
  return s;
}

// Criterion 7: the incomplete-Beta evaluation of the sphere-slice measure
// agrees with Monte Carlo sphere sampling, satisfies the first-moment
// identity, and is exactly scale invariant.
CheckResult check_sigma(std::uint64_t seed) {
  CheckResult r{7, "sphere-slice-exact-vs-mc", true, 0.0, 3e-3, {}, 60.0, 0.0};
  double fm = 0.0, si = 0.0;
  for (int cfg = 0; cfg < 10; ++cfg) {
    const int d = 1 + cfg % 3;
    CounterRng rng(sub_seed(seed, 700), cfg + 1);
    const RadialSet A = random_radial_set(d, rng);
    const RadialSet B = random_radial_set(d, rng);
    const auto [alo, ahi] = A.annuli.front();
    const auto [blo, bhi] = B.annuli.front();
    const double rlo = std::sqrt(alo * alo + blo * blo);
    const double rhi = std::sqrt(ahi * ahi + bhi * bhi);
    int k = 0;
    for (double frac : {0.25, 0.55, 0.85}) {
      const double rr = rlo + frac * (rhi - rlo);
      const double exact = sigma_r(A, B, rr);
      const double mc = sigma_r_monte_carlo(A, B, rr, 1000000,
                                            sub_seed(seed, 710) + 3 * cfg + k);
      r.value = std::max(r.value, std::abs(exact - mc));
      ++k;
    }
    fm = std::max(fm, first_moment_residual(A, B));
    const double rmid = 0.5 * (rlo + rhi);
    const double s = 2.7;
    si = std::max(si, std::abs(sigma_r(A, B, rmid) -
                               sigma_r(scale_set(A, s), scale_set(B, s),
                                       s * rmid)));
  }
  r.details.push_back({"first_moment_rel_max", fm, 1e-8, fm <= 1e-8});
  r.details.push_back({"scale_invariance_max", si, 1e-12, si <= 1e-12});
  r.pass = r.value <= r.tolerance && r.details[0].pass && r.details[1].pass;
  return r;
}

// Criterion 8: the slice-measure inequality scans stay finite; no constant
// is asserted, only boundedness of the observed ratios.
CheckResult check_lorentz_lemmas(std::uint64_t seed) {
  CheckResult r{8, "lorentz-lemma-scans", true, 0.0, 0.0, {}, 60.0, 0.0};
  std::vector<BoundReport> reports = bound_sweep(1, 6, sub_seed(seed, 800),
                                                 1.0 / 30.0);
  const std::vector<BoundReport> more =
      bound_sweep(2, 4, sub_seed(seed, 801), 1.0 / 30.0);
  reports.insert(reports.end(), more.begin(), more.end());
  int nonfinite = 0;
  double max_ratio = 0.0;
  for (const BoundReport& b : reports) {
    if (!b.finite || !std::isfinite(b.ratio)) ++nonfinite;
    max_ratio = std::max(max_ratio, b.ratio);
  }
  r.value = double(nonfinite);
  r.details.push_back(
      {"max_ratio", max_ratio, 0.0, std::isfinite(max_ratio)});
  r.pass = nonfinite == 0 && r.details[0].pass;
  return r;
}

// Criterion 9: planted Gaussian pairs are recovered to the pinned distance
// and width accuracy; a perturbed plant reproduces dist^2 = 2 eps^2.
CheckResult check_fit_recovery(std::uint64_t seed) {
  CheckResult r{9, "gaussian-fit-recovery", true, 0.0, 1e-8, {}, 30.0, 0.0};
  double gerr = 0.0;
  for (int i = 0; i < 50; ++i) {
    const int d = 1 + i % 3;
    CounterRng rng(sub_seed(seed, 900), i + 1);
    const cplx gamma(std::exp(rng.uniform(-1.5, 1.5)), rng.uniform(-2.0, 2.0));
    GaussPolyFun f = pure_gaussian(d, gamma);
    GaussPolyFun g = pure_gaussian(d, gamma);
    f.coeffs[0] = rng.uniform(0.5, 2.0) * rng.unit_phase();
    g.coeffs[0] = rng.uniform(0.5, 2.0) * rng.unit_phase();
    const GaussFitResult fit = nearest_gaussian_pair(f, g);
    r.value = std::max(r.value, fit.dist);
    gerr = std::max(gerr, std::abs(fit.gamma - gamma));
  }
  const double eps = 0.05;
  const GaussPolyFun u =
      gp_add(standard_gaussian(1), gp_scale(eigenfunction(1, 2), eps));
  const GaussFitResult pf = nearest_gaussian_pair(u, u);
  const double ratio_err =
      std::abs(pf.dist * pf.dist / (2.0 * eps * eps) - 1.0);
  r.details.push_back({"gamma_abs_err_max", gerr, 1e-6, gerr <= 1e-6});
  r.details.push_back(
      {"perturbed_dist_sq_rel_err", ratio_err, 0.01, ratio_err <= 0.01});
  r.pass = r.value <= r.tolerance && r.details[0].pass && r.details[1].pass;
  return r;
}

// Criterion 10: random stability scans keep every deficit nonnegative and
// every measurable ratio positive.
CheckResult check_stability_scan(std::uint64_t seed) {
  CheckResult r{10, "stability-positivity-scan", true, 0.0, 1e-9, {}, 120.0,
                0.0};
  double min_deficit = 0.0, min_ratio = 0.0;
  bool first = true;
  for (int d : {1, 2}) {
    const ScanReport rep = random_stability_scan(d, 200, sub_seed(seed, d));
    if (first || rep.min_deficit < min_deficit) min_deficit = rep.min_deficit;
    if (first || rep.min_ratio < min_ratio) min_ratio = rep.min_ratio;
    first = false;
  }
  r.value = min_deficit;
  r.details.push_back({"min_ratio", min_ratio, 0.0, min_ratio > 0.0});
  r.pass = r.value >= -r.tolerance && r.details[0].pass;
  return r;
}

// Criterion 11: replacing both slots by their moduli never decreases the
// projection norm.
CheckResult check_modulus(std::uint64_t seed) {
  CheckResult r{11, "modulus-monotonicity", true, 0.0, 1e-8, {}, 30.0, 0.0};
  double min_slack = 0.0;
  bool first = true;
  for (int i = 0; i < 50; ++i) {
    const int d = 1 + i % 3;
    CounterRng rng(sub_seed(seed, 1100), i + 1);
    auto draw = [&] {
      GaussPolyFun f;
      f.d = d;
      f.width = cplx(std::exp(rng.uniform(-0.5, 0.5)) * kPi / 2,
                     rng.uniform(-1.0, 1.0));
      f.coeffs.resize(2 + rng.next_u64() % 3);
      for (auto& c : f.coeffs) c = rng.normal_c();
      return to_profile(f, 192);
    };
    const ProfileFun pf = draw(), pg = draw();
    ProfileFun af = pf, ag = pg;
    for (auto& v : af.values) v = std::abs(v);
    for (auto& v : ag.values) v = std::abs(v);
    const double pn = projection_norm(AnyFun(pf), AnyFun(pg));
    const double pn_mod = projection_norm(AnyFun(af), AnyFun(ag));
    const double slack = pn_mod - pn;
    if (first || slack < min_slack) min_slack = slack;
    first = false;
  }
  r.value = min_slack;
  r.pass = r.value >= -r.tolerance;
  return r;
}

}  // namespace

std::vector<CheckResult> run_selfcheck(std::uint64_t seed) {
  using clock = std::chrono::steady_clock;
  std::vector<CheckResult> out;
  const auto timed = [&](auto&& fn) {
    const auto t0 = clock::now();
    CheckResult r = fn();
    r.seconds = std::chrono::duration<double>(clock::now() - t0).count();
    out.push_back(std::move(r));
  };
  timed([&] { return check_eigenvalues(); });
  timed([&] { return check_eigenbasis(); });
  timed([&] { return check_projection_paths(seed); });
  timed([&] { return check_sharp_constant(); });
  timed([&] { return check_energy_bound(seed); });
  timed([&] { return check_fourier(seed); });
  timed([&] { return check_sigma(seed); });
  timed([&] { return check_lorentz_lemmas(seed); });
  timed([&] { return check_fit_recovery(seed); });
  timed([&] { return check_stability_scan(seed); });
  timed([&] { return check_modulus(seed); });
  return out;
}

}  // namespace radlab
