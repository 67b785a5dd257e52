#include "radlab/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "radlab/radproj.hpp"
#include "radlab/radsets.hpp"
#include "radlab/rng.hpp"
#include "radlab/scalars.hpp"
#include "radlab/spectral.hpp"

namespace radlab {

namespace {

AnyFun scale_any(const AnyFun& f, cplx s) {
  if (const auto* gp = std::get_if<GaussPolyFun>(&f)) return gp_scale(*gp, s);
  if (const auto* mg = std::get_if<MonomialGaussFun>(&f)) {
    MonomialGaussFun h = *mg;
    h.coeff *= s;
    return h;
  }
  ProfileFun h = std::get<ProfileFun>(f);
  for (auto& v : h.values) v *= s;
  return h;
}

struct PolyFit {
  double c2 = 0.0, c3 = 0.0, residual = 0.0;
};

// Weighted least squares for y ~ c2 eps^2 + c3 eps^3 with weights eps^{-4};
// the residual is reported per eps^2 so it compares directly with c2.
PolyFit fit_quad_cubic(const std::vector<double>& eps,
                       const std::vector<double>& y) {
  double a11 = 0, a12 = 0, a22 = 0, b1 = 0, b2 = 0;
  for (size_t i = 0; i < eps.size(); ++i) {
    const double e = eps[i];
    a11 += 1.0;
    a12 += e;
    a22 += e * e;
    b1 += y[i] / (e * e);
    b2 += y[i] / e;
  }
  const double det = a11 * a22 - a12 * a12;
  if (!(std::abs(det) > 0))
    throw UsageError("sweep grid is degenerate");
  PolyFit out;
  out.c2 = (b1 * a22 - b2 * a12) / det;
  out.c3 = (a11 * b2 - a12 * b1) / det;
  for (size_t i = 0; i < eps.size(); ++i) {
    const double e = eps[i];
    const double model = out.c2 * e * e + out.c3 * e * e * e;
    out.residual = std::max(out.residual, std::abs(y[i] - model) / (e * e));
  }
  return out;
}

double normalized_phi(const AnyFun& f, const AnyFun& g) {
  const double pn = projection_norm(scale_any(f, 1.0 / norm(f)),
                                    scale_any(g, 1.0 / norm(g)));
  return pn * pn;
}

}  // namespace

// ---- single-pair deficit ---------------------------------------------------

DeficitReport deficit_report(const AnyFun& f, const AnyFun& g) {
  check(f);
  check(g);
  if (dimension(f) != dimension(g))
    throw UsageError("operands must share the ambient dimension");
  DeficitReport rep;
  rep.d = dimension(f);
  rep.norm_f = norm(f);
  rep.norm_g = norm(g);
  if (rep.norm_f <= 0.0 || rep.norm_g <= 0.0)
    throw UsageError("slot norm vanishes; the functional is undefined");
  const AnyFun fn = scale_any(f, 1.0 / rep.norm_f);
  const AnyFun gn = scale_any(g, 1.0 / rep.norm_g);
  const double pn = projection_norm(fn, gn);
  rep.phi = pn * pn;
  if (rep.phi > 1.0 + 1e-9)
    throw ConvergenceError(
        "projection norm exceeds the contraction bound; quadrature failure");
  rep.deficit = 1.0 - rep.phi;
  rep.fit = nearest_gaussian_pair(fn, gn);
  if (!rep.fit.converged)
    throw ConvergenceError("nearest-Gaussian fit did not reach stationarity");
  rep.dist = rep.fit.dist;
  if (rep.dist > 1e-6) {
    rep.has_ratios = true;
    rep.ratio_one_minus_phi = rep.deficit / (rep.dist * rep.dist);
    rep.ratio_one_minus_root = (1.0 - pn) / (rep.dist * rep.dist);
  }
  return rep;
}

// ---- second-order sweep ----------------------------------------------------

SweepReport second_order_sweep(const GaussPolyFun& dir_f,
                               const GaussPolyFun& dir_g, double eps_lo,
                               double eps_hi, int n_eps) {
  if (!(eps_lo > 0.0) || !(eps_hi > eps_lo) || n_eps < 3)
    throw UsageError("sweep grid must satisfy 0 < eps_lo < eps_hi, n >= 3");
  const QuadFormResult q = t_quadratic_form(dir_f, dir_g);
  const double nf = norm(dir_f);
  const double ng = norm(dir_g);
  if (nf + ng <= 0.0) throw UsageError("sweep directions vanish");
  SweepReport rep;
  rep.d = dir_f.d;
  rep.c2_predicted = nf * nf + ng * ng - q.proof_form;
  const GaussPolyFun F = standard_gaussian(dir_f.d);
  std::vector<double> eps(n_eps), def(n_eps);
  for (int i = 0; i < n_eps; ++i) {
    const double e = eps_lo + (eps_hi - eps_lo) * i / (n_eps - 1);
    const GaussPolyFun u = gp_add(F, gp_scale(dir_f, e));
    const GaussPolyFun v = gp_add(F, gp_scale(dir_g, e));
    const double phi = normalized_phi(u, v);
    eps[i] = e;
    def[i] = 1.0 - phi;
    rep.points.push_back({e, phi, 1.0 - phi});
  }
  const PolyFit fit = fit_quad_cubic(eps, def);
  rep.c2 = fit.c2;
  rep.c3 = fit.c3;
  rep.fit_residual = fit.residual;
  return rep;
}

// ---- sharp constant probe --------------------------------------------------

ProbeReport sharp_constant_probe(int d, int m_lo, int m_hi, double eps_lo,
                                 double eps_hi, int n_eps) {
  if (m_lo < 2 || m_hi < m_lo)
    throw UsageError("probe needs eigen indices with 2 <= m_lo <= m_hi");
  const SpectralBasis basis = build_spectral_basis(d, m_hi);
  const GaussPolyFun F = standard_gaussian(d);
  ProbeReport rep;
  rep.d = d;
  rep.predicted_local_constant = d / (2.0 * (d + 1.0));

  auto probe_direction = [&](int m, bool antisym) {
    std::vector<double> eps(n_eps), def(n_eps), root(n_eps), d2(n_eps);
    for (int i = 0; i < n_eps; ++i) {
      const double e = eps_lo + (eps_hi - eps_lo) * i / (n_eps - 1);
      const GaussPolyFun u = gp_add(F, gp_scale(basis.psi[m], e));
      const GaussPolyFun v =
          gp_add(F, gp_scale(basis.psi[m], antisym ? -e : e));
      const AnyFun un = scale_any(u, 1.0 / norm(u));
      const AnyFun vn = scale_any(v, 1.0 / norm(v));
      const double pn = projection_norm(un, vn);
      const GaussFitResult fit = nearest_gaussian_pair(un, vn);
      if (!fit.converged)
        throw ConvergenceError("nearest-Gaussian fit failed inside the probe");
      eps[i] = e;
      def[i] = 1.0 - pn * pn;
      root[i] = 1.0 - pn;
      d2[i] = fit.dist * fit.dist;
    }
    ProbeEntry entry;
    entry.m = m;
    entry.antisym = antisym;
    entry.c2_deficit = fit_quad_cubic(eps, def).c2;
    entry.d2_dist = fit_quad_cubic(eps, d2).c2;
    entry.limit_ratio = entry.c2_deficit / entry.d2_dist;
    entry.limit_ratio_root = fit_quad_cubic(eps, root).c2 / entry.d2_dist;
    return entry;
  };

  rep.min_ratio = 0.0;
  for (int m = m_lo; m <= m_hi; ++m) {
    const ProbeEntry entry = probe_direction(m, false);
    if (rep.entries.empty() || entry.limit_ratio < rep.min_ratio) {
      rep.min_ratio = entry.limit_ratio;
      rep.argmin_m = m;
    }
    rep.entries.push_back(entry);
  }
  rep.entries.push_back(probe_direction(m_lo, true));
  return rep;
}

// ---- randomized stability scan ---------------------------------------------

ScanReport random_stability_scan(int d, int n, std::uint64_t seed, double amp) {
  if (n < 1) throw UsageError("scan needs at least one sample");
  const SpectralBasis basis = build_spectral_basis(d, 6);
  ScanReport rep;
  rep.d = d;
  rep.n = n;
  rep.seed = seed;
  rep.amp = amp;
  rep.min_deficit = 0.0;
  double sum_ratio = 0.0;
  for (int i = 0; i < n; ++i) {
    CounterRng rng(seed, static_cast<std::uint64_t>(i) + 1);
    const bool control = (i % 25) == 24;
    GaussPolyFun u = basis.psi[0];
    GaussPolyFun v = basis.psi[0];
    if (!control) {
      for (int m = 1; m <= 6; ++m)
        u = gp_add(u, gp_scale(basis.psi[m], amp * rng.normal_c()));
      for (int m = 1; m <= 6; ++m)
        v = gp_add(v, gp_scale(basis.psi[m], amp * rng.normal_c()));
    }
    // Hide the pair inside the symmetry group: joint dilation and
    // modulation, independent scalar per slot.
    const double rho = std::exp(rng.uniform(-0.5, 0.5));
    const double t = rng.uniform(-2.0, 2.0);
    const cplx sf = rng.uniform(0.5, 2.0) * rng.unit_phase();
    const cplx sg = rng.uniform(0.5, 2.0) * rng.unit_phase();
    const GaussPolyFun fu = gp_scale(modulate(dilate(u, rho, true), t), sf);
    const GaussPolyFun fv = gp_scale(modulate(dilate(v, rho, true), t), sg);
    const DeficitReport dr = deficit_report(fu, fv);
    ScanSample sample;
    sample.index = i;
    sample.deficit = dr.deficit;
    sample.dist = dr.dist;
    sample.control = control;
    sample.has_ratio = dr.has_ratios && !control;
    if (sample.has_ratio) sample.ratio = dr.ratio_one_minus_phi;
    rep.min_deficit = std::min(rep.min_deficit, sample.deficit);
    if (sample.has_ratio) {
      if (rep.n_ratio == 0) {
        rep.min_ratio = rep.max_ratio = sample.ratio;
      } else {
        rep.min_ratio = std::min(rep.min_ratio, sample.ratio);
        rep.max_ratio = std::max(rep.max_ratio, sample.ratio);
      }
      sum_ratio += sample.ratio;
      ++rep.n_ratio;
    }
    rep.samples.push_back(sample);
  }
  if (rep.n_ratio > 0) rep.mean_ratio = sum_ratio / rep.n_ratio;
  return rep;
}

// ---- Fourier invariance ----------------------------------------------------

FourierInvarianceReport fourier_invariance_check(int d, int n,
                                                 std::uint64_t seed) {
  FourierInvarianceReport rep;
  rep.d = d;
  for (int i = 0; i < n; ++i) {
    CounterRng rng(seed, static_cast<std::uint64_t>(i) + 1);
    const cplx width(std::exp(rng.uniform(-0.7, 0.7)) * kPi / 2,
                     rng.uniform(-1.0, 1.0));
    GaussPolyFun f, g;
    f.d = g.d = d;
    f.width = g.width = width;
    for (int j = 0; j <= 4; ++j) f.coeffs.push_back(rng.normal_c());
    for (int j = 0; j <= 3; ++j) g.coeffs.push_back(rng.normal_c());
    const double p0 = projection_norm(f, g);
    const double p1 = projection_norm(fourier(f), fourier(g));
    rep.diffs.push_back(std::abs(p1 - p0));
    rep.max_diff = std::max(rep.max_diff, rep.diffs.back());
  }
  return rep;
}

// ---- Lorentz ratio scan ----------------------------------------------------

namespace {

RadialSet random_annuli(CounterRng& rng, int d) {
  RadialSet s;
  s.d = d;
  double lo = rng.uniform(0.0, 0.4);
  const int pieces = 1 + static_cast<int>(3.0 * rng.uniform01());
  for (int p = 0; p < pieces; ++p) {
    const double hi = lo + rng.uniform(0.1, 1.0);
    s.annuli.emplace_back(lo, hi);
    lo = hi + rng.uniform(0.1, 0.8);
  }
  return s;
}

}  // namespace

LorentzReport lorentz_ratio_scan(const std::string& family, int d, int n,
                                 std::uint64_t seed) {
  LorentzReport rep;
  rep.family = family;
  rep.d = d;
  if (family == "gauss") {
    for (int i = 0; i < n; ++i) {
      CounterRng rng(seed, static_cast<std::uint64_t>(i) + 1);
      const cplx width(std::exp(rng.uniform(-0.5, 0.5)) * kPi / 2,
                       rng.uniform(-0.5, 0.5));
      GaussPolyFun f, g;
      f.d = g.d = d;
      f.width = g.width = width;
      for (int j = 0; j <= 2; ++j) f.coeffs.push_back(rng.normal_c());
      for (int j = 0; j <= 2; ++j) g.coeffs.push_back(rng.normal_c());
      double base = 0.0;
      for (double rho : {1.0, 0.25, 4.0}) {
        const GaussPolyFun fr = dilate(f, rho, false);
        const GaussPolyFun gr = dilate(g, rho, false);
        const double ratio = projection_norm(fr, gr) /
                             (lorentz_24_norm(fr) * lorentz_24_norm(gr));
        if (rho == 1.0) {
          base = ratio;
          LorentzEntry entry;
          entry.config = "gauss sample " + std::to_string(i);
          entry.pn = projection_norm(fr, gr);
          entry.l24_f = lorentz_24_norm(fr);
          entry.l24_g = lorentz_24_norm(gr);
          entry.ratio = ratio;
          rep.entries.push_back(entry);
          rep.max_ratio = std::max(rep.max_ratio, ratio);
        } else {
          rep.invariance_err =
              std::max(rep.invariance_err, std::abs(ratio / base - 1.0));
        }
      }
    }
  } else if (family == "indicator") {
    for (int i = 0; i < n; ++i) {
      CounterRng rng(seed, static_cast<std::uint64_t>(i) + 1);
      const RadialSet A = random_annuli(rng, d);
      const RadialSet B = random_annuli(rng, d);
      double base = 0.0;
      for (double s : {1.0, 3.0}) {
        const RadialSet As = scale_set(A, s);
        const RadialSet Bs = scale_set(B, s);
        const double lf = lorentz_24_norm(As);
        const double lg = lorentz_24_norm(Bs);
        const double ratio = indicator_projection_norm(As, Bs) / (lf * lg);
        if (s == 1.0) {
          base = ratio;
          LorentzEntry entry;
          entry.config = describe(As) + " | " + describe(Bs);
          entry.pn = ratio * lf * lg;
          entry.l24_f = lf;
          entry.l24_g = lg;
          entry.ratio = ratio;
          rep.entries.push_back(entry);
          rep.max_ratio = std::max(rep.max_ratio, ratio);
        } else {
          rep.invariance_err =
              std::max(rep.invariance_err, std::abs(ratio / base - 1.0));
        }
      }
    }
  } else {
    throw UsageError("unknown family '" + family +
                     "'; expected gauss or indicator");
  }
  return rep;
}

}  // namespace radlab
