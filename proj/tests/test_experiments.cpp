#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "radlab/experiments.hpp"
#include "radlab/scalars.hpp"
#include "radlab/spectral.hpp"

using namespace radlab;

TEST_CASE("deficit of the pure Gaussian pair is zero") {
  const GaussPolyFun F = standard_gaussian(1);
  const DeficitReport rep = deficit_report(F, gp_scale(F, cplx(0.0, 2.0)));
  CHECK(rep.phi == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(rep.deficit) <= 1e-11);
  CHECK(rep.dist <= 1e-7);
  CHECK(!rep.has_ratios);
}

TEST_CASE("deficit ratio along psi_2 approaches the local constant") {
  const double eps = 0.02;
  const GaussPolyFun f =
      gp_add(standard_gaussian(1), gp_scale(eigenfunction(1, 2), eps));
  const DeficitReport rep = deficit_report(f, f);
  REQUIRE(rep.has_ratios);
  CHECK(rep.ratio_one_minus_phi == doctest::Approx(0.25).epsilon(5e-3));
  CHECK(rep.ratio_one_minus_root == doctest::Approx(0.125).epsilon(5e-3));
  CHECK(rep.deficit > 0.0);
}

TEST_CASE("second-order sweep recovers the quadratic form coefficient") {
  const GaussPolyFun psi2 = eigenfunction(1, 2);
  const SweepReport sym = second_order_sweep(psi2, psi2);
  CHECK(sym.c2_predicted == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(sym.c2 == doctest::Approx(sym.c2_predicted).epsilon(1e-3));
  CHECK(sym.fit_residual <= 1e-3 * std::abs(sym.c2));
  CHECK(sym.points.size() == 9);

  const SweepReport anti = second_order_sweep(psi2, gp_scale(psi2, -1.0));
  CHECK(anti.c2_predicted == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(anti.c2 == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(anti.fit_residual <= 1e-3 * std::abs(anti.c2));
}

TEST_CASE("sweep rejects inadmissible directions") {
  const GaussPolyFun psi1 = eigenfunction(1, 1);
  const GaussPolyFun psi2 = eigenfunction(1, 2);
  CHECK_THROWS_AS(second_order_sweep(psi1, psi2), DomainError);
  CHECK_THROWS_AS(second_order_sweep(psi2, psi2, 0.1, 0.05, 9), UsageError);
}

TEST_CASE("sharp constant probe finds the minimum at m = 2") {
  const ProbeReport rep = sharp_constant_probe(1, 2, 4);
  CHECK(rep.predicted_local_constant == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(rep.argmin_m == 2);
  CHECK(rep.min_ratio == doctest::Approx(0.25).epsilon(0.01));
  for (const ProbeEntry& entry : rep.entries) {
    if (entry.antisym) {
      CHECK(entry.limit_ratio == doctest::Approx(1.0).epsilon(0.01));
    } else {
      const double want = 1.0 - 2.0 * eigenvalue_lambda(1, entry.m);
      CHECK(entry.limit_ratio == doctest::Approx(want).epsilon(0.01));
    }
  }
  // The square-root normalization halves the limiting ratio.
  CHECK(rep.entries.front().limit_ratio_root ==
        doctest::Approx(0.125).epsilon(0.02));
}

TEST_CASE("random stability scan stays nonnegative and deterministic") {
  const ScanReport rep = random_stability_scan(1, 50, 777, 0.1);
  CHECK(rep.samples.size() == 50);
  CHECK(rep.min_deficit >= -1e-9);
  int controls = 0;
  for (const ScanSample& s : rep.samples) {
    if (s.control) {
      ++controls;
      CHECK(s.dist <= 1e-7);
      CHECK(!s.has_ratio);
    } else {
      REQUIRE(s.has_ratio);
      CHECK(s.ratio > 0.0);
    }
  }
  CHECK(controls == 2);
  CHECK(rep.mean_ratio > 0.1);
  CHECK(rep.mean_ratio < 1.5);
  // Regression pin for the seeded run; any change here means the sampling
  // stream or the deficit pipeline changed behavior.
  CHECK(rep.mean_ratio == doctest::Approx(0.72397062308170879).epsilon(1e-9));
  CHECK(rep.min_ratio == doctest::Approx(0.56424522466510962).epsilon(1e-9));
  MESSAGE("scan mean ratio = ", rep.mean_ratio);

  const ScanReport again = random_stability_scan(1, 50, 777, 0.1);
  CHECK(rep.mean_ratio == again.mean_ratio);
  CHECK(rep.min_ratio == again.min_ratio);
}

TEST_CASE("Fourier transform leaves the projection norm invariant") {
  for (int d : {1, 2}) {
    const FourierInvarianceReport rep = fourier_invariance_check(d, 10, 7);
    CHECK(rep.diffs.size() == 10);
    CHECK(rep.max_diff <= 1e-8);
  }
}

TEST_CASE("Lorentz ratios are finite and scale invariant") {
  const LorentzReport gauss = lorentz_ratio_scan("gauss", 1, 4, 11);
  CHECK(gauss.entries.size() == 4);
  for (const LorentzEntry& e : gauss.entries) {
    CHECK(std::isfinite(e.ratio));
    CHECK(e.ratio > 0.0);
  }
  CHECK(gauss.invariance_err <= 1e-6);

  const LorentzReport ind = lorentz_ratio_scan("indicator", 1, 3, 13);
  CHECK(ind.entries.size() == 3);
  for (const LorentzEntry& e : ind.entries) {
    CHECK(e.ratio > 0.0);
    CHECK(e.ratio <= 1.0 + 1e-9);
  }
  CHECK(ind.invariance_err <= 1e-6);
  CHECK_THROWS_AS(lorentz_ratio_scan("nope", 1, 1, 1), UsageError);
}
