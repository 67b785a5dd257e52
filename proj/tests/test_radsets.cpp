#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "radlab/radsets.hpp"
#include "radlab/rng.hpp"
#include "radlab/scalars.hpp"

using namespace radlab;

namespace {

RadialSet random_set(CounterRng& rng, int d, int max_pieces) {
  RadialSet s;
  s.d = d;
  double lo = rng.uniform(0.0, 0.4);
  const int pieces = 1 + int(max_pieces * rng.uniform01());
  for (int p = 0; p < pieces; ++p) {
    const double hi = lo + rng.uniform(0.1, 1.0);
    s.annuli.emplace_back(lo, hi);
    lo = hi + rng.uniform(0.1, 0.8);
  }
  return s;
}

}  // namespace

TEST_CASE("measure of balls and annuli") {
  CHECK(measure(ball(1, 1.0)) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(measure(ball(2, 1.0)) == doctest::Approx(kPi).epsilon(1e-14));
  CHECK(measure(ball(3, 1.0)) == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-14));
  CHECK(measure(annulus(2, 1.0, 2.0)) == doctest::Approx(3.0 * kPi).epsilon(1e-14));
  // Scaling by s multiplies measure by s^d.
  const RadialSet A = annulus(3, 0.5, 1.5);
  CHECK(measure(scale_set(A, 2.0)) == doctest::Approx(8.0 * measure(A)).epsilon(1e-13));
  CHECK(lorentz_24_norm(ball(1, 1.0)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("radial set validation") {
  RadialSet bad;
  bad.d = 1;
  bad.annuli = {{0.5, 0.2}};
  CHECK_THROWS_AS(check(bad), DomainError);
  bad.annuli = {{0.0, 1.0}, {0.5, 2.0}};  // overlapping
  CHECK_THROWS_AS(check(bad), DomainError);
  bad.annuli.clear();
  CHECK_THROWS_AS(check(bad), DomainError);
}

TEST_CASE("sigma_r: unit balls in d = 1, pinned values") {
  const RadialSet A = ball(1, 1.0);
  // Sphere fully inside A x A below r = 1.
  CHECK(sigma_r(A, A, 0.5) == 1.0);
  CHECK(sigma_r(A, A, 0.0) == 1.0);
  // Exact arcsine value at r = 1.2: (2/pi)(2 asin(5/6) - pi/2).
  CHECK(sigma_r(A, A, 1.2) ==
        doctest::Approx(0.2542820052906508).epsilon(1e-12));
  // Beyond sqrt(2) the sphere misses the product set.
  CHECK(sigma_r(A, A, 1.5) == 0.0);
  // Monotone in the radius window [1, sqrt(2)].
  CHECK(sigma_r(A, A, 1.1) > sigma_r(A, A, 1.3));
}

TEST_CASE("sigma against the half-space marginal: arcsine formula") {
  // B huge: sigma_1(A x B) = (2/pi) sum (asin b_i - asin a_i) in d = 1.
  const RadialSet B = ball(1, 50.0);
  RadialSet A;
  A.d = 1;
  A.annuli = {{0.1, 0.3}, {0.55, 0.8}};
  double want = 0.0;
  for (const auto& [a, b] : A.annuli)
    want += (2.0 / kPi) * (std::asin(b) - std::asin(a));
  CHECK(sigma_r(A, B, 1.0) == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("sigma is monotone in each set argument") {
  const RadialSet small = annulus(2, 0.3, 0.9);
  const RadialSet big = ball(2, 1.0);
  const RadialSet other = ball(2, 0.8);
  for (double r : {0.4, 0.8, 1.1, 1.25})
    CHECK(sigma_r(small, other, r) <= sigma_r(big, other, r) + 1e-15);
}

TEST_CASE("sigma scale invariance is exact") {
  CounterRng rng(17, 0);
  for (int d : {1, 2, 3}) {
    const RadialSet A = random_set(rng, d, 3);
    const RadialSet B = random_set(rng, d, 2);
    for (double r : {0.7, 1.0, 1.9, 3.1}) {
      const double direct = sigma_r(A, B, r);
      const double scaled = sigma_r(scale_set(A, 1.0 / r), scale_set(B, 1.0 / r), 1.0);
      CHECK(std::abs(direct - scaled) <= 1e-12);
    }
  }
}

TEST_CASE("sigma agrees with Monte Carlo sphere sampling") {
  const RadialSet A = ball(1, 1.0);
  const double exact = sigma_r(A, A, 1.2);
  const double mc = sigma_r_monte_carlo(A, A, 1.2, 200000, 99);
  CHECK(std::abs(mc - exact) < 4e-3);
  RadialSet C;
  C.d = 2;
  C.annuli = {{0.2, 0.7}, {1.1, 1.5}};
  const RadialSet D = ball(2, 1.0);
  const double e2 = sigma_r(C, D, 1.3);
  CHECK(std::abs(sigma_r_monte_carlo(C, D, 1.3, 200000, 7) - e2) < 4e-3);
}

TEST_CASE("mu_measure matches the 2d ball") {
  // A_E for E = [0, 1] is the unit ball of R^{2d}.
  CHECK(mu_measure(1, {{0.0, 1.0}}) == doctest::Approx(kPi).epsilon(1e-14));
  CHECK(mu_measure(2, {{0.0, 1.0}}) ==
        doctest::Approx(0.5 * kPi * kPi).epsilon(1e-13));
  CHECK_THROWS_AS(mu_measure(1, {{0.5, 0.2}}), DomainError);
}

TEST_CASE("first-moment identity holds to 1e-8 over random pairs") {
  CounterRng rng(23, 1);
  for (int d : {1, 2, 3}) {
    for (int rep = 0; rep < 6; ++rep) {
      const RadialSet A = random_set(rng, d, 3);
      const RadialSet B = random_set(rng, d, 3);
      CHECK(first_moment_residual(A, B) <= 1e-8);
    }
  }
}

TEST_CASE("indicator projection norm: golden value and contraction") {
  const RadialSet A = ball(1, 1.0);
  const double got = indicator_projection_norm(A, A);
  // 40-digit reference: sqrt(2 pi int_0^{sqrt 2} sigma_r^2 r dr).
  CHECK(got == doctest::Approx(1.878874557399302667545).epsilon(1e-9));
  CHECK(got <= std::sqrt(measure(A) * measure(A)) * (1.0 + 1e-12));
  CounterRng rng(29, 2);
  for (int d : {1, 2}) {
    const RadialSet C = random_set(rng, d, 2);
    const RadialSet D = random_set(rng, d, 2);
    CHECK(indicator_projection_norm(C, D) <=
          std::sqrt(measure(C) * measure(D)) * (1.0 + 1e-9));
  }
}

TEST_CASE("pairing with a radius window: identities and Cauchy-Schwarz") {
  const RadialSet A = ball(2, 1.0);
  const RadialSet B = annulus(2, 0.5, 1.4);
  const double top = 3.0;
  // Full window recovers |A| |B|.
  CHECK(pairing_with_window(A, B, {{0.0, top}}) ==
        doctest::Approx(measure(A) * measure(B)).epsilon(1e-8));
  // Partial window obeys <P, 1> <= ||P|| mu^{1/2}.
  const std::vector<std::pair<double, double>> E{{0.6, 1.1}};
  const double lhs = pairing_with_window(A, B, E);
  const double rhs = indicator_projection_norm(A, B) *
                     std::sqrt(mu_measure(2, E));
  CHECK(lhs <= rhs * (1.0 + 1e-9));
  CHECK(lhs > 0.0);
}

TEST_CASE("bound checks produce finite, positive ratios") {
  const RadialSet A = ball(1, 1.0);
  const RadialSet thin = annulus(1, 1.0, 1.05);
  for (const auto& rep :
       {check_sigma_pointwise(A, thin), check_l2_bound(A, thin),
        check_pairing_bound(A, thin, {{0.5, 1.2}}),
        check_combined_bound(A, thin, {{0.5, 1.2}}, 1.0 / 30.0)}) {
    CHECK(rep.finite);
    CHECK(rep.ratio >= 0.0);
    CHECK(std::isfinite(rep.ratio));
    CHECK(!rep.lemma.empty());
  }
  // Scale invariance residual is recorded and tiny.
  const BoundReport pw = check_sigma_pointwise(A, thin);
  REQUIRE(!pw.params.empty());
  CHECK(pw.params[0].first == "scale_invariance_abs_err");
  CHECK(pw.params[0].second <= 1e-12);
}

TEST_CASE("bound sweep emits four reports per config and stays finite") {
  const auto reports = bound_sweep(1, 6, 2026, 1.0 / 30.0);
  CHECK(reports.size() == 24);
  for (const auto& rep : reports) {
    CHECK(rep.finite);
    CHECK(std::isfinite(rep.ratio));
  }
  // Determinism under the same seed.
  const auto again = bound_sweep(1, 6, 2026, 1.0 / 30.0);
  for (size_t i = 0; i < reports.size(); ++i)
    CHECK(reports[i].ratio == again[i].ratio);
}
