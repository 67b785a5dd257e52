#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "radlab/scalars.hpp"

using namespace radlab;

namespace {

// Composite Simpson on [a, b]; enough for oracle integrals of smooth
// integrands that the closed forms are checked against.
template <typename F>
auto simpson(F f, double a, double b, int n) {
  if (n % 2 == 1) ++n;
  const double h = (b - a) / n;
  auto acc = f(a) + f(b);
  for (int i = 1; i < n; ++i) acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return acc * (h / 3.0);
}

}  // namespace

TEST_CASE("log_gamma matches high-precision references") {
  // Reference values computed with 40-digit arithmetic.
  const struct {
    double x, ref;
  } table[] = {
      {0.5, 0.5723649429247000870717},
      {1.5, -0.1207822376352452223455},
      {5.0, 3.178053830347945619647},
      {10.3, 13.48203678613835697062},
      {42.25, 114.9663926542498943522},
      {100.7, 362.3567752034305489588},
      {200.0, 857.9336698258574368183},
  };
  for (const auto& row : table)
    CHECK(log_gamma(row.x) == doctest::Approx(row.ref).epsilon(1e-13));
  CHECK(std::abs(log_gamma(1.0)) < 1e-14);
  CHECK(std::abs(log_gamma(2.0)) < 1e-14);
  CHECK(std::exp(log_gamma(5.0)) == doctest::Approx(24.0).epsilon(1e-13));
  // Small-argument recurrence branch.
  CHECK(std::exp(log_gamma(0.25)) * 0.25 ==
        doctest::Approx(std::exp(log_gamma(1.25))).epsilon(1e-13));
}

TEST_CASE("log_gamma rejects the non-positive domain") {
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(log_gamma(-3.2), DomainError);
}

TEST_CASE("sphere_area known values") {
  CHECK(sphere_area(1) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(sphere_area(2) == doctest::Approx(kTwoPi).epsilon(1e-14));
  CHECK(sphere_area(3) == doctest::Approx(4.0 * kPi).epsilon(1e-14));
  CHECK(sphere_area(4) == doctest::Approx(19.73920880217871723767).epsilon(1e-14));
  CHECK(sphere_area(8) == doctest::Approx(32.46969701133414574548).epsilon(1e-14));
  CHECK_THROWS_AS(sphere_area(0), DomainError);
}

TEST_CASE("eigenvalue sequence: pinned values") {
  for (int d : {1, 2, 3, 7}) {
    CHECK(eigenvalue_lambda(d, 0) == 1.0);  // exact cancellation
    CHECK(eigenvalue_lambda(d, 1) == doctest::Approx(0.5).epsilon(1e-14));
    // m = 2 closed form (d + 2) / (4 (d + 1)).
    CHECK(eigenvalue_lambda(d, 2) ==
          doctest::Approx((d + 2.0) / (4.0 * (d + 1.0))).epsilon(1e-13));
  }
  CHECK(eigenvalue_lambda(1, 2) == doctest::Approx(0.375).epsilon(1e-14));
  CHECK(eigenvalue_lambda(1, 3) == doctest::Approx(0.3125).epsilon(1e-14));
  CHECK(eigenvalue_lambda(1, 4) == doctest::Approx(0.2734375).epsilon(1e-14));
  CHECK(eigenvalue_lambda(3, 2) == doctest::Approx(0.3125).epsilon(1e-14));
  CHECK(eigenvalue_lambda(3, 3) == doctest::Approx(0.21875).epsilon(1e-14));
  // d = 2 collapses to 1 / (m + 1).
  for (int m = 0; m <= 12; ++m)
    CHECK(eigenvalue_lambda(2, m) == doctest::Approx(1.0 / (m + 1)).epsilon(1e-13));
}

TEST_CASE("eigenvalue sequence: ratio recursion and monotonicity") {
  for (int d = 1; d <= 8; ++d) {
    for (int m = 0; m <= 20; ++m) {
      const double ratio = eigenvalue_lambda(d, m + 1) / eigenvalue_lambda(d, m);
      CHECK(ratio == doctest::Approx((m + 0.5 * d) / (m + d)).epsilon(1e-13));
      CHECK(eigenvalue_lambda(d, m + 1) < eigenvalue_lambda(d, m));
    }
  }
}

TEST_CASE("sphere_moment: symmetry, marginals, pinned value") {
  for (int d : {1, 2, 3, 5}) {
    CHECK(sphere_moment(d, 0, 0) == 1.0);
    for (int j = 0; j <= 6; ++j) {
      CHECK(sphere_moment(d, j, 0) ==
            doctest::Approx(eigenvalue_lambda(d, j)).epsilon(1e-13));
      for (int k = 0; k <= j; ++k)
        CHECK(sphere_moment(d, j, k) ==
              doctest::Approx(sphere_moment(d, k, j)).epsilon(1e-14));
    }
  }
  CHECK(sphere_moment(1, 1, 1) == doctest::Approx(0.125).epsilon(1e-14));
}

TEST_CASE("sphere_moment agrees with the theta-density integral") {
  // Independent oracle: E[(cos^2 t)^j (sin^2 t)^k] against the normalized
  // density cos^{d-1} sin^{d-1} on [0, pi/2].
  for (int d : {1, 2, 3}) {
    const double z = 0.5 * beta_fn(0.5 * d, 0.5 * d);
    for (int j : {0, 1, 3}) {
      for (int k : {0, 2}) {
        auto integrand = [&](double t) {
          const double c = std::cos(t), s = std::sin(t);
          return std::pow(c * c, j) * std::pow(s * s, k) *
                 std::pow(c, d - 1) * std::pow(s, d - 1);
        };
        // d = 1 has integrable endpoint behavior but the integrand is still
        // bounded; Simpson at this resolution reaches ~1e-12.
        const double oracle = simpson(integrand, 0.0, 0.5 * kPi, 20000) / z;
        CHECK(sphere_moment(d, j, k) == doctest::Approx(oracle).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("direction_even_moment: normalization and known values") {
  CHECK(direction_even_moment(1, {3}) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(direction_even_moment(2, {1, 0}) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(direction_even_moment(3, {1, 1, 0}) ==
        doctest::Approx(1.0 / 15.0).epsilon(1e-13));
  // sum_i E[xi_i^2] = 1 forces the single-coordinate moment to 1/d.
  for (int d = 1; d <= 6; ++d) {
    std::vector<int> e(d, 0);
    e[0] = 1;
    CHECK(direction_even_moment(d, e) == doctest::Approx(1.0 / d).epsilon(1e-13));
  }
  CHECK_THROWS_AS(direction_even_moment(2, {1}), UsageError);
}

TEST_CASE("gaussian_radial_moment: closed-form pins") {
  CHECK(gaussian_radial_moment(1, 0, cplx(kPi, 0)).real() ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gaussian_radial_moment(1, 1, cplx(kPi, 0)).real() ==
        doctest::Approx(1.0 / kTwoPi).epsilon(1e-14));
  // int_{R^2} |x|^2 e^{-|x|^2} dx = pi.
  CHECK(gaussian_radial_moment(2, 1, cplx(1, 0)).real() ==
        doctest::Approx(kPi).epsilon(1e-14));
  // Complex width, zeroth moment equals (pi/c)^{d/2} on the principal branch.
  const cplx c(1.0, 2.0);
  for (int d : {1, 2, 3}) {
    const cplx want = std::pow(cplx(kPi, 0) / c, 0.5 * d);
    const cplx got = gaussian_radial_moment(d, 0, c);
    CHECK(std::abs(got - want) < 1e-13 * std::abs(want));
  }
  CHECK_THROWS_AS(gaussian_radial_moment(1, 0, cplx(-1.0, 0.5)), DomainError);
}

TEST_CASE("gaussian_radial_moment: recursion pass equals closed form") {
  const cplx widths[] = {{kPi, 0.0}, {0.7, 0.0}, {1.3, -2.1}, {0.4, 3.0}};
  for (int d : {1, 2, 3}) {
    for (const cplx& c : widths) {
      const auto m = gaussian_radial_moments(d, 12, c);
      for (int s = 0; s <= 12; ++s) {
        const cplx want = gaussian_radial_moment(d, s, c);
        CHECK(std::abs(m[s] - want) <= 1e-12 * std::abs(want));
      }
    }
  }
}

TEST_CASE("gaussian_radial_moment agrees with direct quadrature") {
  const struct {
    int d, s;
    cplx c;
  } cases[] = {{1, 2, {1.5, 0.0}}, {2, 1, {0.8, 1.1}}, {3, 3, {2.0, -0.7}}};
  for (const auto& cs : cases) {
    const double rmax = std::sqrt(45.0 / cs.c.real());
    auto integrand = [&](double r) {
      return std::exp(-cs.c * (r * r)) *
             std::pow(r, 2 * cs.s + cs.d - 1);
    };
    const cplx oracle = simpson(integrand, 0.0, rmax, 40000) * sphere_area(cs.d);
    const cplx got = gaussian_radial_moment(cs.d, cs.s, cs.c);
    CHECK(std::abs(got - oracle) < 1e-9 * std::abs(got));
  }
}

TEST_CASE("incomplete beta: arcsine pin and axioms") {
  // int_0^{1/4} t^{-1/2}(1-t)^{-1/2} dt = 2 asin(1/2) = pi/3.
  CHECK(incomplete_beta(0.25, 0.5, 0.5) ==
        doctest::Approx(kPi / 3.0).epsilon(1e-13));
  CHECK(regularized_incomplete_beta(0.0, 2.0, 3.0) == 0.0);
  CHECK(regularized_incomplete_beta(1.0, 2.0, 3.0) == 1.0);
  for (double u : {0.1, 0.35, 0.5, 0.72, 0.99})
    CHECK(incomplete_beta(u, 1.0, 1.0) == doctest::Approx(u).epsilon(1e-13));
  // Complement identity across the continued-fraction switch.
  for (double a : {0.5, 1.7, 4.0}) {
    for (double b : {0.5, 2.3, 6.0}) {
      for (double x = 0.05; x < 1.0; x += 0.09) {
        const double s = regularized_incomplete_beta(x, a, b) +
                         regularized_incomplete_beta(1.0 - x, b, a);
        CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
      }
    }
  }
  CHECK_THROWS_AS(regularized_incomplete_beta(1.2, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(regularized_incomplete_beta(0.5, -1.0, 1.0), DomainError);
}

TEST_CASE("incomplete beta agrees with substitution quadrature") {
  // t = sin^2(theta) removes the endpoint singularities for a, b >= 1/2.
  for (double a : {0.5, 1.0, 2.7}) {
    for (double b : {0.5, 3.3}) {
      for (double x : {0.2, 0.5, 0.9}) {
        auto integrand = [&](double th) {
          return 2.0 * std::pow(std::sin(th), 2.0 * a - 1.0) *
                 std::pow(std::cos(th), 2.0 * b - 1.0);
        };
        const double oracle = simpson(integrand, 0.0, std::asin(std::sqrt(x)), 20000);
        CHECK(incomplete_beta(x, a, b) == doctest::Approx(oracle).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("binomial coefficients are exact in range") {
  CHECK(binomial(0, 0) == 1.0);
  CHECK(binomial(5, 2) == 10.0);
  CHECK(binomial(12, 7) == 792.0);
  CHECK(binomial(40, 20) == 137846528820.0);
  CHECK_THROWS_AS(binomial(3, 5), DomainError);
}
