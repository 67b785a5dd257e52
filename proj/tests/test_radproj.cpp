#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "radlab/radproj.hpp"
#include "radlab/rng.hpp"
#include "radlab/scalars.hpp"

using namespace radlab;

namespace {

GaussPolyFun random_gp(CounterRng& rng, int d, int deg, cplx width) {
  GaussPolyFun f;
  f.d = d;
  f.width = width;
  f.coeffs.resize(deg + 1);
  for (cplx& c : f.coeffs) c = rng.normal_c();
  return f;
}

// Hand-solved second eigenfunction in d = 1:
//   psi_2 = sqrt(2/3) pi^2 (s^2 - (3/pi) s + 3/(4 pi^2)) F,  s = |x|^2,
// orthonormal to F and |x|^2 F by the gaussian moment identities.
GaussPolyFun psi2_d1() {
  GaussPolyFun f;
  f.d = 1;
  f.width = cplx(0.5 * kPi, 0.0);
  const double a = std::sqrt(2.0 / 3.0) * kPi * kPi;
  f.coeffs = {cplx(a * 3.0 / (4.0 * kPi * kPi)), cplx(-a * 3.0 / kPi), cplx(a)};
  return f;
}

}  // namespace

TEST_CASE("projection of the gaussian pair is the 2d gaussian") {
  for (int d : {1, 2, 3}) {
    const AnyFun F = standard_gaussian(d);
    const RadialFun2d h = project_tensor(F, F);
    REQUIRE(std::holds_alternative<GaussPolyFun>(h.fn));
    const auto& g = std::get<GaussPolyFun>(h.fn);
    CHECK(g.d == 2 * d);
    REQUIRE(g.coeffs.size() == 1);
    CHECK(std::abs(g.coeffs[0] - cplx(1.0)) < 1e-14);
    CHECK(std::abs(g.width - cplx(0.5 * kPi, 0.0)) < 1e-14);
    // ||P(F (x) F)|| = ||G|| = 1 and <P(F (x) F), G> = 1.
    CHECK(projection_norm(F, F) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(pair_with_radial(F, F, g).real() == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("projection of |x|^2 F against F picks up one eigenvalue factor") {
  for (int d : {1, 2, 3}) {
    const GaussPolyFun F = standard_gaussian(d);
    const AnyFun f = gp_mul_radius2(F);
    const RadialFun2d h = project_tensor(f, AnyFun(F));
    const auto& g = std::get<GaussPolyFun>(h.fn);
    REQUIRE(g.coeffs.size() == 2);
    CHECK(std::abs(g.coeffs[0]) < 1e-15);
    // Coefficient of |z|^2 is E[1 - t] = lambda(d, 1) = 1/2 for every d.
    CHECK(std::abs(g.coeffs[1] - cplx(0.5)) < 1e-14);
  }
}

TEST_CASE("odd monomials project to zero") {
  MonomialGaussFun m;
  m.d = 2;
  m.alpha = {1, 0};
  m.coeff = cplx(0.7, 0.4);
  m.width = cplx(0.5 * kPi, 0.0);
  const AnyFun F = standard_gaussian(2);
  CHECK(projection_norm(AnyFun(m), F) == 0.0);
  const GaussPolyFun G2d = pure_gaussian(4, cplx(0.5 * kPi, 0.0));
  CHECK(std::abs(pair_with_radial(AnyFun(m), F, G2d)) == 0.0);
}

TEST_CASE("even monomial projection agrees with the two-route moment formula") {
  // P(x^{2 beta} E (x) y^{2 beta'} E): radial route via sphere_moment and
  // direction moments against the flat 2d-sphere moment
  // Gamma(d)/Gamma(d + |B|) prod Gamma(B_i + 1/2)/Gamma(1/2).
  const int d = 2;
  MonomialGaussFun a, b;
  a.d = b.d = d;
  a.alpha = {2, 0};
  b.alpha = {0, 4};
  a.coeff = b.coeff = 1.0;
  a.width = b.width = cplx(1.0, 0.0);
  const RadialFun2d h = project_tensor(AnyFun(a), AnyFun(b));
  const auto& g = std::get<GaussPolyFun>(h.fn);
  const int n = 3;  // |beta| + |beta'| = 1 + 2
  REQUIRE(int(g.coeffs.size()) == n + 1);
  const double want =
      std::exp(log_gamma(2.0) - log_gamma(2.0 + 3.0) +
               (log_gamma(1.0 + 0.5) - log_gamma(0.5)) +
               (log_gamma(0.0 + 0.5) - log_gamma(0.5)) +
               (log_gamma(0.0 + 0.5) - log_gamma(0.5)) +
               (log_gamma(2.0 + 0.5) - log_gamma(0.5)));
  CHECK(g.coeffs[n].real() == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("theta_reduction: split-moment spot value") {
  auto sq = [](double s) { return cplx(s * s); };
  auto one = [](double) { return cplx(1.0); };
  for (int d : {1, 2, 3}) {
    const cplx v = theta_reduction(sq, one, d, 1.3);
    CHECK(v.real() == doctest::Approx(1.3 * 1.3 * 0.5).epsilon(1e-12));
    const cplx w = theta_reduction(one, sq, d, 0.9);
    CHECK(w.real() == doctest::Approx(0.9 * 0.9 * 0.5).epsilon(1e-12));
  }
}

TEST_CASE("second eigenfunction: projection norm hits sqrt(3/8) in d = 1") {
  const GaussPolyFun p2 = psi2_d1();
  const GaussPolyFun F = standard_gaussian(1);
  CHECK(norm(p2) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(inner(p2, F)) < 1e-13);
  const double pn = projection_norm(AnyFun(p2), AnyFun(F));
  CHECK(pn * pn == doctest::Approx(0.375).epsilon(1e-12));
}

TEST_CASE("closed form and sampled quadrature agree") {
  CounterRng rng(31, 0);
  for (int d : {1, 2, 3}) {
    for (int rep = 0; rep < 4; ++rep) {
      const cplx w(rng.uniform(0.8, 2.2), rng.uniform(-0.4, 0.4));
      const AnyFun f = random_gp(rng, d, 3, w);
      const AnyFun g = random_gp(rng, d, 2, w);
      const RadialFun2d closed = project_tensor(f, g);
      const RadialFun2d sampled = project_tensor_sampled(f, g);
      const double nc = norm(std::get<GaussPolyFun>(closed.fn));
      const double ns = norm(std::get<ProfileFun>(sampled.fn));
      CHECK(ns == doctest::Approx(nc).epsilon(1e-8));
    }
  }
}

TEST_CASE("projection contracts: 500 random analytic pairs") {
  CounterRng rng(77, 1);
  for (int rep = 0; rep < 500; ++rep) {
    const int d = 1 + int(rng.uniform01() * 3);
    const cplx w(rng.uniform(0.3, 3.0), rng.uniform(-1.0, 1.0));
    const AnyFun f = random_gp(rng, d, 1 + int(rng.uniform01() * 4), w);
    const AnyFun g = random_gp(rng, d, 1 + int(rng.uniform01() * 4), w);
    const double lhs = projection_norm(f, g);
    const double rhs = norm(f) * norm(g);
    CHECK(lhs <= rhs * (1.0 + 1e-12));
  }
}

TEST_CASE("projection is equivariant under the symmetry group") {
  CounterRng rng(19, 2);
  for (int d : {1, 2}) {
    const cplx w(1.1, -0.3);
    const GaussPolyFun f = random_gp(rng, d, 2, w);
    const GaussPolyFun g = random_gp(rng, d, 3, w);
    const double rho = 1.6, t = 0.8;
    const RadialFun2d base = project_tensor(AnyFun(f), AnyFun(g));
    const RadialFun2d moved = project_tensor(AnyFun(dilate(f, rho, true)),
                                             AnyFun(dilate(g, rho, true)));
    const GaussPolyFun want =
        dilate(std::get<GaussPolyFun>(base.fn), rho, true);
    const auto& got = std::get<GaussPolyFun>(moved.fn);
    REQUIRE(got.coeffs.size() == want.coeffs.size());
    for (size_t j = 0; j < got.coeffs.size(); ++j)
      CHECK(std::abs(got.coeffs[j] - want.coeffs[j]) <
            1e-10 * (1.0 + std::abs(want.coeffs[j])));
    CHECK(std::abs(got.width - want.width) < 1e-12 * std::abs(want.width));

    const RadialFun2d modded = project_tensor(AnyFun(modulate(f, t)),
                                              AnyFun(modulate(g, t)));
    const GaussPolyFun wantm = modulate(std::get<GaussPolyFun>(base.fn), t);
    const auto& gotm = std::get<GaussPolyFun>(modded.fn);
    CHECK(std::abs(gotm.width - wantm.width) < 1e-12 * std::abs(wantm.width));
    for (size_t j = 0; j < gotm.coeffs.size(); ++j)
      CHECK(std::abs(gotm.coeffs[j] - wantm.coeffs[j]) <
            1e-12 * (1.0 + std::abs(wantm.coeffs[j])));
  }
}

TEST_CASE("pairing consistency: <P, P> equals the squared norm") {
  CounterRng rng(23, 3);
  const int d = 2;
  const cplx w(0.9, 0.2);
  const AnyFun f = random_gp(rng, d, 2, w);
  const AnyFun g = random_gp(rng, d, 2, w);
  const RadialFun2d p = project_tensor(f, g);
  const double pn = projection_norm(f, g);
  CHECK(pair_with_radial(f, g, p).real() == doctest::Approx(pn * pn).epsilon(1e-12));
}

TEST_CASE("mixed-width pairs fall back to quadrature and still contract") {
  CounterRng rng(41, 4);
  for (int d : {1, 2}) {
    const AnyFun f = random_gp(rng, d, 2, cplx(0.7, 0.0));
    const AnyFun g = random_gp(rng, d, 1, cplx(1.9, 0.5));
    const RadialFun2d p = project_tensor(f, g);
    CHECK(std::holds_alternative<ProfileFun>(p.fn));
    CHECK(projection_norm(f, g) <= norm(f) * norm(g) * (1.0 + 1e-9));
  }
}

TEST_CASE("radproj argument validation") {
  const AnyFun f1 = standard_gaussian(1);
  const AnyFun f2 = standard_gaussian(2);
  CHECK_THROWS_AS(project_tensor(f1, f2), UsageError);
  CHECK_THROWS_AS(pair_with_radial(f1, f1, standard_gaussian(3)), UsageError);
  auto one = [](double) { return cplx(1.0); };
  CHECK_THROWS_AS(theta_reduction(one, one, 0, 1.0), DomainError);
  CHECK_THROWS_AS(theta_reduction(one, one, 1, -1.0), DomainError);
}
