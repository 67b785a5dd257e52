#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "radlab/radproj.hpp"
#include "radlab/rng.hpp"
#include "radlab/scalars.hpp"
#include "radlab/spectral.hpp"

using namespace radlab;

namespace {

GaussPolyFun random_unit_gauge(CounterRng& rng, int d, int deg) {
  GaussPolyFun f;
  f.d = d;
  f.width = cplx(kPi / 2, 0.0);
  for (int j = 0; j <= deg; ++j)
    f.coeffs.push_back(cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)));
  return f;
}

GaussPolyFun combo(const SpectralBasis& basis, const std::vector<cplx>& a) {
  GaussPolyFun acc = gp_scale(basis.psi[0], 0.0);
  for (size_t m = 0; m < a.size(); ++m)
    acc = gp_add(acc, gp_scale(basis.psi[m], a[m]));
  return acc;
}

}  // namespace

TEST_CASE("operator fixes the ground state and contracts the chain") {
  for (int d : {1, 2, 3}) {
    const GaussPolyFun tf = apply_t(standard_gaussian(d));
    REQUIRE(tf.coeffs.size() == 1);
    CHECK(tf.coeffs[0].real() == doctest::Approx(1.0).epsilon(1e-14));
    // T(|x|^2 F) = d/(4 pi) F + (1/2) |x|^2 F.
    GaussPolyFun u = standard_gaussian(d);
    u.coeffs = {cplx(0.0), cplx(1.0)};
    const GaussPolyFun tu = apply_t(u);
    CHECK(tu.coeffs[0].real() == doctest::Approx(d / (4.0 * kPi)).epsilon(1e-14));
    CHECK(tu.coeffs[1].real() == doctest::Approx(0.5).epsilon(1e-14));
  }
}

TEST_CASE("operator requires the unit gauge") {
  GaussPolyFun f = standard_gaussian(1);
  f.width = cplx(kPi / 2 + 1e-3, 0.0);
  CHECK_THROWS_AS(apply_t(f), UsageError);
  f.width = cplx(kPi / 2, 1e-3);
  CHECK_THROWS_AS(apply_t(f), UsageError);
}

TEST_CASE("pairing oracle: <P(f x F), P(g x F)> equals <Tf, g>") {
  CounterRng rng(41, 0);
  for (int d : {1, 2, 3}) {
    const AnyFun F = standard_gaussian(d);
    for (int rep = 0; rep < 5; ++rep) {
      const GaussPolyFun f = random_unit_gauge(rng, d, 5);
      const GaussPolyFun g = random_unit_gauge(rng, d, 4);
      const RadialFun2d pf = project_tensor(f, F);
      const RadialFun2d pg = project_tensor(g, F);
      const cplx lhs = inner(as_anyfun(pf), as_anyfun(pg));
      const cplx rhs = inner(apply_t(f), g);
      CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(rhs)));
    }
  }
}

TEST_CASE("operator is self-adjoint on the polynomial chain") {
  CounterRng rng(43, 0);
  for (int d : {1, 2}) {
    for (int rep = 0; rep < 8; ++rep) {
      const GaussPolyFun f = random_unit_gauge(rng, d, 6);
      const GaussPolyFun g = random_unit_gauge(rng, d, 6);
      const cplx a = inner(apply_t(f), g);
      const cplx b = inner(f, apply_t(g));
      CHECK(std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a)));
    }
  }
}

TEST_CASE("odd monomials are annihilated, even ones reduce to the chain") {
  MonomialGaussFun odd;
  odd.d = 2;
  odd.alpha = {1, 1};
  odd.coeff = 1.0;
  odd.width = cplx(kPi / 2, 0.0);
  const GaussPolyFun z = apply_t(odd);
  for (const cplx& c : z.coeffs) CHECK(std::abs(c) == 0.0);

  // x_1^2 averages to |x|^2 / d on spheres: T(x_1^2 F) = (1/d) T(|x|^2 F).
  MonomialGaussFun even;
  even.d = 2;
  even.alpha = {2, 0};
  even.coeff = 1.0;
  even.width = cplx(kPi / 2, 0.0);
  const GaussPolyFun te = apply_t(even);
  CHECK(te.coeffs[0].real() == doctest::Approx(1.0 / (4.0 * kPi)).epsilon(1e-13));
  CHECK(te.coeffs[1].real() == doctest::Approx(0.25).epsilon(1e-13));

  // Cross-check through the projection pairing.
  const AnyFun F = standard_gaussian(2);
  CounterRng rng(47, 0);
  const GaussPolyFun g = random_unit_gauge(rng, 2, 3);
  const cplx lhs = inner(as_anyfun(project_tensor(even, F)),
                         as_anyfun(project_tensor(g, F)));
  const cplx rhs = inner(te, g);
  CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(rhs)));
}

TEST_CASE("eigenbasis diagnostics at degree 12") {
  // The diagnostics certify the double-rounded coefficients; rounding the
  // quad-precision chain to double costs a few units at the 1e-12 scale.
  for (int d : {1, 2, 3}) {
    const SpectralBasis basis = build_spectral_basis(d, 12);
    CHECK(basis.gram_deviation <= 1e-11);
    for (int m = 0; m <= 12; ++m) {
      CHECK(basis.eigen_residual[m] <= 1e-11);
      CHECK(std::abs(basis.lambda_rayleigh[m] - eigenvalue_lambda(d, m)) <=
            1e-13);
    }
  }
}

TEST_CASE("low eigenfunctions match closed forms") {
  for (int d : {1, 2, 3}) {
    const SpectralBasis basis = build_spectral_basis(d, 2);
    const double m1 = d / (2.0 * kPi);
    const double m2 = m1 * (1.0 + 0.5 * d) / kPi;
    const double nu = 1.0 / std::sqrt(m2 - m1 * m1);
    CHECK(basis.psi[1].coeffs[1].real() == doctest::Approx(nu).epsilon(1e-13));
    CHECK(basis.psi[1].coeffs[0].real() ==
          doctest::Approx(-nu * m1).epsilon(1e-13));
  }
  // Hand-solved psi_2 in one dimension.
  const SpectralBasis b1 = build_spectral_basis(1, 2);
  const double lead = kPi * kPi * std::sqrt(2.0 / 3.0);
  CHECK(b1.psi[2].coeffs[2].real() == doctest::Approx(lead).epsilon(1e-12));
  CHECK(b1.psi[2].coeffs[1].real() ==
        doctest::Approx(-lead * 3.0 / kPi).epsilon(1e-12));
  CHECK(b1.psi[2].coeffs[0].real() ==
        doctest::Approx(lead * 3.0 / (4.0 * kPi * kPi)).epsilon(1e-12));
  CHECK(eigenfunction(1, 2).coeffs[2].real() ==
        doctest::Approx(lead).epsilon(1e-12));
}

TEST_CASE("double-precision inner products confirm orthonormality up to m = 8") {
  const SpectralBasis basis = build_spectral_basis(2, 8);
  for (int i = 0; i <= 8; ++i)
    for (int j = i; j <= 8; ++j) {
      const double want = i == j ? 1.0 : 0.0;
      CHECK(std::abs(inner(basis.psi[i], basis.psi[j]).real() - want) <= 1e-8);
    }
}

TEST_CASE("projection norm of psi_m x F recovers the eigenvalue") {
  for (int d : {1, 2}) {
    const SpectralBasis basis = build_spectral_basis(d, 4);
    const AnyFun F = standard_gaussian(d);
    for (int m = 0; m <= 4; ++m) {
      const double pn = projection_norm(basis.psi[m], F);
      CHECK(pn * pn ==
            doctest::Approx(eigenvalue_lambda(d, m)).epsilon(1e-8));
    }
  }
}

TEST_CASE("quadratic form attains the bound at the second eigenfunction") {
  for (int d : {1, 2}) {
    const GaussPolyFun psi2 = eigenfunction(d, 2);
    const QuadFormResult r = t_quadratic_form(psi2, psi2);
    CHECK(r.proof_form ==
          doctest::Approx(4.0 * eigenvalue_lambda(d, 2)).epsilon(1e-12));
    CHECK(r.bound == doctest::Approx((d + 2.0) / (d + 1.0)).epsilon(1e-12));
    CHECK(std::abs(r.slack) <= 1e-10);
  }
}

TEST_CASE("quadratic form matches the spectral closed form on random pairs") {
  CounterRng rng(53, 0);
  const int d = 1;
  const SpectralBasis basis = build_spectral_basis(d, 8);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<cplx> a(9, cplx(0.0)), b(9, cplx(0.0));
    a[1] = rng.normal_c();
    b[1] = -a[1];
    for (int m = 2; m <= 8; ++m) {
      a[m] = rng.normal_c();
      b[m] = rng.normal_c();
    }
    const GaussPolyFun f = combo(basis, a);
    const GaussPolyFun g = combo(basis, b);
    const QuadFormResult r = t_quadratic_form(f, g);
    double want = 0.0, n2 = 0.0;
    for (int m = 1; m <= 8; ++m) {
      want += eigenvalue_lambda(d, m) * std::norm(a[m] + b[m]);
      n2 += std::norm(a[m]) + std::norm(b[m]);
    }
    CHECK(r.proof_form == doctest::Approx(want).epsilon(1e-9));
    CHECK(r.bound == doctest::Approx(0.75 * n2).epsilon(1e-9));
    CHECK(r.slack >= -1e-10);
    // T is a contraction, so the statement form never exceeds the proof form.
    CHECK(r.statement_form <= r.proof_form + 1e-10);
  }
}

TEST_CASE("quadratic form rejects inadmissible inputs") {
  const GaussPolyFun F = standard_gaussian(1);
  const GaussPolyFun psi2 = eigenfunction(1, 2);
  CHECK_THROWS_AS(t_quadratic_form(F, psi2), DomainError);
  const GaussPolyFun psi1 = eigenfunction(1, 1);
  CHECK_THROWS_AS(t_quadratic_form(psi1, psi2), DomainError);
  CHECK_THROWS_AS(build_spectral_basis(1, 41), UsageError);
}
