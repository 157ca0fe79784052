#include <cmath>
#include <random>

#include "doctest.h"
#include "dunkl/funcalg.hpp"
#include "dunkl/quad.hpp"

using namespace dunkl;

namespace {

// b_p as a pure polynomial, from the closed form.
GaussPolyFunction appell_poly(const AlphaParam& a, int p) {
  std::vector<double> c(p + 1, 0.0);
  const int m = p / 2;
  double fact = 1.0;
  for (int i = 2; i <= m; ++i) fact *= i;
  const double pw = std::pow(0.5, p);
  c[p] = (p % 2 == 0) ? pw / (pochhammer(a.alpha() + 1.0, m) * fact)
                      : pw / (pochhammer(a.alpha() + 1.0, m + 1) * fact);
  return GaussPolyFunction::polynomial(c);
}

// Dunkl operator by central differences plus the reflection term.
double dunkl_fd(const AlphaParam& a, const GaussPolyFunction& f, double x) {
  const double h = 1e-4 * std::max(1.0, std::abs(x));
  const double d =
      (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
  return d + a.weight_exp() * (f(x) - f(-x)) / (2.0 * x);
}

}  // namespace

TEST_CASE("evaluation and construction") {
  GaussPolyFunction f({1.0, 2.0, 0.0, 0.0}, 0.5);
  CHECK(f.degree() == 1);
  CHECK(f(1.0) == doctest::Approx(3.0 * std::exp(-0.5)));
  CHECK(f.support_hint() == doctest::Approx(10.0 / std::sqrt(0.5)));
  CHECK(GaussPolyFunction::gaussian(4.0).support_hint() == doctest::Approx(8.0));
  CHECK_FALSE(GaussPolyFunction::polynomial({1.0}).normable());
  CHECK_THROWS_AS(GaussPolyFunction({1.0}, -1.0), DomainError);
}

TEST_CASE("dunkl operator on monomials and simple functions") {
  AlphaParam a(0.5);
  CHECK(dunkl_apply(a, GaussPolyFunction::polynomial({1.0})).is_zero());
  auto lx = dunkl_apply(a, GaussPolyFunction::polynomial({0.0, 1.0}));
  REQUIRE(lx.degree() == 0);
  CHECK(lx.coeffs()[0] == doctest::Approx(3.0));

  AlphaParam one(1.0);
  auto l2 = dunkl_power(one, GaussPolyFunction::polynomial({0.0, 0.0, 1.0}), 2);
  REQUIRE(l2.degree() == 0);
  CHECK(l2.coeffs()[0] == doctest::Approx(8.0));

  auto g = dunkl_power(a, GaussPolyFunction::gaussian(), 1);
  CHECK(g.gauss_scale() == 1.0);
  REQUIRE(g.degree() == 1);
  CHECK(g.coeffs()[0] == 0.0);
  CHECK(g.coeffs()[1] == doctest::Approx(-2.0));

  auto f = catalog_function("cubic_gaussian");
  auto f0 = dunkl_power(a, f, 0);
  CHECK(f0.coeffs() == f.coeffs());
}

TEST_CASE("appell property of the taylor coefficients") {
  for (double alpha : {-0.25, 0.5, 1.5}) {
    AlphaParam a(alpha);
    for (int p = 0; p <= 6; ++p) {
      auto lhs = dunkl_apply(a, appell_poly(a, p + 1));
      auto rhs = appell_poly(a, p);
      REQUIRE(lhs.coeffs().size() == rhs.coeffs().size());
      for (std::size_t n = 0; n < lhs.coeffs().size(); ++n) {
        CHECK(lhs.coeffs()[n] == doctest::Approx(rhs.coeffs()[n]).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("dunkl operator agrees with finite differences on random elements") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::uniform_real_distribution<double> pt(0.1, 2.0);
  for (double alpha : {-0.25, 0.5, 1.5}) {
    AlphaParam a(alpha);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<double> c(5);
      for (double& v : c) v = coef(rng);
      GaussPolyFunction f(c, 0.7);
      auto lf = dunkl_apply(a, f);
      for (int i = 0; i < 20; ++i) {
        const double x = (i % 2 ? -1.0 : 1.0) * pt(rng);
        const double fd = dunkl_fd(a, f, x);
        CHECK(std::abs(lf(x) - fd) <= 1e-7 * (1.0 + std::abs(fd)));
      }
    }
  }
}

TEST_CASE("parity bookkeeping and closure") {
  AlphaParam a(0.5);
  auto even = GaussPolyFunction({1.0, 0.0, 3.0}, 1.0);
  auto odd = GaussPolyFunction({0.0, 2.0, 0.0, -1.0}, 1.0);
  CHECK(dunkl_apply(a, even).is_odd());
  CHECK(dunkl_apply(a, odd).is_even());
  auto f = catalog_function("cubic_gaussian");
  for (int k = 0; k <= 4; ++k) {
    CHECK(dunkl_power(a, f, k).degree() <= f.degree() + k);
  }
  auto poly = GaussPolyFunction::polynomial({1.0, 1.0, 1.0, 1.0});
  int last = poly.degree();
  for (int k = 1; k <= 4; ++k) {
    const int d = dunkl_power(a, poly, k).degree();
    CHECK(d < last);
    last = d;
  }
  auto sum = f.even_part() + f.odd_part();
  for (double x : {-1.3, 0.2, 2.2}) CHECK(sum(x) == doctest::Approx(f(x)));
  CHECK(f.reflected()(0.8) == doctest::Approx(f(-0.8)));
}

TEST_CASE("dilation") {
  AlphaParam a0(0.0);
  auto g = GaussPolyFunction::gaussian();
  auto d = dilate(a0, g, 2.0);
  CHECK(d.gauss_scale() == doctest::Approx(0.25));
  CHECK(d.coeffs()[0] == doctest::Approx(0.25));
  auto same = dilate(a0, g, 1.0);
  CHECK(same(0.7) == doctest::Approx(g(0.7)));
  CHECK_THROWS_AS(dilate(a0, g, 0.0), DomainError);
  CHECK_THROWS_AS(dilate(a0, g, -1.0), DomainError);
  CHECK(dilate(a0, g, 0.01).support_hint() == doctest::Approx(0.1));

  AlphaParam a(0.5);
  LpContext ctx{a, 1.0, 0.0, {}};
  const double base = lp_norm(ctx, g).value;
  for (double t : {0.05, 0.5, 3.0}) {
    CHECK(lp_norm(ctx, dilate(a, g, t)).value == doctest::Approx(base).epsilon(1e-9));
  }
}

TEST_CASE("hermite test function moments") {
  for (double alpha : {-0.25, 0.5, 1.5}) {
    AlphaParam a(alpha);
    for (int k = 1; k <= 3; ++k) {
      const int enforced = (k - 1) / 2;
      for (int n0 : {enforced + 1, enforced + 2}) {
        auto phi = hermite_phi(a, n0, k);
        for (double x : {0.3, 1.1}) {
          CHECK(phi(x) == doctest::Approx(hermite_generalized(2 * n0, a, x) *
                                          std::exp(-x * x))
                              .epsilon(1e-12));
        }
        for (int i = 0; i <= enforced; ++i) {
          CHECK(std::abs(half_line_moment(a, phi, 2 * i)) <= 1e-10);
        }
      }
    }
  }
  AlphaParam a(0.5);
  auto phi = hermite_phi(a, 1, 1);
  const RealFn integrand = [&](double x) { return phi(x) * a.density(x); };
  const double m0 = integrate(integrand, 0.0, 12.0).value;
  CHECK(std::abs(m0) <= 1e-10);
  const RealFn second = [&](double x) { return x * x * phi(x) * a.density(x); };
  const double m1 = integrate(second, 0.0, 12.0).value;
  CHECK(std::abs(m1) > 1e-3);
  CHECK(m1 == doctest::Approx(half_line_moment(a, phi, 2)).epsilon(1e-9));
  CHECK_THROWS_AS(hermite_phi(a, 1, 3), DomainError);
  CHECK_THROWS_AS(hermite_phi(a, 0, 1), DomainError);
}

TEST_CASE("catalog") {
  CHECK(catalog_function("gaussian")(1.0) == doctest::Approx(std::exp(-1.0)));
  CHECK(catalog_function("x_gaussian")(2.0) == doctest::Approx(2.0 * std::exp(-4.0)));
  CHECK(catalog_function("cubic_gaussian")(1.0) == doctest::Approx(3.0 * std::exp(-0.5)));
  CHECK(catalog_function("zero").is_zero());
  CHECK_THROWS_AS(catalog_function("nope"), DomainError);
}
