#include <cmath>
#include <numbers>

#include "doctest.h"
#include "dunkl/quad.hpp"

using namespace dunkl;

namespace {

double beta_fn(double a, double b) {
  return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

}  // namespace

TEST_CASE("adaptive integration basics") {
  auto one = integrate([](double) { return 1.0; }, 0.0, 1.0);
  CHECK(one.converged);
  CHECK(one.value == doctest::Approx(1.0).epsilon(1e-15));

  auto g = integrate([](double z) { return std::exp(-z * z); }, -8.0, 8.0);
  CHECK(std::abs(g.value - std::sqrt(std::numbers::pi)) < 1e-12);

  QuadSpec s;
  s.endpoint_exponent = -0.5;
  auto sing = integrate([](double) { return 1.0; }, 0.0, 1.0, s);
  CHECK(std::abs(sing.value - 2.0) < 1e-12);

  auto rev = integrate([](double z) { return z; }, 1.0, 0.0);
  CHECK(rev.value == doctest::Approx(-0.5));
}

TEST_CASE("adaptive integration handles kinks and reports non-convergence") {
  auto kink = integrate([](double z) { return std::abs(z - 0.3); }, 0.0, 1.0);
  CHECK(kink.converged);
  CHECK(std::abs(kink.value - (0.045 + 0.245)) < 1e-10);

  const double bp[] = {0.3};
  auto with_bp = integrate([](double z) { return std::abs(z - 0.3); }, 0.0, 1.0, {}, bp);
  CHECK(with_bp.evals < kink.evals);

  QuadSpec tight;
  tight.max_subdivisions = 3;
  auto bad = integrate([](double z) { return std::sin(1.0 / (z + 1e-3)); }, 0.0, 1.0, tight);
  CHECK_FALSE(bad.converged);
  CHECK(std::isfinite(bad.value));
}

TEST_CASE("quad spec validation") {
  QuadSpec s;
  s.abs_tol = 0.0;
  CHECK_THROWS_AS(s.validate(), DomainError);
  QuadSpec e;
  e.endpoint_exponent = -1.0;
  CHECK_THROWS_AS(e.validate(), DomainError);
  QuadSpec n = QuadSpec{}.nested();
  CHECK(n.abs_tol == doctest::Approx(1e-12));
  CHECK(n.rel_tol == doctest::Approx(1e-10));
}

TEST_CASE("gauss jacobi beta function values") {
  auto one = [](double) { return 1.0; };
  CHECK(integrate_jacobi(one, 0.0, 1.0, -0.5, -0.5, 8) ==
        doctest::Approx(std::numbers::pi).epsilon(1e-14));
  CHECK(integrate_jacobi(one, 2.0, 5.0, 0.0, 0.0, 4) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(integrate_jacobi([](double z) { return z; }, 0.0, 1.0, 0.5, -0.5, 8) ==
        doctest::Approx(3.0 * std::numbers::pi / 8.0).epsilon(1e-14));
  CHECK_THROWS_AS(integrate_jacobi(one, 0.0, 1.0, -1.0, 0.0, 4), DomainError);
}

TEST_CASE("gauss jacobi reproduces monomial moments") {
  for (auto [ea, eb] : {std::pair{-0.5, 0.5}, {0.3, -0.75}, {2.0, 0.0}, {-0.9, -0.9}}) {
    const int n = 8;
    for (int m = 0; m < 2 * n; ++m) {
      // int_0^1 z^m z^ea (1-z)^eb dz = B(m+ea+1, eb+1)
      const double got =
          integrate_jacobi([m](double z) { return std::pow(z, m); }, 0.0, 1.0, ea, eb, n);
      const double oracle = beta_fn(m + ea + 1.0, eb + 1.0);
      CHECK(std::abs(got - oracle) <= 1e-12 * std::max(1.0, oracle));
    }
  }
}

TEST_CASE("adaptive and fixed jacobi agree on singular integrands") {
  auto f = [](double z) { return std::cos(3.0 * z) + z * z; };
  const double fixed = integrate_jacobi(f, 0.0, 2.0, -0.3, -0.6, 40);
  auto adaptive = integrate_weighted(f, 0.0, 2.0, -0.3, -0.6);
  CHECK(std::abs(fixed - adaptive.value) < 1e-8);
  // breakpoints inside a doubly singular interval
  const double bp[] = {0.5, 1.5};
  auto split = integrate_weighted(f, 0.0, 2.0, -0.3, -0.6, {}, bp);
  CHECK(std::abs(fixed - split.value) < 1e-8);
}

TEST_CASE("legendre rules are exact for polynomials") {
  const auto& rule = legendre_rule(24);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    s += rule.weights[i] * std::pow(rule.nodes[i], 46);
  }
  CHECK(s == doctest::Approx(2.0 / 47.0).epsilon(1e-13));
}

TEST_CASE("gaussian mass under mu_alpha") {
  for (double alpha : {-0.25, 0.0, 0.5, 1.5}) {
    AlphaParam a(alpha);
    LpContext ctx{a, 1.0, 0.0, {}};
    auto n = lp_norm(ctx, GaussPolyFunction::gaussian());
    CHECK(std::abs(n.value - std::pow(2.0, -(alpha + 1.0))) < 1e-10);
    CHECK(n.tail_ratio < 1e-8);
    CHECK(n.converged);
  }
}

TEST_CASE("lp norms against closed forms") {
  AlphaParam a(0.5);
  // ||e^{-x^2}||_2^2 = mass of e^{-2x^2} = 4^{-(alpha+1)}
  LpContext two{a, 2.0, 0.0, {}};
  auto n2 = lp_norm(two, GaussPolyFunction::gaussian());
  CHECK(n2.value == doctest::Approx(std::sqrt(std::pow(4.0, -1.5))).epsilon(1e-10));
  CHECK(lp_norm(two, catalog_function("zero")).value == 0.0);
  CHECK_THROWS_AS(lp_norm(two, GaussPolyFunction::polynomial({1.0})), DomainError);
  LpContext bad{a, 0.5, 0.0, {}};
  CHECK_THROWS_AS(lp_norm(bad, GaussPolyFunction::gaussian()), DomainError);
}

TEST_CASE("integral against mu_alpha") {
  AlphaParam a(1.5);
  auto f = catalog_function("cubic_gaussian");
  auto r = integrate_mu(a, f.evaluable());
  // only the even part survives: 2 * moment of the constant term
  const double oracle = 2.0 * half_line_moment(a, GaussPolyFunction({1.0}, 0.5), 0);
  CHECK(r.value == doctest::Approx(oracle).epsilon(1e-10));
}
