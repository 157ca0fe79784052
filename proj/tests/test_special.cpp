#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "dunkl/special.hpp"

using namespace dunkl;

TEST_CASE("alpha parameter constants") {
  AlphaParam a(0.5);
  CHECK(a.weight_exp() == doctest::Approx(2.0));
  CHECK(a.norm_const() == doctest::Approx(std::exp2(1.5) * std::tgamma(1.5)));
  CHECK(a.weight(-2.0) == doctest::Approx(4.0));
  CHECK_THROWS_AS(AlphaParam(-0.5), DomainError);
  CHECK_THROWS_AS(AlphaParam(-0.6), DomainError);
  CHECK_NOTHROW(AlphaParam(-0.49));
}

TEST_CASE("gamma function values") {
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
  CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
  // duplication formula as an oracle
  for (double z : {0.3, 1.7, 4.2}) {
    const double lhs = gamma_fn(z) * gamma_fn(z + 0.5);
    const double rhs = std::pow(2.0, 1.0 - 2.0 * z) * std::sqrt(std::numbers::pi) *
                       gamma_fn(2.0 * z);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
  CHECK_THROWS_AS(gamma_fn(0.0), DomainError);
  CHECK_THROWS_AS(gamma_fn(-1.5), DomainError);
}

TEST_CASE("pochhammer is multiplicative") {
  CHECK(pochhammer(1.5, 0) == 1.0);
  CHECK(pochhammer(1.5, 3) == doctest::Approx(1.5 * 2.5 * 3.5));
  CHECK(pochhammer(1.0, 5) == doctest::Approx(120.0));
}

TEST_CASE("normalized bessel matches the standard library") {
  for (double nu : {0.0, 0.5, 1.3, 2.5}) {
    for (double z : {0.05, 0.7, 3.0, 8.5, 11.9, 12.1, 15.0, 30.0, 77.0}) {
      const double oracle = std::exp2(nu) * std::tgamma(nu + 1.0) *
                            std::cyl_bessel_j(nu, z) / std::pow(z, nu);
      const double got = bessel_j_normalized(nu, z);
      CHECK(std::abs(got - oracle) <= 1e-11 * (1.0 + std::abs(oracle)));
    }
  }
}

TEST_CASE("normalized bessel special values and parity") {
  CHECK(bessel_j_normalized(0.7, 0.0) == 1.0);
  CHECK(std::abs(bessel_j_normalized(0.5, std::numbers::pi)) < 1e-14);
  const double z = 0.01;
  CHECK(bessel_j_normalized(0.3, z) ==
        doctest::Approx(1.0 - z * z / (4.0 * 1.3)).epsilon(1e-9));
  CHECK(bessel_j_normalized(0.3, z) == doctest::Approx(0.99998077).epsilon(1e-8));
  for (double x : {0.4, 5.0, 13.0, 40.0}) {
    CHECK(bessel_j_normalized(1.2, x) == bessel_j_normalized(1.2, -x));
  }
  // sin z / z closed form
  for (double x : {0.3, 2.0, 9.0, 20.0}) {
    CHECK(bessel_j_normalized(0.5, x) == doctest::Approx(std::sin(x) / x).epsilon(1e-11));
  }
}

TEST_CASE("series and asymptotic branches agree at the switchover") {
  for (double nu : {-0.25, 0.5, 1.5, 2.5}) {
    const double s = bessel_j_normalized_series(nu, 12.0);
    const double a = bessel_j_normalized_asymptotic(nu, 12.0);
    CHECK(std::abs(s - a) < 1e-10);
  }
  CHECK_THROWS_AS(bessel_j_normalized_asymptotic(0.5, 3.0), DomainError);
}

TEST_CASE("bessel on the imaginary axis equals the modified bessel form") {
  for (double nu : {0.0, 0.5, 1.5}) {
    for (double t : {0.5, 4.0, 20.0}) {
      const double oracle =
          std::exp2(nu) * std::tgamma(nu + 1.0) * std::cyl_bessel_i(nu, t) / std::pow(t, nu);
      const auto got = bessel_j_normalized(nu, std::complex<double>(0.0, t));
      CHECK(got.real() == doctest::Approx(oracle).epsilon(1e-12));
      CHECK(got.imag() == 0.0);
    }
  }
}

TEST_CASE("dunkl kernel basic values and bound") {
  AlphaParam a(0.7);
  CHECK(std::abs(dunkl_kernel(a, {2.0, 1.0}, 0.0) - 1.0) < 1e-15);
  for (double alpha : {-0.25, 0.7, 1.5}) {
    AlphaParam al(alpha);
    for (double t = -10.0; t <= 10.0; t += 0.37) {
      for (double x = -10.0; x <= 10.0; x += 0.41) {
        const auto e = dunkl_kernel(al, {0.0, -t}, x);
        CHECK(std::abs(e) <= 1.0 + 1e-12);
      }
    }
  }
}

TEST_CASE("dunkl kernel is an eigenfunction of the dunkl operator") {
  for (double alpha : {1.0, -0.25, 0.5}) {
    AlphaParam a(alpha);
    const double lambda = 2.0;
    auto E = [&](double x) { return dunkl_kernel(a, lambda, x).real(); };
    for (double x : {0.5, -0.8, 1.7}) {
      const double h = 1e-3;
      const double d = (-E(x + 2 * h) + 8 * E(x + h) - 8 * E(x - h) + E(x - 2 * h)) / (12 * h);
      const double lam = d + a.weight_exp() * (E(x) - E(-x)) / (2.0 * x);
      const double rhs = lambda * E(x);
      CHECK(std::abs(lam - rhs) <= 1e-6 * (1.0 + std::abs(E(x))));
    }
  }
}

namespace {

// L_n^a(x) from the explicit binomial sum.
double laguerre_sum(int n, double a, double x) {
  double s = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double c = std::tgamma(n + a + 1) /
                     (std::tgamma(n - j + 1) * std::tgamma(a + j + 1) * std::tgamma(j + 1));
    s += (j % 2 ? -c : c) * std::pow(x, j);
  }
  return s;
}

}  // namespace

TEST_CASE("laguerre polynomials") {
  CHECK(laguerre(0, 0.3, 5.0) == 1.0);
  CHECK(laguerre(1, 0.5, 2.0) == doctest::Approx(-0.5));
  CHECK(laguerre(2, 0.0, 1.0) == doctest::Approx(-0.5));
  for (int n : {3, 5}) {
    for (double x : {0.2, 1.5, 4.0}) {
      CHECK(laguerre(n, 1.2, x) == doctest::Approx(laguerre_sum(n, 1.2, x)).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(laguerre(-1, 0.0, 1.0), DomainError);
}

TEST_CASE("generalized hermite polynomials") {
  AlphaParam a(0.5);
  CHECK(hermite_generalized(0, a, 0.7) == 1.0);
  CHECK(hermite_generalized(1, a, 0.7) == doctest::Approx(1.4));
  CHECK(hermite_generalized(2, a, 1.0) == doctest::Approx(-2.0));
  for (int n = 0; n < 7; ++n) {
    for (double x : {0.3, 1.1, 2.6}) {
      const double sign = (n % 2 == 0) ? 1.0 : -1.0;
      CHECK(hermite_generalized(n, a, -x) ==
            doctest::Approx(sign * hermite_generalized(n, a, x)).epsilon(1e-13));
    }
  }
}
