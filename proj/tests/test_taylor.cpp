#include <cmath>
#include <vector>

#include "doctest.h"
#include "dunkl/taylor.hpp"

using namespace dunkl;

namespace {

double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

// u_k, v_k straight from the defining recursion, by nested quadrature.
struct DirectTheta {
  AlphaParam alpha;
  double u(int k, double x, double y) const {
    if (k == 0) return sgn(x) / (2.0 * alpha.weight(x));
    return integrate([&](double z) { return v(k - 1, x, z); }, std::abs(y), std::abs(x),
                     tight())
        .value;
  }
  double v(int k, double x, double y) const {
    if (k == 0) return sgn(y) / (2.0 * alpha.weight(y));
    const double in = integrate([&](double z) { return u(k - 1, x, z) * alpha.weight(z); },
                                std::abs(y), std::abs(x), tight())
                          .value;
    return sgn(y) / alpha.weight(y) * in;
  }
  double theta(int k, double x, double y) const { return u(k, x, y) + v(k, x, y); }
  static QuadSpec tight() {
    QuadSpec s;
    s.abs_tol = 1e-14;
    s.rel_tol = 1e-13;
    return s;
  }
};

GaussPolyFunction gauss() { return GaussPolyFunction::gaussian(); }

}  // namespace

TEST_CASE("b coefficients: closed values and the alpha -> -1/2 limit") {
  const AlphaParam a(0.5);
  CHECK(b_coeff(a, 0, 3.7) == 1.0);
  CHECK(b_coeff(a, 1, 2.0) == doctest::Approx(2.0 / 3.0));
  CHECK(b_coeff(a, 3, -1.0) == doctest::Approx(-b_coeff(a, 3, 1.0)));
  const AlphaParam edge(-0.5 + 1e-13);
  double fact = 1.0;
  for (int p = 0; p <= 6; ++p) {
    if (p > 0) fact *= p;
    CHECK(b_coeff(edge, p, 1.3) == doctest::Approx(std::pow(1.3, p) / fact).epsilon(1e-9));
  }
}

TEST_CASE("b polynomials form an Appell sequence and sum to the kernel") {
  for (double al : {-0.25, 0.5, 1.5}) {
    const AlphaParam a(al);
    for (int p = 1; p <= 6; ++p) {
      const GaussPolyFunction d = dunkl_apply(a, b_polynomial(a, p));
      const GaussPolyFunction prev = b_polynomial(a, p - 1);
      REQUIRE(d.degree() == prev.degree());
      for (int n = 0; n <= d.degree(); ++n) {
        CHECK(d.coeffs()[n] == doctest::Approx(prev.coeffs()[n]).epsilon(1e-13));
      }
    }
    for (double lam : {-1.7, 0.4, 2.5}) {
      double sum = 0.0;
      for (int p = 0; p < 60; ++p) sum += b_coeff(a, p, 0.9) * std::pow(lam, p);
      CHECK(sum == doctest::Approx(dunkl_kernel(a, lam, 0.9).real()).epsilon(1e-12));
    }
  }
}

TEST_CASE("theta_0 closed form") {
  const ThetaKernel t0(AlphaParam(0.5), 0);
  CHECK(t0.mode() == ThetaMode::symbolic);
  CHECK(t0(2.0, 1.0) == doctest::Approx(0.625));
  CHECK(t0(2.0, -1.0) == doctest::Approx(0.125 - 0.5));
  CHECK(t0(-1.5, -1.5) == doctest::Approx(-1.0 / std::pow(1.5, 2.0)));
  CHECK(t0(1.5, 1.5) == doctest::Approx(1.0 / std::pow(1.5, 2.0)));
}

TEST_CASE("theta_1 first recursion level by hand") {
  const AlphaParam a(0.5);
  const double e = a.weight_exp();
  const double x = 1.0;
  const double y = 0.5;
  const double v1 = (std::pow(x, e + 1) - std::pow(y, e + 1)) /
                    ((e + 1) * 2.0 * a.weight(x) * a.weight(y));
  const double u1 = integrate([&](double z) { return 1.0 / (2.0 * a.weight(z)); }, y, x).value;
  const double expect = u1 + v1;
  CHECK(ThetaKernel(a, 1, ThetaMode::symbolic)(x, y) == doctest::Approx(expect).epsilon(1e-12));
  CHECK(ThetaKernel(a, 1, ThetaMode::numeric)(x, y) == doctest::Approx(expect).epsilon(1e-10));
}

TEST_CASE("symbolic theta matches the direct recursion") {
  for (double al : {-0.25, 0.5, 1.5}) {
    const DirectTheta direct{AlphaParam(al)};
    for (int k = 1; k <= 2; ++k) {
      const ThetaKernel th(AlphaParam(al), k, ThetaMode::symbolic);
      for (double x : {0.8, -1.3}) {
        for (double y : {0.3, -0.55, 0.79}) {
          const double want = direct.theta(k, x, y);
          CHECK(th(x, y) == doctest::Approx(want).epsilon(1e-9));
        }
      }
    }
  }
}

TEST_CASE("numeric and symbolic theta agree") {
  for (double al : {-0.25, 0.5, 1.5}) {
    const AlphaParam a(al);
    for (int k = 0; k <= 3; ++k) {
      const ThetaKernel sym(a, k, ThetaMode::symbolic);
      const ThetaKernel num(a, k, ThetaMode::numeric);
      for (double x : {0.7, -2.0}) {
        const ThetaAtX s = sym.at(x);
        const ThetaAtX n = num.at(x);
        for (double frac : {1e-6, 0.013, 0.3, -0.5, 0.97}) {
          const double y = frac * std::abs(x);
          const double scale = std::abs(s.weighted(y)) + std::pow(std::abs(x), k);
          CHECK(std::abs(s.weighted(y) - n.weighted(y)) <= 1e-8 * scale);
        }
      }
    }
  }
}

TEST_CASE("resonant parameters route to the numeric mode") {
  CHECK(ThetaKernel::is_resonant(AlphaParam(0.0), 1));
  CHECK(ThetaKernel::is_resonant(AlphaParam(1.0), 3));
  CHECK_FALSE(ThetaKernel::is_resonant(AlphaParam(0.5), 3));
  CHECK_FALSE(ThetaKernel::is_resonant(AlphaParam(-0.25), 3));
  CHECK_THROWS_AS(ThetaKernel(AlphaParam(0.0), 1, ThetaMode::symbolic), DomainError);
  const ThetaKernel t(AlphaParam(0.0), 1);
  CHECK(t.mode() == ThetaMode::numeric);
  // alpha = 0: U_1 = log(a/r)/2, W_1 = sgn(x)(a^2 - r^2)/(4a).
  for (double x : {1.2, -0.6}) {
    const double a = std::abs(x);
    for (double y : {0.05, -0.3, 0.5}) {
      const double r = std::abs(y);
      const double want = std::log(a / r) / 2.0 + sgn(y) * sgn(x) * (a * a - r * r) / (4.0 * a) / r;
      CHECK(t(x, y) == doctest::Approx(want).epsilon(1e-10));
    }
  }
}

TEST_CASE("theta_{k-1} integrates to b_k against A") {
  for (double al : {-0.25, 0.0, 0.5, 1.0, 1.5}) {
    const AlphaParam a(al);
    for (int k = 1; k <= 4; ++k) {
      const ThetaKernel th(a, k - 1);
      for (double x : {0.6, -1.7}) {
        const double v = th.at(x).integrate([](double) { return 1.0; }).value;
        CHECK(v == doctest::Approx(b_coeff(a, k, x)).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("theta mass: exact at k = 1 and the bound") {
  for (double al : {-0.25, 0.5, 1.5}) {
    const AlphaParam a(al);
    // |U_0 r^e| <= 1/2 = W_0 on [0, a], so the k = 1 mass equals |x|.
    for (double x : {1e-3, 0.2, -2.0}) {
      CHECK(theta_mass(a, 1, x) == doctest::Approx(std::abs(x)).epsilon(1e-10));
    }
    for (int k = 1; k <= 3; ++k) {
      for (double x : {0.2, 0.8, 2.0, -0.8}) {
        const double ax = std::abs(x);
        const double bound = b_coeff(a, k, ax) + ax * b_coeff(a, k - 1, ax);
        CHECK(theta_mass(a, k, x) <= bound + 1e-8);
      }
    }
  }
  const AlphaParam a(0.5);
  CHECK(theta_mass(a, 1, 1.0) <= 4.0 / 3.0);
  const AlphaParam b(1.5);
  CHECK(theta_mass(b, 2, 0.8) <= b_coeff(b, 2, 0.8) + 0.8 * b_coeff(b, 1, 0.8));
}

TEST_CASE("moment identity targets b_{p+1}(x)") {
  const AlphaParam a(0.5);
  CHECK(theta0_moment(a, 0, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
  CHECK(theta0_moment(a, 1, -1.0) == doctest::Approx(b_coeff(a, 2, 1.0)).epsilon(1e-10));
  const AlphaParam b(1.5);
  CHECK(theta0_moment(b, 3, 0.5) == doctest::Approx(b_coeff(b, 4, 0.5)).epsilon(1e-10));
  for (double al : {-0.25, 0.5, 1.5}) {
    const AlphaParam c(al);
    for (int p = 0; p <= 5; ++p) {
      for (double x : {-1.1, 0.35, 2.2}) {
        CHECK(theta0_moment(c, p, x) == doctest::Approx(b_coeff(c, p + 1, x)).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("remainder: trivial cases and mode agreement") {
  const AlphaParam a(0.5);
  const GaussPolyFunction one = GaussPolyFunction::polynomial({1.0});
  CHECK(std::abs(remainder(a, 1, one, 0.7, 0.3, RemainderMode::integral).value) < 1e-12);
  CHECK(std::abs(remainder(a, 1, one, 0.7, 0.3, RemainderMode::recurrence).value) < 1e-12);
  const GaussPolyFunction b1 = b_polynomial(a, 1);
  CHECK(std::abs(remainder(a, 2, b1, -0.4, 1.1, RemainderMode::integral).value) < 1e-14);
  CHECK(std::abs(remainder(a, 2, b1, -0.4, 1.1, RemainderMode::recurrence).value) < 1e-12);

  const double ri = remainder(a, 1, gauss(), 0.7, 0.3, RemainderMode::integral).value;
  const double rr = remainder(a, 1, gauss(), 0.7, 0.3, RemainderMode::recurrence).value;
  CHECK(std::abs(ri - rr) <= 1e-6);
  CHECK(std::abs(ri) > 1e-3);

  for (double al : {-0.25, 0.5, 1.5}) {
    const AlphaParam c(al);
    for (const char* name : {"gaussian", "x_gaussian", "cubic_gaussian"}) {
      const GaussPolyFunction f = catalog_function(name);
      for (int k = 1; k <= 3; ++k) {
        const Remainder in(c, k, f, RemainderMode::integral);
        const Remainder re(c, k, f, RemainderMode::recurrence);
        for (double x : {0.3, -1.2}) {
          for (double aa : {-0.9, 0.0, 0.4, 2.5}) {
            CHECK(std::abs(in.at(x, aa).value - re.at(x, aa).value) <= 1e-6);
          }
        }
      }
    }
  }
}

TEST_CASE("generalized Taylor formula") {
  const AlphaParam a(0.5);
  const double tau = translate(a, gauss(), 0.9, -0.4).value;
  CHECK(taylor_identity_residual(a, 3, gauss(), 0.9, -0.4) <= 1e-6 * (1.0 + std::abs(tau)));
  // Polynomials of degree < k: the finite sum is exact.
  const GaussPolyFunction poly = GaussPolyFunction::polynomial({0.3, -1.0, 2.0});
  CHECK(taylor_identity_residual(a, 3, poly, 1.4, 0.6) <= 1e-11);
  CHECK(std::abs(remainder(a, 3, poly, 1.4, 0.6, RemainderMode::integral).value) < 1e-14);
  // x -> 0: tau_x f(a) -> f(a) and the residual stays small.
  for (double x : {1e-1, 1e-2, 1e-3}) {
    CHECK(taylor_identity_residual(a, 1, gauss(), x, 0.5) <= 1e-8);
    CHECK(std::abs(translate(a, gauss(), x, 0.5).value - std::exp(-0.25)) <= 2.0 * x);
  }
}

TEST_CASE("remainder recursion through theta_0") {
  const AlphaParam a(0.5);
  CHECK(remainder_recursion_residual(a, 1, gauss(), 0.6, -0.3) <= 1e-6);
  CHECK(remainder_recursion_residual(a, 2, gauss(), 0.8, 0.2) <= 1e-6);
  CHECK(remainder_recursion_residual(a, 3, catalog_function("cubic_gaussian"), -0.8, 0.7) <= 1e-6);
  CHECK(remainder_recursion_residual(a, 2, b_polynomial(a, 1), 0.8, 0.2) <= 1e-12);
  const AlphaParam b(-0.25);
  CHECK(remainder_recursion_residual(b, 2, catalog_function("x_gaussian"), 1.1, 0.5) <= 1e-6);
}

TEST_CASE("successive remainders differ by one Taylor term") {
  for (double al : {-0.25, 1.5}) {
    const AlphaParam a(al);
    const GaussPolyFunction f = catalog_function("cubic_gaussian");
    for (int k = 2; k <= 3; ++k) {
      const double rk = remainder(a, k, f, 0.7, 0.4, RemainderMode::integral).value;
      const double rk1 = remainder(a, k - 1, f, 0.7, 0.4, RemainderMode::integral).value;
      const double step = b_coeff(a, k - 1, 0.7) * dunkl_power(a, f, k - 1)(0.4);
      CHECK(std::abs(rk - (rk1 - step)) <= 1e-6);
    }
  }
}

TEST_CASE("iterated integrals") {
  const AlphaParam a(0.5);
  const GaussPolyFunction one = GaussPolyFunction::polynomial({1.0});
  CHECK(iterated_integral_I(a, 1, one, 0.9, 0.2) == doctest::Approx(b_coeff(a, 1, 0.9)).epsilon(1e-10));
  CHECK_THROWS_AS(iterated_integral_I(a, 5, one, 0.9, 0.2), DomainError);

  const GaussPolyFunction f = gauss();
  const double x = 0.7;
  const double pt = 0.45;
  for (int k = 1; k <= 2; ++k) {
    const RealFn I = [&](double s) { return iterated_integral_I(a, k, f, x, s); };
    const double lhs = dunkl_fd(a, I, pt, k);
    const double rhs = remainder(a, k, f, x, pt, RemainderMode::integral).value;
    CHECK(std::abs(lhs - rhs) <= 1e-4);
  }
  // Lambda^2 I_1(x, f) = Lambda I_1(x, Lambda f).
  const GaussPolyFunction lf = dunkl_apply(a, f);
  const RealFn I1 = [&](double s) { return iterated_integral_I(a, 1, f, x, s); };
  const RealFn I1l = [&](double s) { return iterated_integral_I(a, 1, lf, x, s); };
  CHECK(std::abs(dunkl_fd(a, I1, pt, 2) - dunkl_fd(a, I1l, pt, 1)) <= 1e-4);
}

TEST_CASE("symmetric remainder") {
  const AlphaParam a(0.5);
  const SymmetricRemainder s = symmetric_remainder(a, 2, gauss(), 0.6, 0.9);
  CHECK(s.residual() <= 1e-6);
  const SymmetricRemainder e = symmetric_remainder(a, 1, gauss(), 0.6, 0.0);
  const double tau0 = translate(a, gauss(), 0.6, 0.0).value;
  CHECK(e.closed_form == doctest::Approx(2.0 * (tau0 - 1.0)).epsilon(1e-12));
  CHECK(e.residual() <= 1e-6);
  const SymmetricRemainder z = symmetric_remainder(a, 3, gauss(), 1e-4, 0.5);
  CHECK(std::abs(z.closed_form) < 1e-6);
  for (double al : {-0.25, 1.5}) {
    for (int k = 1; k <= 3; ++k) {
      CHECK(symmetric_remainder(AlphaParam(al), k, catalog_function("cubic_gaussian"), -0.9, 0.3)
                .residual() <= 1e-6);
    }
  }
}

TEST_CASE("finite-difference Dunkl operator against the exact one") {
  const AlphaParam a(-0.25);
  const GaussPolyFunction f = catalog_function("cubic_gaussian");
  const RealFn F = [&](double s) { return f(s); };
  for (double pt : {0.3, -1.1}) {
    CHECK(dunkl_fd(a, F, pt, 1) == doctest::Approx(dunkl_apply(a, f)(pt)).epsilon(1e-9));
    CHECK(dunkl_fd(a, F, pt, 2) == doctest::Approx(dunkl_power(a, f, 2)(pt)).epsilon(1e-6));
  }
  CHECK_THROWS_AS(dunkl_fd(a, F, 1e-3, 1), DomainError);
}
