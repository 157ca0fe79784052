#include "dunkl/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace dunkl {

namespace {

constexpr double kSeriesSwitch = 12.0;

}  // namespace

AlphaParam::AlphaParam(double alpha) : alpha_(alpha) {
  if (!(alpha > -0.5) || !std::isfinite(alpha)) {
    throw DomainError("alpha must be a finite real > -1/2");
  }
  norm_const_ = std::exp2(alpha + 1.0) * std::tgamma(alpha + 1.0);
  weight_exp_ = 2.0 * alpha + 1.0;
}

double AlphaParam::weight(double x) const {
  return std::pow(std::abs(x), weight_exp_);
}

double gamma_fn(double x) {
  if (!(x > 0.0)) throw DomainError("gamma_fn: argument must be positive");
  return std::tgamma(x);
}

double pochhammer(double a, int m) {
  double r = 1.0;
  for (int i = 0; i < m; ++i) r *= a + i;
  return r;
}

double bessel_j_normalized_series(double nu, double z) {
  if (nu < -0.5) throw DomainError("bessel order must be >= -1/2");
  const double q = -0.25 * z * z;
  double term = 1.0;
  double sum = 1.0;
  for (int m = 0; m < 500; ++m) {
    term *= q / ((m + 1.0) * (nu + 1.0 + m));
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum) && m + 1 > std::abs(z) / 2) {
      break;
    }
  }
  return sum;
}

double bessel_j_normalized_asymptotic(double nu, double z) {
  if (nu < -0.5) throw DomainError("bessel order must be >= -1/2");
  z = std::abs(z);
  if (z < 8.0) throw DomainError("asymptotic Bessel branch needs |z| >= 8");
  const double mu = 4.0 * nu * nu;
  const double eightz = 8.0 * z;
  double p = 1.0;
  double qs = 0.0;
  double term = 1.0;
  double last = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 60; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (k * eightz);
    if (std::abs(term) >= last) break;  // asymptotic series has started to diverge
    last = std::abs(term);
    // k odd feeds Q with sign (-1)^{(k-1)/2}, k even feeds P with (-1)^{k/2}
    const int half = k / 2;
    const double sign = (half % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 1) {
      qs += sign * term;
    } else {
      p += sign * term;
    }
    if (std::abs(term) < 1e-18) break;
  }
  const double chi = z - (0.5 * nu + 0.25) * std::numbers::pi;
  const double j_nu = std::sqrt(2.0 / (std::numbers::pi * z)) *
                      (p * std::cos(chi) - qs * std::sin(chi));
  const double scale =
      std::exp(nu * std::numbers::ln2 + std::lgamma(nu + 1.0) - nu * std::log(z));
  return scale * j_nu;
}

double bessel_j_normalized(double nu, double z) {
  if (nu < -0.5) throw DomainError("bessel order must be >= -1/2");
  const double az = std::abs(z);
  if (az <= kSeriesSwitch) return bessel_j_normalized_series(nu, az);
  return bessel_j_normalized_asymptotic(nu, az);
}

std::complex<double> bessel_j_normalized(double nu, std::complex<double> w) {
  if (nu < -0.5) throw DomainError("bessel order must be >= -1/2");
  if (w.imag() == 0.0) return {bessel_j_normalized(nu, w.real()), 0.0};
  if (w.real() == 0.0) {
    // j_nu(i theta) = sum (theta^2/4)^m / (m! (nu+1)_m): all terms positive.
    const double q = 0.25 * w.imag() * w.imag();
    double term = 1.0;
    double sum = 1.0;
    for (int m = 0; m < 5000; ++m) {
      term *= q / ((m + 1.0) * (nu + 1.0 + m));
      sum += term;
      if (term <= 1e-17 * sum) break;
    }
    return {sum, 0.0};
  }
  if (std::abs(w) > kSeriesSwitch) {
    throw DomainError("complex Bessel argument off the axes must satisfy |w| <= 12");
  }
  const std::complex<double> q = -0.25 * w * w;
  std::complex<double> term = 1.0;
  std::complex<double> sum = 1.0;
  for (int m = 0; m < 500; ++m) {
    term *= q / ((m + 1.0) * (nu + 1.0 + m));
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum) && m > 20) break;
  }
  return sum;
}

std::complex<double> dunkl_kernel(const AlphaParam& alpha,
                                  std::complex<double> lambda, double x) {
  const double a = alpha.alpha();
  const std::complex<double> lx = lambda * x;
  const std::complex<double> arg = std::complex<double>(0.0, 1.0) * lx;
  return bessel_j_normalized(a, arg) +
         lx / (2.0 * (a + 1.0)) * bessel_j_normalized(a + 1.0, arg);
}

double laguerre(int n, double a, double x) {
  if (n < 0) throw DomainError("laguerre: degree must be nonnegative");
  if (!(a > -1.0)) throw DomainError("laguerre: index must be > -1");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + a - x;
  for (int m = 1; m < n; ++m) {
    const double next = ((2.0 * m + 1.0 + a - x) * cur - (m + a) * prev) / (m + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double hermite_generalized(int n, const AlphaParam& alpha, double x) {
  if (n < 0) throw DomainError("hermite: degree must be nonnegative");
  const int m = n / 2;
  double factorial = 1.0;
  for (int i = 2; i <= m; ++i) factorial *= i;
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  if (n % 2 == 0) {
    return sign * std::exp2(2.0 * m) * factorial * laguerre(m, alpha.alpha(), x * x);
  }
  return sign * std::exp2(2.0 * m + 1.0) * factorial * x *
         laguerre(m, alpha.alpha() + 1.0, x * x);
}

}  // namespace dunkl
