#ifndef DUNKL_SPECIAL_HPP
#define DUNKL_SPECIAL_HPP

#include <complex>
#include <stdexcept>

namespace dunkl {

/// Raised when an argument lies outside the domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/**
 * The Dunkl parameter alpha > -1/2 together with the constants every other
 * module derives from it.
 *
 *   norm_const = 2^{alpha+1} Gamma(alpha+1)   (normalization of mu_alpha)
 *   weight_exp = 2 alpha + 1                  (A_alpha(x) = |x|^{weight_exp})
 */
class AlphaParam {
 public:
  explicit AlphaParam(double alpha);

  double alpha() const noexcept { return alpha_; }
  double norm_const() const noexcept { return norm_const_; }
  double weight_exp() const noexcept { return weight_exp_; }

  /// A_alpha(x) = |x|^{2 alpha + 1}.
  double weight(double x) const;

  /// Density of mu_alpha with respect to Lebesgue measure.
  double density(double x) const { return weight(x) / norm_const_; }

 private:
  double alpha_;
  double norm_const_;
  double weight_exp_;
};

/// Gamma(x) for x > 0.
double gamma_fn(double x);

/// Rising factorial (a)_m = a (a+1) ... (a+m-1), computed multiplicatively.
double pochhammer(double a, int m);

/**
 * Normalized Bessel function j_nu(z) = 2^nu Gamma(nu+1) J_nu(z) / z^nu,
 * j_nu(0) = 1. Power series for |z| <= 12, Hankel asymptotics beyond.
 */
double bessel_j_normalized(double nu, double z);

/// Power-series branch of bessel_j_normalized, valid for any z (loses
/// accuracy to cancellation for large |z|).
double bessel_j_normalized_series(double nu, double z);

/// Large-argument branch of bessel_j_normalized; requires |z| >= 8.
double bessel_j_normalized_asymptotic(double nu, double z);

/**
 * j_nu at a complex argument. Real and purely imaginary arguments are
 * supported for any magnitude; general complex arguments only for |w| <= 12.
 */
std::complex<double> bessel_j_normalized(double nu, std::complex<double> w);

/// Dunkl kernel E_alpha(lambda x) = j_alpha(i lambda x)
///   + lambda x / (2(alpha+1)) j_{alpha+1}(i lambda x).
std::complex<double> dunkl_kernel(const AlphaParam& alpha,
                                  std::complex<double> lambda, double x);

/// Laguerre polynomial L_n^a(x) by the three-term recurrence.
double laguerre(int n, double a, double x);

/// Generalized Hermite polynomial H_n^{alpha+1/2}(x).
double hermite_generalized(int n, const AlphaParam& alpha, double x);

}  // namespace dunkl

#endif  // DUNKL_SPECIAL_HPP
