#ifndef DUNKL_FUNCALG_HPP
#define DUNKL_FUNCALG_HPP

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "dunkl/special.hpp"

namespace dunkl {

/**
 * A real function together with the radius beyond which it is negligible.
 * `support` is infinite for functions that do not decay (polynomials,
 * kernels); integrators that need a truncation reject those.
 */
struct Evaluable {
  std::function<double(double)> fn;
  double support = std::numeric_limits<double>::infinity();

  double operator()(double x) const { return fn(x); }
  bool decays() const { return std::isfinite(support); }
};

/**
 * f(x) = (c_0 + c_1 x + ... + c_N x^N) exp(-s x^2).
 *
 * The set of such functions is closed under multiplication by x,
 * differentiation and reflection, hence under the Dunkl operator; every
 * Dunkl power of an element is again an element with exact coefficients.
 * s = 0 gives a pure polynomial, which is evaluable pointwise but not normable.
 */
class GaussPolyFunction {
 public:
  GaussPolyFunction() = default;
  GaussPolyFunction(std::vector<double> coeffs, double gauss_scale,
                    std::optional<double> support_hint = std::nullopt);

  static GaussPolyFunction polynomial(std::vector<double> coeffs) {
    return GaussPolyFunction(std::move(coeffs), 0.0);
  }
  static GaussPolyFunction gaussian(double s = 1.0) {
    return GaussPolyFunction({1.0}, s);
  }

  const std::vector<double>& coeffs() const noexcept { return coeffs_; }
  double gauss_scale() const noexcept { return scale_; }
  std::optional<double> support_hint_field() const noexcept { return hint_; }

  /// Truncation radius: the explicit hint, else max(8, 10/sqrt(s)).
  /// Infinite for pure polynomials.
  double support_hint() const;

  bool normable() const noexcept { return scale_ > 0.0; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Degree of the polynomial factor, -1 for the zero function.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  double operator()(double x) const;

  /// Even and odd parts as algebra elements.
  GaussPolyFunction even_part() const;
  GaussPolyFunction odd_part() const;
  GaussPolyFunction reflected() const;
  GaussPolyFunction derivative() const;
  /// x * f(x)
  GaussPolyFunction times_x() const;

  bool is_even() const;
  bool is_odd() const;

  Evaluable evaluable() const;

  friend GaussPolyFunction operator+(const GaussPolyFunction& a,
                                     const GaussPolyFunction& b);
  friend GaussPolyFunction operator-(const GaussPolyFunction& a,
                                     const GaussPolyFunction& b);
  friend GaussPolyFunction operator*(double c, const GaussPolyFunction& f);

 private:
  void trim();

  std::vector<double> coeffs_;
  double scale_ = 0.0;
  std::optional<double> hint_;
};

/// Lambda_alpha f, exact in coefficients.
GaussPolyFunction dunkl_apply(const AlphaParam& alpha, const GaussPolyFunction& f);

/// Lambda_alpha^k f; k = 0 returns f.
GaussPolyFunction dunkl_power(const AlphaParam& alpha, const GaussPolyFunction& f,
                              int k);

/// phi_t(x) = t^{-2(alpha+1)} phi(x/t). The support hint scales with t.
GaussPolyFunction dilate(const AlphaParam& alpha, const GaussPolyFunction& phi,
                         double t);

/**
 * phi(x) = H_{2 n0}^{alpha+1/2}(x) exp(-x^2). Its even moments
 * int_0^inf x^{2i} phi dmu_alpha vanish for 0 <= i < n0, in particular for
 * every i <= floor((k-1)/2) as long as n0 > floor((k-1)/2).
 */
GaussPolyFunction hermite_phi(const AlphaParam& alpha, int n0, int k);

/// Closed-form int_0^inf x^{m} f(x) dmu_alpha(x) for s > 0, summed term by term
/// from Gamma moments of the Gaussian.
double half_line_moment(const AlphaParam& alpha, const GaussPolyFunction& f, int m);

/// Named test functions: "gaussian", "x_gaussian", "cubic_gaussian", "zero".
GaussPolyFunction catalog_function(const std::string& name);

}  // namespace dunkl

#endif  // DUNKL_FUNCALG_HPP
