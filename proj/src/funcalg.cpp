#include "dunkl/funcalg.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace dunkl {

GaussPolyFunction::GaussPolyFunction(std::vector<double> coeffs, double gauss_scale,
                                     std::optional<double> support_hint)
    : coeffs_(std::move(coeffs)), scale_(gauss_scale), hint_(support_hint) {
  if (!(gauss_scale >= 0.0) || !std::isfinite(gauss_scale)) {
    throw DomainError("gauss_scale must be finite and >= 0");
  }
  for (double c : coeffs_) {
    if (!std::isfinite(c)) throw DomainError("coefficients must be finite");
  }
  if (hint_ && !(*hint_ > 0.0)) throw DomainError("support hint must be positive");
  trim();
}

void GaussPolyFunction::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double GaussPolyFunction::support_hint() const {
  if (scale_ == 0.0) return std::numeric_limits<double>::infinity();
  if (hint_) return *hint_;
  return std::max(8.0, 10.0 / std::sqrt(scale_));
}

double GaussPolyFunction::operator()(double x) const {
  double p = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) p = p * x + *it;
  if (scale_ == 0.0 || p == 0.0) return p;
  return p * std::exp(-scale_ * x * x);
}

GaussPolyFunction GaussPolyFunction::even_part() const {
  std::vector<double> c = coeffs_;
  for (std::size_t n = 1; n < c.size(); n += 2) c[n] = 0.0;
  return {std::move(c), scale_, hint_};
}

GaussPolyFunction GaussPolyFunction::odd_part() const {
  std::vector<double> c = coeffs_;
  for (std::size_t n = 0; n < c.size(); n += 2) c[n] = 0.0;
  return {std::move(c), scale_, hint_};
}

GaussPolyFunction GaussPolyFunction::reflected() const {
  std::vector<double> c = coeffs_;
  for (std::size_t n = 1; n < c.size(); n += 2) c[n] = -c[n];
  return {std::move(c), scale_, hint_};
}

GaussPolyFunction GaussPolyFunction::derivative() const {
  // (P e^{-s x^2})' = (P' - 2 s x P) e^{-s x^2}
  std::vector<double> c(coeffs_.size() + 1, 0.0);
  for (std::size_t n = 1; n < coeffs_.size(); ++n) c[n - 1] += n * coeffs_[n];
  for (std::size_t n = 0; n < coeffs_.size(); ++n) c[n + 1] -= 2.0 * scale_ * coeffs_[n];
  return {std::move(c), scale_, hint_};
}

GaussPolyFunction GaussPolyFunction::times_x() const {
  std::vector<double> c(coeffs_.size() + 1, 0.0);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) c[n + 1] = coeffs_[n];
  return {std::move(c), scale_, hint_};
}

bool GaussPolyFunction::is_even() const {
  for (std::size_t n = 1; n < coeffs_.size(); n += 2) {
    if (coeffs_[n] != 0.0) return false;
  }
  return true;
}

bool GaussPolyFunction::is_odd() const {
  for (std::size_t n = 0; n < coeffs_.size(); n += 2) {
    if (coeffs_[n] != 0.0) return false;
  }
  return true;
}

Evaluable GaussPolyFunction::evaluable() const {
  return Evaluable{[f = *this](double x) { return f(x); }, support_hint()};
}

namespace {

GaussPolyFunction combine(const GaussPolyFunction& a, const GaussPolyFunction& b,
                          double sign) {
  if (a.is_zero()) return sign * b;
  if (b.is_zero()) return a;
  if (a.gauss_scale() != b.gauss_scale()) {
    throw DomainError("cannot add algebra elements with different Gaussian scales");
  }
  std::vector<double> c(std::max(a.coeffs().size(), b.coeffs().size()), 0.0);
  for (std::size_t n = 0; n < a.coeffs().size(); ++n) c[n] += a.coeffs()[n];
  for (std::size_t n = 0; n < b.coeffs().size(); ++n) c[n] += sign * b.coeffs()[n];
  std::optional<double> hint;
  if (a.support_hint_field() || b.support_hint_field()) {
    hint = std::max(a.support_hint(), b.support_hint());
  }
  return {std::move(c), a.gauss_scale(), hint};
}

}  // namespace

GaussPolyFunction operator+(const GaussPolyFunction& a, const GaussPolyFunction& b) {
  return combine(a, b, 1.0);
}

GaussPolyFunction operator-(const GaussPolyFunction& a, const GaussPolyFunction& b) {
  return combine(a, b, -1.0);
}

GaussPolyFunction operator*(double c, const GaussPolyFunction& f) {
  std::vector<double> out = f.coeffs_;
  for (double& v : out) v *= c;
  return {std::move(out), f.scale_, f.hint_};
}

GaussPolyFunction dunkl_apply(const AlphaParam& alpha, const GaussPolyFunction& f) {
  // Lambda f = f' + (2 alpha + 1) P_odd(x)/x e^{-s x^2}; P_odd/x is a polynomial.
  GaussPolyFunction d = f.derivative();
  std::vector<double> c = d.coeffs();
  const auto& p = f.coeffs();
  if (c.size() < p.size()) c.resize(p.size(), 0.0);
  for (std::size_t n = 1; n < p.size(); n += 2) {
    c[n - 1] += alpha.weight_exp() * p[n];
  }
  return {std::move(c), f.gauss_scale(), f.support_hint_field()};
}

GaussPolyFunction dunkl_power(const AlphaParam& alpha, const GaussPolyFunction& f,
                              int k) {
  if (k < 0) throw DomainError("dunkl_power: k must be nonnegative");
  GaussPolyFunction g = f;
  for (int i = 0; i < k; ++i) g = dunkl_apply(alpha, g);
  return g;
}

GaussPolyFunction dilate(const AlphaParam& alpha, const GaussPolyFunction& phi,
                         double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("dilate: t must be positive");
  std::vector<double> c = phi.coeffs();
  const double base = -2.0 * (alpha.alpha() + 1.0);
  for (std::size_t n = 0; n < c.size(); ++n) {
    c[n] *= std::pow(t, base - static_cast<double>(n));
  }
  std::optional<double> hint;
  if (phi.normable()) hint = t * phi.support_hint();
  return {std::move(c), phi.gauss_scale() / (t * t), hint};
}

GaussPolyFunction hermite_phi(const AlphaParam& alpha, int n0, int k) {
  if (k < 1) throw DomainError("hermite_phi: k must be a positive integer");
  if (n0 < 1 || n0 <= (k - 1) / 2) {
    throw DomainError("hermite_phi: n0 must exceed floor((k-1)/2)");
  }
  // H_{2n}(x) = (-1)^n 4^n n! L_n^alpha(x^2),
  // L_n^a(y) = sum_j (-1)^j (a+j+1)_{n-j} / (n-j)! y^j / j!
  const double a = alpha.alpha();
  double n_fact = 1.0;
  for (int i = 2; i <= n0; ++i) n_fact *= i;
  const double lead = ((n0 % 2 == 0) ? 1.0 : -1.0) * std::exp2(2.0 * n0) * n_fact;
  std::vector<double> c(2 * n0 + 1, 0.0);
  for (int j = 0; j <= n0; ++j) {
    double nj_fact = 1.0;
    for (int i = 2; i <= n0 - j; ++i) nj_fact *= i;
    double j_fact = 1.0;
    for (int i = 2; i <= j; ++i) j_fact *= i;
    const double lj = ((j % 2 == 0) ? 1.0 : -1.0) * pochhammer(a + j + 1.0, n0 - j) /
                      (nj_fact * j_fact);
    c[2 * j] = lead * lj;
  }
  return {std::move(c), 1.0};
}

double half_line_moment(const AlphaParam& alpha, const GaussPolyFunction& f, int m) {
  if (!f.normable()) throw DomainError("moment of a non-decaying function");
  const double s = f.gauss_scale();
  double sum = 0.0;
  for (std::size_t n = 0; n < f.coeffs().size(); ++n) {
    if (f.coeffs()[n] == 0.0) continue;
    const double h = 0.5 * (static_cast<double>(n + m) + alpha.weight_exp() + 1.0);
    sum += f.coeffs()[n] * std::exp(std::lgamma(h) - h * std::log(s)) * 0.5;
  }
  return sum / alpha.norm_const();
}

GaussPolyFunction catalog_function(const std::string& name) {
  if (name == "gaussian") return GaussPolyFunction({1.0}, 1.0);
  if (name == "x_gaussian") return GaussPolyFunction({0.0, 1.0}, 1.0);
  if (name == "cubic_gaussian") return GaussPolyFunction({1.0, 1.0, 0.0, 1.0}, 0.5);
  if (name == "zero") return GaussPolyFunction({}, 1.0);
  throw DomainError("unknown catalog function '" + name + "'");
}

}  // namespace dunkl
