#ifndef DUNKL_TAYLOR_HPP
#define DUNKL_TAYLOR_HPP

#include <memory>
#include <span>
#include <vector>

#include "dunkl/dunklcore.hpp"
#include "dunkl/funcalg.hpp"
#include "dunkl/quad.hpp"
#include "dunkl/special.hpp"

namespace dunkl {

/// Taylor coefficient b_p(x):
///   b_{2m}(x)   = (x/2)^{2m}   / ((alpha+1)_m m!)
///   b_{2m+1}(x) = (x/2)^{2m+1} / ((alpha+1)_{m+1} m!)
double b_coeff(const AlphaParam& alpha, int p, double x);

/// b_p as a pure polynomial in the algebra.
GaussPolyFunction b_polynomial(const AlphaParam& alpha, int p);

enum class ThetaMode { automatic, symbolic, numeric };

/**
 * One term  coef * |x|^{a_exp} * |y|^{r_exp} * sgn(x)^{odd_in_x}  of the
 * power-term expansion of the Taylor kernel.
 */
struct PowerTerm {
  double coef = 0.0;
  double a_exp = 0.0;
  double r_exp = 0.0;
  bool odd_in_x = false;
};

class ThetaAtX;

/**
 * The order-k Taylor kernel Theta_k(x, y), |y| <= |x|.
 *
 * With a = |x|, r = |y| and e = 2 alpha + 1 the recursion reads
 *   U_0 = sgn(x) / (2 a^e),        W_0 = 1/2,
 *   U_j(r) = int_r^a W_{j-1}(z) z^{-e} dz,
 *   W_j(r) = int_r^a U_{j-1}(z) z^{e} dz,
 *   Theta_k(x, y) = U_k(r) + sgn(y) W_k(r) r^{-e},
 * so Theta_k A(y) = U_k(r) r^e + sgn(y) W_k(r) is the bounded combination.
 *
 * Symbolic mode keeps U_k and W_k as power-term tables (independent of x).
 * Each antiderivative of z^q divides by q+1; when some q equals -1 the
 * parameter is resonant, symbolic mode refuses it and the automatic mode
 * switches to numeric. Numeric mode tabulates U_j, W_j per x on the graded
 * pieces [a 2^{-p-1}, a 2^{-p}] with Chebyshev interpolation.
 */
class ThetaKernel {
 public:
  ThetaKernel(const AlphaParam& alpha, int order, ThetaMode mode = ThetaMode::automatic);

  /// True when the symbolic recursion hits an exponent within tol of -1.
  static bool is_resonant(const AlphaParam& alpha, int order, double tol = 0.0);

  const AlphaParam& alpha() const noexcept { return data_->alpha; }
  int order() const noexcept { return data_->order; }
  /// symbolic or numeric, after resolving automatic.
  ThetaMode mode() const noexcept { return data_->mode; }

  /// Term tables of U_k and W_k; empty in numeric mode.
  const std::vector<PowerTerm>& u_terms() const noexcept { return data_->u; }
  const std::vector<PowerTerm>& w_terms() const noexcept { return data_->w; }

  /// Bind to x != 0. In numeric mode this builds the per-x tables.
  ThetaAtX at(double x) const;

  /// Theta_k(x, y); convenience wrapper around at(x).
  double operator()(double x, double y) const;

  struct Data {
    AlphaParam alpha;
    int order;
    ThetaMode mode;
    std::vector<PowerTerm> u;
    std::vector<PowerTerm> w;
  };

 private:
  std::shared_ptr<const Data> data_;
};

/// Theta_k(x, .) for one fixed x.
class ThetaAtX {
 public:
  /// U_k(r) r^e and W_k(r) at r = |y|: Theta A = ua + sgn(y) w.
  struct Parts {
    double ua = 0.0;
    double w = 0.0;
  };

  double x() const noexcept { return x_; }
  Parts parts(double r) const;
  /// Theta_k(x, y) for 0 < |y| <= |x|.
  double value(double y) const;
  /// Theta_k(x, y) A(y); finite at y = 0.
  double weighted(double y) const;

  /// int_{-|x|}^{|x|} Theta_k(x, y) h(y) A(y) dy. Breakpoints are |y| values.
  QuadResult integrate(const RealFn& h, const QuadSpec& spec = {},
                       std::span<const double> breakpoints = {}) const;

  /// int_{-|x|}^{|x|} |Theta_k(x, y)| A(y) dy.
  QuadResult abs_mass(const QuadSpec& spec = {}) const;

  struct Table;

 private:
  friend class ThetaKernel;
  ThetaAtX(std::shared_ptr<const ThetaKernel::Data> data, double x);

  std::shared_ptr<const ThetaKernel::Data> data_;
  double x_;
  double a_;
  double s_;
  std::shared_ptr<const Table> table_;
};

/// int |Theta_{k-1}(x, y)| A(y) dy over [-|x|, |x|]; k >= 1.
double theta_mass(const AlphaParam& alpha, int k, double x, const QuadSpec& spec = {});

/// int Theta_0(x, y) b_p(y) A(y) dy over [-|x|, |x|]; equals b_{p+1}(x).
double theta0_moment(const AlphaParam& alpha, int p, double x, const QuadSpec& spec = {});

enum class RemainderMode {
  /// int Theta_{k-1}(x, y) tau_y(Lambda^k f)(a) A(y) dy
  integral,
  /// tau_x f(a) - sum_{p<k} b_p(x) Lambda^p f(a)
  recurrence,
};

/**
 * R_k(x, f) for one algebra element, order and evaluation mode. Holds
 * Lambda^p f for p <= k and the kernel Theta_{k-1}, so repeated
 * evaluations at many (x, a) share the setup.
 */
class Remainder {
 public:
  Remainder(const AlphaParam& alpha, int k, const GaussPolyFunction& f,
            RemainderMode mode, const QuadSpec& spec = {},
            ThetaMode theta_mode = ThetaMode::automatic);

  int order() const noexcept { return k_; }
  RemainderMode mode() const noexcept { return mode_; }

  /// R_k(x, f)(a); R_k(0, f) = 0.
  QuadResult at(double x, double a) const;

  /// a -> R_k(x, f)(a), with support |x| + support(f).
  Evaluable function(double x) const;

  /// Points in a where R_k(x, f) may change character: |x| +- support(f).
  std::vector<double> breakpoints(double x) const;

  /// sum_{p<k} b_p(x) Lambda^p f as an algebra element.
  GaussPolyFunction taylor_polynomial(double x) const;

 private:
  QuadResult integral_at(const ThetaAtX& theta, double a) const;

  AlphaParam alpha_;
  int k_;
  RemainderMode mode_;
  QuadSpec spec_;
  GaussPolyFunction f_;
  std::vector<GaussPolyFunction> powers_;  // Lambda^p f, p = 0..k
  ParityParts top_parts_;                  // parts of Lambda^k f
  ParityParts f_parts_;
  ThetaKernel theta_;
};

/// R_k(x, f)(a) in the given mode.
QuadResult remainder(const AlphaParam& alpha, int k, const GaussPolyFunction& f, double x,
                     double a, RemainderMode mode, const QuadSpec& spec = {});

/// |tau_x f(a) - sum_{p<k} b_p(x) Lambda^p f(a) - R_k(x, f)(a)| with the
/// integral form of R_k.
double taylor_identity_residual(const AlphaParam& alpha, int k, const GaussPolyFunction& f,
                                double x, double a, const QuadSpec& spec = {});

/// |R_k(x, f)(a) - int Theta_0(x, y) R_{k-1}(y, Lambda f)(a) A(y) dy|.
double remainder_recursion_residual(const AlphaParam& alpha, int k,
                                    const GaussPolyFunction& f, double x, double a,
                                    const QuadSpec& spec = {});

/// I_1(x, f)(a) = int Theta_0(x, y) tau_y f(a) A(y) dy and
/// I_k(x, f)(a) = int Theta_0(x, y) I_{k-1}(y, f)(a) A(y) dy. Refuses k > 4.
double iterated_integral_I(const AlphaParam& alpha, int k, const GaussPolyFunction& f,
                           double x, double a, const QuadSpec& spec = {});

/// The common value of R_k(x,f)(a) + R_k(-x,f)(a) and
/// tau_x f(a) + tau_{-x} f(a) - 2 sum_i b_{2i}(x) Lambda^{2i} f(a).
struct SymmetricRemainder {
  double remainder_sum = 0.0;
  double closed_form = 0.0;
  double residual() const;
};

SymmetricRemainder symmetric_remainder(const AlphaParam& alpha, int k,
                                       const GaussPolyFunction& f, double x, double a,
                                       const QuadSpec& spec = {});

/**
 * Lambda^order F(a), order 1 or 2, from five-point central differences with
 * step h at a and -a plus the exact reflection term. Requires |a| > 2h.
 */
double dunkl_fd(const AlphaParam& alpha, const RealFn& F, double a, int order,
                double h = 1e-3);

}  // namespace dunkl

#endif  // DUNKL_TAYLOR_HPP
