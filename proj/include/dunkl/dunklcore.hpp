#ifndef DUNKL_DUNKLCORE_HPP
#define DUNKL_DUNKLCORE_HPP

#include <complex>
#include <limits>

#include "dunkl/funcalg.hpp"
#include "dunkl/quad.hpp"
#include "dunkl/special.hpp"

namespace dunkl {

/// Which of the three shapes the translation measure gamma_{x,y} takes.
enum class MeasureKind { density, point_mass_x, point_mass_y };

/**
 * gamma_{x,y}: a density W(x,y,.) dmu on S u (-S) with
 * S = [ ||x|-|y||, |x|+|y| ], or a unit point mass when x or y vanishes.
 */
struct TranslationMeasure {
  double x = 0.0;
  double y = 0.0;
  MeasureKind kind = MeasureKind::density;
  double inner = 0.0;  // ||x| - |y||
  double outer = 0.0;  // |x| + |y|

  static TranslationMeasure make(double x, double y);
  bool in_support(double z) const;
};

/// The translation density W_alpha(x, y, z) for x, y != 0. Zero outside
/// S u (-S); z = 0 is a null set and returns 0.
double w_kernel(const AlphaParam& alpha, double x, double y, double z);

/// Masses of gamma_{x,y} on S and on -S. W has one sign on each branch, so
/// the total variation is |positive| + |negative|.
struct KernelMass {
  double branch_plus = 0.0;
  double branch_minus = 0.0;
  double total_variation = 0.0;
  bool converged = true;
};

KernelMass kernel_mass(const AlphaParam& alpha, double x, double y,
                       const QuadSpec& spec = {});

/**
 * A function given by its even part and its odd part divided by x, both
 * as functions of x. Translation only ever samples f at +-z, and f_odd(z)/z
 * stays smooth at z = 0, so this is the form the integrator wants.
 */
struct ParityParts {
  RealFn even;
  RealFn odd_over_x;
  double support = std::numeric_limits<double>::infinity();

  double operator()(double x) const { return even(x) + x * odd_over_x(x); }
};

ParityParts parity_parts(const Evaluable& f);
/// Exact split for an algebra element.
ParityParts parity_parts(const GaussPolyFunction& f);

/**
 * tau_x f(y) = int f dgamma_{x,y}.
 *
 * Integrates over t in [-1, 1] with z = sqrt(x^2 + y^2 - 2xyt):
 *   c_alpha int [f_e(z) + (x+y) f_o(z)/z] (1-t)^{alpha+1/2} (1+t)^{alpha-1/2} dt,
 * c_alpha = Gamma(alpha+1) / (sqrt(pi) Gamma(alpha+1/2)). This is the density
 * form folded onto one variable; both Jacobi ends are extracted.
 */
QuadResult translate(const AlphaParam& alpha, const ParityParts& f, double x, double y,
                     const QuadSpec& spec = {});
QuadResult translate(const AlphaParam& alpha, const Evaluable& f, double x, double y,
                     const QuadSpec& spec = {});
QuadResult translate(const AlphaParam& alpha, const GaussPolyFunction& f, double x,
                     double y, const QuadSpec& spec = {});

/// tau_x f(y) by integrating f W dmu over S and -S separately, with the
/// endpoint weights of each branch extracted. Slower; used as a cross-check.
QuadResult translate_by_density(const AlphaParam& alpha, const Evaluable& f, double x,
                                double y, const QuadSpec& spec = {});

/// int E_alpha(i t z) dgamma_{x,y}(z).
std::complex<double> translate_kernel(const AlphaParam& alpha, double t, double x,
                                      double y, const QuadSpec& spec = {});

/// y -> tau_x f(y), with support |x| + support(f).
Evaluable translated(const AlphaParam& alpha, const Evaluable& f, double x,
                     const QuadSpec& spec = {});
Evaluable translated(const AlphaParam& alpha, const GaussPolyFunction& f, double x,
                     const QuadSpec& spec = {});

enum class ConvolutionOrder {
  /// int tau_x f(-y) g(y) dmu(y) exactly as written.
  literal,
  /// Swap the factors (the product is commutative) so that the one with the
  /// smaller support is integrated against.
  narrow_outer,
};

/// (f * g)(x) = int tau_x f(-y) g(y) dmu(y). Inner translations run with
/// spec.nested().
QuadResult convolve(const AlphaParam& alpha, const Evaluable& f, const Evaluable& g,
                    double x, const QuadSpec& spec = {},
                    ConvolutionOrder order = ConvolutionOrder::literal);

/// x -> (f * g)(x), with support support(f) + support(g).
Evaluable convolved(const AlphaParam& alpha, const Evaluable& f, const Evaluable& g,
                    const QuadSpec& spec = {},
                    ConvolutionOrder order = ConvolutionOrder::literal);

/**
 * f * g in closed form for decaying algebra elements. Each factor is written
 * as P(Lambda) e^{-s x^2}; the Gaussians convolve to
 * (2(a+b))^{-(alpha+1)} e^{-ab/(a+b) x^2} and Lambda commutes with *.
 */
GaussPolyFunction convolved_exact(const AlphaParam& alpha, const GaussPolyFunction& f,
                                  const GaussPolyFunction& g);

/// F f(xi) = int f(y) E_alpha(-i xi y) dmu(y). The real part comes from the
/// even part of f against j_alpha, the imaginary part from the odd part.
std::complex<double> dunkl_transform(const AlphaParam& alpha, const Evaluable& f,
                                     double xi, const QuadSpec& spec = {});

/// Largest pairwise gap among tau_t(f*h)(x), (tau_t f * h)(x), (f * tau_t h)(x).
double translate_convolution_commutes(const AlphaParam& alpha, const Evaluable& f,
                                      const Evaluable& h, double t, double x,
                                      const QuadSpec& spec = {});

}  // namespace dunkl

#endif  // DUNKL_DUNKLCORE_HPP
