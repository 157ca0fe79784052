#ifndef DUNKL_BESOV_HPP
#define DUNKL_BESOV_HPP

#include <span>
#include <string>
#include <vector>

#include "dunkl/funcalg.hpp"
#include "dunkl/quad.hpp"
#include "dunkl/report.hpp"
#include "dunkl/special.hpp"

namespace dunkl {

/// n points per decade from lo to hi inclusive, log-spaced.
std::vector<double> log_grid(double lo, double hi, int per_decade);

struct BesovParams {
  AlphaParam alpha{0.5};
  int k = 1;
  double p = 2.0;
  /// Infinity selects the supremum form.
  double q = 1.0;
  double beta = 0.5;
  std::vector<double> x_grid = log_grid(1e-3, 1e2, 25);
  std::vector<double> t_grid = log_grid(1e-3, 1e2, 25);
  /// Order n0 of the test function phi; 0 picks floor((k-1)/2) + 1.
  int phi_order = 0;
  /// Truncation radius of the L^p norms; 0 uses each function's support.
  double truncation = 0.0;
  /// Tolerances for the outer L^p integrals, at the scale of the norm.
  QuadSpec norm_quad = default_norm_quad();
  /// Tolerances for translations and kernel integrals inside the norms.
  QuadSpec inner_quad = default_inner_quad();
  /// f * phi_t in closed form; false runs the nested quadrature instead.
  bool exact_convolution = true;
  /// Skip the f0 integral of the split bound when its cheap part already
  /// reaches 99% of min(keep, move).
  bool prune_split = true;
  int threads = 1;

  static QuadSpec default_norm_quad();
  static QuadSpec default_inner_quad();

  /// Throws DomainError: 0 < beta < 1, p >= 1 finite, q >= 1, k >= 1, grids
  /// positive, strictly increasing and spanning at least three decades.
  void validate() const;
  int effective_phi_order() const;
  double exponent() const { return beta + k - 1; }
};

/// ||R_k(y, f)||_{p,alpha}.
double remainder_norm(const BesovParams& params, const GaussPolyFunction& f, double y);

/// sup over y = +-x 10^{-j/5}, j = 0..8, of ||R_k(y, f)||.
double omega(const BesovParams& params, const GaussPolyFunction& f, double x);

/// ||R_k(x, f) + R_k(-x, f)||_{p,alpha}.
double omega_tilde(const BesovParams& params, const GaussPolyFunction& f, double x);

/// The three admissible splittings f = f0 + f1 behind the K-functional bound.
struct KUpper {
  /// f0 = f: ||Lambda^{k-1} f||.
  double keep = 0.0;
  /// f1 = f: x ||Lambda^k f||.
  double move = 0.0;
  /// f1 = I_k(x, f) / b_k(x), f0 = f - f1.
  double split = 0.0;
  /// split holds only x ||R_k(x, f)|| / |b_k(x)|, which is within 1% of
  /// min(keep, move) or above it; the f0 norm was not computed.
  bool split_partial = false;
  double value() const;
};

KUpper k_functional_upper(const BesovParams& params, const GaussPolyFunction& f, double x);

/// ||f * phi_t||_{p,alpha}.
double conv_norm(const BesovParams& params, const GaussPolyFunction& f,
                 const GaussPolyFunction& phi, double t);

/// ||f * phi_t|| / t^{beta + k - 1}.
double conv_seminorm_integrand(const BesovParams& params, const GaussPolyFunction& f,
                               const GaussPolyFunction& phi, double t);

enum class SeminormKind { B, B_tilde, K, C };

std::string to_string(SeminormKind kind);

struct SeminormEstimate {
  SeminormKind kind = SeminormKind::B;
  /// (int F^q dx/x)^{1/q} by the log trapezoid rule, or max F for q = inf,
  /// with F = m(x) / x^{exponent}.
  double value = 0.0;
  bool diverging = false;
  double left_slope = 0.0;
  double right_slope = 0.0;
  std::vector<double> grid;
  std::vector<double> integrand;
};

/// Seminorm from sampled m(x) on a grid; `exponent` is beta + k - 1 for
/// B, B_tilde and C, beta for K.
SeminormEstimate seminorm_from_samples(SeminormKind kind, std::span<const double> grid,
                                       std::span<const double> values, double exponent,
                                       double q);

SeminormEstimate seminorm(const BesovParams& params, const GaussPolyFunction& f,
                          SeminormKind kind);

/// Least-squares slope of log m against log x over points with x in
/// [lo, hi] and m > 0. Throws DomainError with fewer than 4 such points.
double slope_estimate(std::span<const double> xs, std::span<const double> ms, double lo,
                      double hi);

/// Everything the equivalence checks need, sampled on the grids.
struct BesovProfile {
  std::vector<double> x_grid;
  /// Running supremum: at x_i, the max over all sampled |y| <= x_i.
  std::vector<double> omega;
  /// The local 18-point value at each x_i alone.
  std::vector<double> omega_local;
  std::vector<double> omega_tilde;
  std::vector<KUpper> k_upper;
  std::vector<double> t_grid;
  std::vector<double> conv_norm;
  int phi_order = 1;
  long quadrature_failures = 0;
};

BesovProfile besov_profile(const BesovParams& params, const GaussPolyFunction& f);

/**
 * Seminorms, sandwich ratios and convolution diagnostics for one parameter
 * set. Computes the profile unless one is passed in.
 */
VerificationReport equivalence_report(const BesovParams& params, const GaussPolyFunction& f,
                                      const BesovProfile* profile = nullptr);

/// Small-end log-log slopes of omega in x and of ||f * phi_t|| in t.
VerificationReport scaling_report(const BesovParams& params, const GaussPolyFunction& f,
                                  const BesovProfile* profile = nullptr);

}  // namespace dunkl

#endif  // DUNKL_BESOV_HPP
