#ifndef DUNKL_QUAD_HPP
#define DUNKL_QUAD_HPP

#include <atomic>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "dunkl/funcalg.hpp"
#include "dunkl/special.hpp"

namespace dunkl {

using RealFn = std::function<double(double)>;

/// Shared counters for integrals that did not meet their tolerance. Nested
/// evaluations record into the same sink so a caller can tell afterwards
/// whether anything deep inside a computation failed.
struct QuadDiagnostics {
  std::atomic<long> failures{0};
  std::atomic<long> integrals{0};
};

/// Tolerances and endpoint behaviour for one adaptive integral.
struct QuadSpec {
  double abs_tol = 1e-11;
  double rel_tol = 1e-9;
  int max_subdivisions = 2000;
  /// Exponent e of an integrable (z - a)^e singularity at the left end.
  std::optional<double> endpoint_exponent;
  /// Same for (b - z)^e at the right end.
  std::optional<double> right_exponent;
  /// Optional sink for convergence failures; not owned.
  QuadDiagnostics* diagnostics = nullptr;

  /// Throws DomainError unless tolerances are positive and exponents > -1.
  void validate() const;

  /// Spec for an inner integral of a nested computation: tolerances / 10
  /// (floored at 1e-15 absolute, 1e-13 relative), no endpoint exponents,
  /// same diagnostics sink.
  QuadSpec nested() const;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  long evals = 0;
  bool converged = true;

  QuadResult& operator+=(const QuadResult& o) {
    value += o.value;
    error += o.error;
    evals += o.evals;
    converged = converged && o.converged;
    return *this;
  }
};

/// Raised by callers that cannot continue after a non-converged integral.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, QuadResult partial)
      : std::runtime_error(what), partial_(partial) {}
  const QuadResult& partial() const noexcept { return partial_; }

 private:
  QuadResult partial_;
};

/**
 * Adaptive integral of f over [a, b].
 *
 * The interval is first split at the breakpoints that fall inside (a, b);
 * the piece with the largest error estimate is bisected until the total
 * error meets max(abs_tol, rel_tol |value|) or max_subdivisions is reached,
 * in which case converged is false and value holds the partial estimate.
 * Regular pieces use the 21-point Gauss-Kronrod pair. A piece touching an
 * endpoint with a declared exponent uses a Gauss-Jacobi pair with the power
 * weight extracted, so f itself is evaluated without the singular factor.
 */
QuadResult integrate(const RealFn& f, double a, double b, const QuadSpec& spec = {},
                     std::span<const double> breakpoints = {});

/// int_a^b f(z) (z-a)^exp_a (b-z)^exp_b dz adaptively; f must be smooth at
/// the ends.
QuadResult integrate_weighted(const RealFn& f, double a, double b, double exp_a,
                              double exp_b, const QuadSpec& spec = {},
                              std::span<const double> breakpoints = {});

/// Fixed n-point Gauss-Jacobi value of int_a^b f(z) (z-a)^exp_a (b-z)^exp_b dz.
double integrate_jacobi(const RealFn& f, double a, double b, double exp_a, double exp_b,
                        int n);

/// Nodes and weights on [-1, 1] for the weight (1+x)^left (1-x)^right.
struct JacobiRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Golub-Welsch rule, computed once per (n, left, right) and shared.
const JacobiRule& jacobi_rule(int n, double left, double right);

/// Gauss-Legendre rule of order n on [-1, 1].
const JacobiRule& legendre_rule(int n);

struct LpContext {
  AlphaParam alpha;
  double p = 2.0;
  /// Truncation radius; a nonpositive value means "use the function's support".
  double truncation_T = 0.0;
  QuadSpec quad;
};

struct NormResult {
  double value = 0.0;
  /// int over T < |x| < 1.5 T of |g|^p dmu, raised to 1/p.
  double tail = 0.0;
  /// tail^p / head^p (0 when both vanish).
  double tail_ratio = 0.0;
  double truncation = 0.0;
  bool converged = true;
};

/// (int_{-T}^{T} |g|^p dmu_alpha)^{1/p} with a tail estimate beyond T.
/// Breakpoints are folded to |x| and added to the partition.
NormResult lp_norm(const LpContext& ctx, const Evaluable& g,
                   std::span<const double> breakpoints = {});

/// Norm of an algebra element; rejects pure polynomials.
NormResult lp_norm(const LpContext& ctx, const GaussPolyFunction& g);

/// int_{-T}^{T} g dmu_alpha for a decaying evaluable.
QuadResult integrate_mu(const AlphaParam& alpha, const Evaluable& g,
                        const QuadSpec& spec = {},
                        std::span<const double> breakpoints = {});

}  // namespace dunkl

#endif  // DUNKL_QUAD_HPP
