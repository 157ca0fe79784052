#include "dunkl/quad.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <queue>
#include <tuple>

namespace dunkl {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// 21-point Kronrod abscissae (positive half, descending) with the embedded
// 10-point Gauss rule at the odd positions.
constexpr double kXgk[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr double kWgk[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr double kWg[5] = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr int kJacobiLow = 10;
constexpr int kJacobiHigh = 20;

struct Piece {
  double l;
  double r;
  double value;
  double error;
  // 50 eps int |g|: bisection cannot push the error below this.
  double floor;
};

struct PieceOrder {
  bool operator()(const Piece& a, const Piece& b) const { return a.error < b.error; }
};

bool is_regular_exponent(double e) {
  return e == 0.0 || (e > 0.0 && e == std::floor(e) && e < 64.0);
}

double ipow_or_pow(double base, double e) {
  if (e == 0.0) return 1.0;
  if (e == 1.0) return base;
  if (e == 2.0) return base * base;
  return std::pow(base, e);
}

struct Estimate {
  double value;
  double error;
  long evals;
  double floor = 0.0;
};

Estimate gauss_kronrod21(const RealFn& g, double l, double r) {
  const double centr = 0.5 * (l + r);
  const double hlgth = 0.5 * (r - l);
  const double fc = g(centr);
  double resg = 0.0;
  double resk = kWgk[10] * fc;
  double resabs = std::abs(resk);
  double fv1[10];
  double fv2[10];
  for (int j = 0; j < 10; ++j) {
    const double absc = hlgth * kXgk[j];
    fv1[j] = g(centr - absc);
    fv2[j] = g(centr + absc);
    const double fsum = fv1[j] + fv2[j];
    resk += kWgk[j] * fsum;
    resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
  }
  const double reskh = resk * 0.5;
  double resasc = kWgk[10] * std::abs(fc - reskh);
  for (int j = 0; j < 10; ++j) {
    resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  }
  const double result = resk * hlgth;
  resabs *= std::abs(hlgth);
  resasc *= std::abs(hlgth);
  double err = std::abs((resk - resg) * hlgth);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  double floor = 0.0;
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
    floor = 50.0 * kEps * resabs;
    err = std::max(err, floor);
  }
  return {result, err, 21, floor};
}

Estimate gauss_jacobi_pair(const RealFn& h, double l, double r, double el, double er) {
  const double half = 0.5 * (r - l);
  const double mid = 0.5 * (l + r);
  const double scale = std::pow(half, el + er + 1.0);
  auto apply = [&](const JacobiRule& rule, double* resabs) {
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double v = rule.weights[i] * h(mid + half * rule.nodes[i]);
      s += v;
      if (resabs) *resabs += std::abs(v);
    }
    return s * scale;
  };
  double resabs = 0.0;
  const double lo = apply(jacobi_rule(kJacobiLow, el, er), nullptr);
  const double hi = apply(jacobi_rule(kJacobiHigh, el, er), &resabs);
  resabs *= std::abs(scale);
  const double floor = 50.0 * kEps * resabs;
  return {hi, std::max(std::abs(hi - lo), floor), kJacobiLow + kJacobiHigh, floor};
}

}  // namespace

void QuadSpec::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw DomainError("quadrature tolerances must be positive");
  }
  if (max_subdivisions < 1) throw DomainError("max_subdivisions must be >= 1");
  if (endpoint_exponent && !(*endpoint_exponent > -1.0)) {
    throw DomainError("endpoint exponent must be > -1");
  }
  if (right_exponent && !(*right_exponent > -1.0)) {
    throw DomainError("endpoint exponent must be > -1");
  }
}

QuadSpec QuadSpec::nested() const {
  QuadSpec s;
  s.abs_tol = std::max(abs_tol / 10.0, 1e-15);
  s.rel_tol = std::max(rel_tol / 10.0, 1e-13);
  s.max_subdivisions = max_subdivisions;
  s.diagnostics = diagnostics;
  return s;
}

const JacobiRule& jacobi_rule(int n, double left, double right) {
  if (n < 1) throw DomainError("jacobi_rule: n must be positive");
  if (!(left > -1.0) || !(right > -1.0)) {
    throw DomainError("jacobi_rule: exponents must be > -1");
  }
  static std::mutex mutex;
  static std::map<std::tuple<int, double, double>, std::unique_ptr<JacobiRule>> cache;
  const std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_tuple(n, left, right);
  if (auto it = cache.find(key); it != cache.end()) return *it->second;

  // Monic recurrence for (1-x)^a (1+x)^b.
  const double a = right;
  const double b = left;
  const double ab = a + b;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd off(std::max(n - 1, 0));
  diag(0) = (b - a) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double t = 2.0 * k + ab;
    diag(k) = (b * b - a * a) / (t * (t + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double t = 2.0 * k + ab;
    double beta;
    if (k == 1) {
      beta = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      beta = 4.0 * k * (k + a) * (k + b) * (k + ab) / (t * t * (t + 1.0) * (t - 1.0));
    }
    off(k - 1) = std::sqrt(beta);
  }
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) +
                              std::lgamma(b + 1.0) - std::lgamma(ab + 2.0));
  auto rule = std::make_unique<JacobiRule>();
  rule->nodes.resize(n);
  rule->weights.resize(n);
  if (n == 1) {
    rule->nodes[0] = diag(0);
    rule->weights[0] = mu0;
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, off, Eigen::ComputeEigenvectors);
    for (int i = 0; i < n; ++i) {
      rule->nodes[i] = solver.eigenvalues()(i);
      const double v0 = solver.eigenvectors()(0, i);
      rule->weights[i] = mu0 * v0 * v0;
    }
  }
  auto& stored = cache[key];
  stored = std::move(rule);
  return *stored;
}

const JacobiRule& legendre_rule(int n) { return jacobi_rule(n, 0.0, 0.0); }

double integrate_jacobi(const RealFn& f, double a, double b, double exp_a, double exp_b,
                        int n) {
  if (!(exp_a > -1.0) || !(exp_b > -1.0)) {
    throw DomainError("integrate_jacobi: exponents must be > -1");
  }
  if (!(a < b)) throw DomainError("integrate_jacobi: need a < b");
  const JacobiRule& rule = jacobi_rule(n, exp_a, exp_b);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    s += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return s * std::pow(half, exp_a + exp_b + 1.0);
}

QuadResult integrate_weighted(const RealFn& f, double a, double b, double exp_a,
                              double exp_b, const QuadSpec& spec,
                              std::span<const double> breakpoints) {
  spec.validate();
  if (!(exp_a > -1.0) || !(exp_b > -1.0)) {
    throw DomainError("integrate_weighted: exponents must be > -1");
  }
  if (a == b) return {};
  if (!(a < b)) throw DomainError("integrate: need a < b");

  const bool sing_a = !is_regular_exponent(exp_a);
  const bool sing_b = !is_regular_exponent(exp_b);

  // Full integrand on pieces that touch no singular end.
  const RealFn regular = [&](double z) {
    double v = f(z);
    if (v == 0.0) return 0.0;
    if (exp_a != 0.0) v *= ipow_or_pow(z - a, exp_a);
    if (exp_b != 0.0) v *= ipow_or_pow(b - z, exp_b);
    return v;
  };
  const RealFn left_smooth = [&](double z) {
    double v = f(z);
    if (v == 0.0) return 0.0;
    if (exp_b != 0.0) v *= ipow_or_pow(b - z, exp_b);
    return v;
  };
  const RealFn right_smooth = [&](double z) {
    double v = f(z);
    if (v == 0.0) return 0.0;
    if (exp_a != 0.0) v *= ipow_or_pow(z - a, exp_a);
    return v;
  };

  long evals = 0;
  auto evaluate = [&](double l, double r) -> Piece {
    const bool at_a = sing_a && l == a;
    const bool at_b = sing_b && r == b;
    Estimate e;
    if (at_a && at_b) {
      e = gauss_jacobi_pair(f, l, r, exp_a, exp_b);
    } else if (at_a) {
      e = gauss_jacobi_pair(left_smooth, l, r, exp_a, 0.0);
    } else if (at_b) {
      e = gauss_jacobi_pair(right_smooth, l, r, 0.0, exp_b);
    } else {
      e = gauss_kronrod21(regular, l, r);
    }
    evals += e.evals;
    return {l, r, e.value, e.error, e.floor};
  };

  std::vector<double> cuts{a};
  for (double p : breakpoints) {
    if (p > a && p < b && std::isfinite(p)) cuts.push_back(p);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::priority_queue<Piece, std::vector<Piece>, PieceOrder> heap;
  std::vector<Piece> done;
  double total = 0.0;
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Piece p = evaluate(cuts[i], cuts[i + 1]);
    total += p.value;
    total_err += p.error;
    heap.push(p);
  }

  int subdivisions = static_cast<int>(cuts.size()) - 1;
  // Error held by pieces already at their roundoff floor.
  double roundoff_err = 0.0;
  auto tolerance = [&] { return std::max(spec.abs_tol, spec.rel_tol * std::abs(total)); };
  while (total_err - roundoff_err > tolerance() && !heap.empty()) {
    Piece worst = heap.top();
    if (worst.error <= worst.floor) {
      heap.pop();
      done.push_back(worst);
      roundoff_err += worst.error;
      continue;
    }
    if (subdivisions >= spec.max_subdivisions) break;
    const double mid = 0.5 * (worst.l + worst.r);
    if (!(mid > worst.l && mid < worst.r) ||
        worst.r - worst.l <= 64.0 * kEps * std::max(std::abs(worst.l), std::abs(worst.r))) {
      // Cannot bisect further; keep it as final and look at the rest.
      heap.pop();
      done.push_back(worst);
      continue;
    }
    heap.pop();
    const Piece left = evaluate(worst.l, mid);
    const Piece right = evaluate(mid, worst.r);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++subdivisions;
  }
  const bool converged = total_err - roundoff_err <= tolerance();

  while (!heap.empty()) {
    done.push_back(heap.top());
    heap.pop();
  }
  std::sort(done.begin(), done.end(),
            [](const Piece& x, const Piece& y) { return x.l < y.l; });
  QuadResult out;
  for (const Piece& p : done) {
    out.value += p.value;
    out.error += p.error;
  }
  out.evals = evals;
  out.converged = converged;
  if (spec.diagnostics) {
    spec.diagnostics->integrals.fetch_add(1, std::memory_order_relaxed);
    if (!converged) spec.diagnostics->failures.fetch_add(1, std::memory_order_relaxed);
  }
  return out;
}

QuadResult integrate(const RealFn& f, double a, double b, const QuadSpec& spec,
                     std::span<const double> breakpoints) {
  if (b < a) {
    QuadResult r = integrate(f, b, a, spec, breakpoints);
    r.value = -r.value;
    return r;
  }
  return integrate_weighted(f, a, b, spec.endpoint_exponent.value_or(0.0),
                            spec.right_exponent.value_or(0.0), spec, breakpoints);
}

namespace {

double resolve_truncation(double requested, double support) {
  const double T = requested > 0.0 ? requested : support;
  if (!std::isfinite(T) || !(T > 0.0)) {
    throw DomainError("function is not normable: no finite truncation radius");
  }
  return T;
}

std::vector<double> fold(std::span<const double> breakpoints, double T) {
  std::vector<double> out;
  for (double p : breakpoints) {
    const double q = std::abs(p);
    if (q > 0.0 && q < T) out.push_back(q);
  }
  return out;
}

}  // namespace

NormResult lp_norm(const LpContext& ctx, const Evaluable& g,
                   std::span<const double> breakpoints) {
  if (!(ctx.p >= 1.0) || !std::isfinite(ctx.p)) {
    throw DomainError("lp_norm: p must be finite and >= 1");
  }
  const double T = resolve_truncation(ctx.truncation_T, g.support);
  const double p = ctx.p;
  auto power = [p](double v) {
    v = std::abs(v);
    if (p == 1.0) return v;
    if (p == 2.0) return v * v;
    return std::pow(v, p);
  };
  const RealFn folded = [&](double x) { return power(g(x)) + power(g(-x)); };
  const double e = ctx.alpha.weight_exp();
  const double M = ctx.alpha.norm_const();
  const std::vector<double> cuts = fold(breakpoints, T);

  QuadSpec spec = ctx.quad;
  spec.endpoint_exponent.reset();
  spec.right_exponent.reset();
  spec.abs_tol = std::max(std::pow(spec.abs_tol, p), 1e-300) * M;
  const QuadResult head = integrate_weighted(folded, 0.0, T, e, 0.0, spec, cuts);
  const RealFn tail_fn = [&](double x) { return folded(x) * std::pow(x, e); };
  QuadSpec tail_spec = spec;
  tail_spec.max_subdivisions = 200;
  const QuadResult tail = integrate(tail_fn, T, 1.5 * T, tail_spec);

  NormResult out;
  const double head_v = std::max(head.value, 0.0) / M;
  const double tail_v = std::max(tail.value, 0.0) / M;
  out.value = std::pow(head_v, 1.0 / p);
  out.tail = std::pow(tail_v, 1.0 / p);
  out.tail_ratio = head_v > 0.0 ? tail_v / head_v : (tail_v > 0.0 ? 1.0 : 0.0);
  out.truncation = T;
  out.converged = head.converged;
  return out;
}

NormResult lp_norm(const LpContext& ctx, const GaussPolyFunction& g) {
  if (!g.normable()) throw DomainError("lp_norm: pure polynomials are not normable");
  if (g.is_zero()) {
    NormResult z;
    z.truncation = ctx.truncation_T > 0.0 ? ctx.truncation_T : g.support_hint();
    return z;
  }
  return lp_norm(ctx, g.evaluable());
}

QuadResult integrate_mu(const AlphaParam& alpha, const Evaluable& g, const QuadSpec& spec,
                        std::span<const double> breakpoints) {
  const double T = resolve_truncation(0.0, g.support);
  const RealFn folded = [&](double x) { return g(x) + g(-x); };
  QuadSpec s = spec;
  s.endpoint_exponent.reset();
  s.right_exponent.reset();
  QuadResult r = integrate_weighted(folded, 0.0, T, alpha.weight_exp(), 0.0, s,
                                    fold(breakpoints, T));
  r.value /= alpha.norm_const();
  r.error /= alpha.norm_const();
  return r;
}

}  // namespace dunkl
