#include "dunkl/besov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numeric>

#include "dunkl/dunklcore.hpp"
#include "dunkl/parallel.hpp"
#include "dunkl/taylor.hpp"

namespace dunkl {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Points per magnitude of the local y-grid: |y| = x 10^{-j/5}, j < 9.
constexpr int kOmegaMagnitudes = 9;

// Below this |b_k(y)| the recurrence form cancels to roundoff and the
// integral form takes over.
constexpr double kRecurrenceFloor = 1e-8;

// The split bound is evaluated only when it could undercut min(keep, move)
// by more than this fraction.
constexpr double kSplitMargin = 0.01;

bool strictly_increasing_positive(const std::vector<double>& g) {
  if (g.empty() || !(g.front() > 0.0)) return false;
  for (std::size_t i = 1; i < g.size(); ++i) {
    if (!(g[i] > g[i - 1])) return false;
  }
  return std::isfinite(g.back());
}

double trapezoid_log(std::span<const double> grid, std::span<const double> vals) {
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    acc += 0.5 * (vals[i] + vals[i + 1]) * std::log(grid[i + 1] / grid[i]);
  }
  return acc;
}

bool in_window(double x, double lo, double hi) {
  return x >= lo * (1.0 - 1e-9) && x <= hi * (1.0 + 1e-9);
}

nlohmann::ordered_json function_record(const GaussPolyFunction& f) {
  return {{"coeffs", f.coeffs()}, {"gauss_scale", f.gauss_scale()}};
}

// Shared state for all evaluations with one (params, f).
class Engine {
 public:
  Engine(const BesovParams& params, const GaussPolyFunction& f, QuadDiagnostics* diag)
      : P_(params),
        f_(f),
        inner_(with_sink(params.inner_quad, diag)),
        ctx_{params.alpha, params.p, params.truncation, with_sink(params.norm_quad, diag)},
        rem_(params.alpha, params.k, f, RemainderMode::recurrence, inner_),
        rem_int_(params.alpha, params.k, f, RemainderMode::integral, inner_),
        theta0_(params.alpha, 0, ThetaMode::symbolic) {
    for (int p = 0; p <= params.k; ++p) {
      powers_.push_back(p == 0 ? f : dunkl_apply(params.alpha, powers_.back()));
    }
    T_ = f.support_hint();
  }

  bool trivial() const { return f_.is_zero(); }

  const Remainder& remainder_at_scale(double b) const {
    return std::abs(b) < kRecurrenceFloor ? rem_int_ : rem_;
  }

  double remainder_norm(double y) const {
    if (trivial() || y == 0.0) return 0.0;
    const Remainder& rem = remainder_at_scale(b_coeff(P_.alpha, P_.k, y));
    return lp_norm(ctx_, rem.function(y), rem.breakpoints(y)).value;
  }

  double omega_local(double x) const {
    double best = 0.0;
    for (int j = 0; j < kOmegaMagnitudes; ++j) {
      const double y = x * std::pow(10.0, -j / 5.0);
      best = std::max({best, remainder_norm(y), remainder_norm(-y)});
    }
    return best;
  }

  double omega_tilde(double x) const {
    if (trivial()) return 0.0;
    const double bps[] = {std::abs(x) + T_, std::abs(std::abs(x) - T_), T_};
    // R_k(x) + R_k(-x) starts at b_{2 n0}(x) Lambda^{2 n0} f.
    const int lead = P_.k % 2 == 0 ? P_.k : P_.k + 1;
    if (std::abs(b_coeff(P_.alpha, lead, x)) < kRecurrenceFloor) {
      const Remainder& rem = rem_int_;
      const Evaluable g{[&rem, x](double a) { return rem.at(x, a).value + rem.at(-x, a).value; },
                        std::abs(x) + T_};
      return lp_norm(ctx_, g, bps).value;
    }
    GaussPolyFunction poly({}, f_.gauss_scale(), f_.support_hint_field());
    for (int i = 0; 2 * i <= P_.k - 1; ++i) {
      poly = poly + (2.0 * b_coeff(P_.alpha, 2 * i, x)) * powers_[2 * i];
    }
    const ParityParts parts = parity_parts(f_);
    const AlphaParam alpha = P_.alpha;
    const QuadSpec spec = inner_;
    const Evaluable g{[=](double a) {
                        return translate(alpha, parts, x, a, spec).value +
                               translate(alpha, parts, -x, a, spec).value - poly(a);
                      },
                      std::abs(x) + T_};
    return lp_norm(ctx_, g, bps).value;
  }

  double keep_norm() const {
    if (trivial()) return 0.0;
    return lp_norm(ctx_, powers_[P_.k - 1]).value;
  }
  double top_norm() const {
    if (trivial()) return 0.0;
    return lp_norm(ctx_, powers_[P_.k]).value;
  }

  KUpper k_upper(double x, double keep, double top) const {
    KUpper out;
    out.keep = keep;
    out.move = x * top;
    if (trivial()) return out;
    const double bk = b_coeff(P_.alpha, P_.k, x);
    const double f1_part = x * remainder_norm(x) / std::abs(bk);
    if (P_.prune_split && f1_part >= (1.0 - kSplitMargin) * std::min(out.keep, out.move)) {
      out.split = f1_part;
      out.split_partial = true;
      return out;
    }
    const ThetaAtX th = theta0_.at(x);
    const Remainder& rem = rem_;
    const QuadSpec spec = inner_;
    const double T = T_;
    // Lambda^{k-1} f0 = -(1/b_k(x)) int Theta_0(x,y) R_k(y,f) A(y) dy.
    const Evaluable f0{[&rem, th, spec, T, bk](double a) {
                         const RealFn h = [&](double y) { return rem.at(y, a).value; };
                         const double cuts[] = {std::abs(a) + T, std::abs(std::abs(a) - T)};
                         return -th.integrate(h, spec, cuts).value / bk;
                       },
                       x + T_};
    const double bps[] = {x + T_, std::abs(x - T_), T_};
    const double f0_norm = lp_norm(ctx_, f0, bps).value;
    out.split = f0_norm + f1_part;
    return out;
  }

  double conv_norm(const GaussPolyFunction& phi, double t) const {
    if (trivial()) return 0.0;
    const GaussPolyFunction phit = dilate(P_.alpha, phi, t);
    if (P_.exact_convolution) return lp_norm(ctx_, convolved_exact(P_.alpha, f_, phit)).value;
    const Evaluable g =
        convolved(P_.alpha, f_.evaluable(), phit.evaluable(), inner_,
                  ConvolutionOrder::narrow_outer);
    return lp_norm(ctx_, g).value;
  }

 private:
  static QuadSpec with_sink(QuadSpec s, QuadDiagnostics* d) {
    if (d != nullptr) s.diagnostics = d;
    return s;
  }

  const BesovParams& P_;
  GaussPolyFunction f_;
  QuadSpec inner_;
  LpContext ctx_;
  Remainder rem_;
  Remainder rem_int_;
  ThetaKernel theta0_;
  std::vector<GaussPolyFunction> powers_;
  double T_ = 0.0;
};

GaussPolyFunction phi_for(const BesovParams& params) {
  return hermite_phi(params.alpha, params.effective_phi_order(), params.k);
}

}  // namespace

std::vector<double> log_grid(double lo, double hi, int per_decade) {
  if (!(lo > 0.0) || !(hi > lo) || per_decade < 1) {
    throw DomainError("log_grid: need 0 < lo < hi and a positive density");
  }
  const double l0 = std::log10(lo);
  const double decades = std::log10(hi) - l0;
  const int n = static_cast<int>(std::lround(decades * per_decade));
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) g.push_back(std::pow(10.0, l0 + static_cast<double>(i) / per_decade));
  return g;
}

QuadSpec BesovParams::default_norm_quad() {
  QuadSpec s;
  s.abs_tol = 1e-13;
  s.rel_tol = 1e-8;
  return s;
}

QuadSpec BesovParams::default_inner_quad() {
  QuadSpec s;
  s.abs_tol = 1e-15;
  s.rel_tol = 1e-12;
  return s;
}

void BesovParams::validate() const {
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("besov: beta must lie in (0, 1)");
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("besov: p must be finite and >= 1");
  if (!(q >= 1.0)) throw DomainError("besov: q must be >= 1");
  if (k < 1) throw DomainError("besov: k must be positive");
  if (!(truncation >= 0.0)) throw DomainError("besov: truncation must be nonnegative");
  if (phi_order != 0 && phi_order <= (k - 1) / 2) {
    throw DomainError("besov: phi order must exceed floor((k-1)/2)");
  }
  for (const auto* g : {&x_grid, &t_grid}) {
    if (!strictly_increasing_positive(*g)) {
      throw DomainError("besov: grids must be positive and strictly increasing");
    }
    if (g->back() / g->front() < 1e3 * (1.0 - 1e-9)) {
      throw DomainError("besov: grids must span at least three decades");
    }
  }
  norm_quad.validate();
  inner_quad.validate();
}

int BesovParams::effective_phi_order() const {
  return phi_order > 0 ? phi_order : (k - 1) / 2 + 1;
}

double KUpper::value() const { return std::min({keep, move, split}); }

double remainder_norm(const BesovParams& params, const GaussPolyFunction& f, double y) {
  return Engine(params, f, nullptr).remainder_norm(y);
}

double omega(const BesovParams& params, const GaussPolyFunction& f, double x) {
  if (!(x > 0.0)) throw DomainError("omega: x must be positive");
  return Engine(params, f, nullptr).omega_local(x);
}

double omega_tilde(const BesovParams& params, const GaussPolyFunction& f, double x) {
  if (!(x > 0.0)) throw DomainError("omega_tilde: x must be positive");
  return Engine(params, f, nullptr).omega_tilde(x);
}

KUpper k_functional_upper(const BesovParams& params, const GaussPolyFunction& f, double x) {
  if (!(x > 0.0)) throw DomainError("k_functional_upper: x must be positive");
  const Engine e(params, f, nullptr);
  return e.k_upper(x, e.keep_norm(), e.top_norm());
}

double conv_norm(const BesovParams& params, const GaussPolyFunction& f,
                 const GaussPolyFunction& phi, double t) {
  if (!(t > 0.0)) throw DomainError("conv_norm: t must be positive");
  return Engine(params, f, nullptr).conv_norm(phi, t);
}

double conv_seminorm_integrand(const BesovParams& params, const GaussPolyFunction& f,
                               const GaussPolyFunction& phi, double t) {
  return conv_norm(params, f, phi, t) / std::pow(t, params.exponent());
}

std::string to_string(SeminormKind kind) {
  switch (kind) {
    case SeminormKind::B:
      return "B";
    case SeminormKind::B_tilde:
      return "B_tilde";
    case SeminormKind::K:
      return "K";
    case SeminormKind::C:
      return "C";
  }
  return "B";
}

double slope_estimate(std::span<const double> xs, std::span<const double> ms, double lo,
                      double hi) {
  if (xs.size() != ms.size()) throw DomainError("slope_estimate: size mismatch");
  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] > 0.0 && ms[i] > 0.0 && std::isfinite(ms[i]) && in_window(xs[i], lo, hi)) {
      lx.push_back(std::log(xs[i]));
      ly.push_back(std::log(ms[i]));
    }
  }
  if (lx.size() < 4) throw DomainError("slope_estimate: fewer than 4 usable points");
  const double n = static_cast<double>(lx.size());
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n;
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  return sxy / sxx;
}

SeminormEstimate seminorm_from_samples(SeminormKind kind, std::span<const double> grid,
                                       std::span<const double> values, double exponent,
                                       double q) {
  if (grid.size() != values.size() || grid.size() < 2) {
    throw DomainError("seminorm: need matching grid and values");
  }
  SeminormEstimate s;
  s.kind = kind;
  s.grid.assign(grid.begin(), grid.end());
  s.integrand.resize(grid.size());
  bool all_zero = true;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    s.integrand[i] = values[i] / std::pow(grid[i], exponent);
    all_zero = all_zero && values[i] == 0.0;
  }
  if (all_zero) return s;
  const double decade = 10.0;
  try {
    s.left_slope = slope_estimate(grid, s.integrand, grid.front(), grid.front() * decade);
    s.right_slope = slope_estimate(grid, s.integrand, grid.back() / decade, grid.back());
    s.diverging = !(s.left_slope > 0.0 && s.right_slope < 0.0);
  } catch (const DomainError&) {
    s.diverging = true;
  }
  if (std::isinf(q)) {
    s.value = *std::max_element(s.integrand.begin(), s.integrand.end());
  } else {
    std::vector<double> powered(s.integrand.size());
    for (std::size_t i = 0; i < powered.size(); ++i) powered[i] = std::pow(s.integrand[i], q);
    s.value = std::pow(trapezoid_log(grid, powered), 1.0 / q);
  }
  return s;
}

BesovProfile besov_profile(const BesovParams& params, const GaussPolyFunction& f) {
  params.validate();
  QuadDiagnostics diag;
  const Engine e(params, f, &diag);
  BesovProfile out;
  out.x_grid = params.x_grid;
  out.t_grid = params.t_grid;
  out.phi_order = params.effective_phi_order();
  const std::size_t nx = params.x_grid.size();
  out.omega_local.resize(nx);
  out.omega_tilde.resize(nx);
  out.k_upper.resize(nx);
  const double keep = e.keep_norm();
  const double top = e.top_norm();
  // The local samples x_i 10^{-j/5} mostly fall on earlier grid points;
  // evaluate each distinct |y| once, for both signs.
  std::vector<double> mags;
  for (double x : params.x_grid) {
    for (int j = 0; j < kOmegaMagnitudes; ++j) mags.push_back(x * std::pow(10.0, -j / 5.0));
  }
  std::sort(mags.begin(), mags.end());
  std::vector<double> distinct;
  for (double m : mags) {
    if (distinct.empty() || m > distinct.back() * (1.0 + 1e-10)) distinct.push_back(m);
  }
  std::vector<double> norm_at(distinct.size());
  parallel_for(distinct.size(), params.threads, [&](std::size_t i) {
    norm_at[i] = std::max(e.remainder_norm(distinct[i]), e.remainder_norm(-distinct[i]));
  });
  auto lookup = [&](double m) {
    auto it = std::lower_bound(distinct.begin(), distinct.end(), m * (1.0 - 1e-10));
    return norm_at[static_cast<std::size_t>(it - distinct.begin())];
  };
  for (std::size_t i = 0; i < nx; ++i) {
    double best = 0.0;
    for (int j = 0; j < kOmegaMagnitudes; ++j) {
      best = std::max(best, lookup(params.x_grid[i] * std::pow(10.0, -j / 5.0)));
    }
    out.omega_local[i] = best;
  }
  parallel_for(nx, params.threads, [&](std::size_t i) {
    const double x = params.x_grid[i];
    out.omega_tilde[i] = e.omega_tilde(x);
    out.k_upper[i] = e.k_upper(x, keep, top);
  });
  out.omega.resize(nx);
  double running = 0.0;
  for (std::size_t i = 0; i < nx; ++i) {
    running = std::max(running, out.omega_local[i]);
    out.omega[i] = running;
  }
  const GaussPolyFunction phi = phi_for(params);
  out.conv_norm.resize(params.t_grid.size());
  parallel_for(params.t_grid.size(), params.threads, [&](std::size_t i) {
    out.conv_norm[i] = e.conv_norm(phi, params.t_grid[i]);
  });
  out.quadrature_failures = diag.failures.load();
  return out;
}

SeminormEstimate seminorm(const BesovParams& params, const GaussPolyFunction& f,
                          SeminormKind kind) {
  params.validate();
  const Engine e(params, f, nullptr);
  const auto& xs = kind == SeminormKind::C ? params.t_grid : params.x_grid;
  std::vector<double> vals(xs.size());
  const GaussPolyFunction phi = phi_for(params);
  const double keep = kind == SeminormKind::K ? e.keep_norm() : 0.0;
  const double top = kind == SeminormKind::K ? e.top_norm() : 0.0;
  parallel_for(xs.size(), params.threads, [&](std::size_t i) {
    switch (kind) {
      case SeminormKind::B:
        vals[i] = e.omega_local(xs[i]);
        break;
      case SeminormKind::B_tilde:
        vals[i] = e.omega_tilde(xs[i]);
        break;
      case SeminormKind::K:
        vals[i] = e.k_upper(xs[i], keep, top).value();
        break;
      case SeminormKind::C:
        vals[i] = e.conv_norm(phi, xs[i]);
        break;
    }
  });
  if (kind == SeminormKind::B) {
    for (std::size_t i = 1; i < vals.size(); ++i) vals[i] = std::max(vals[i], vals[i - 1]);
  }
  const double exponent = kind == SeminormKind::K ? params.beta : params.exponent();
  return seminorm_from_samples(kind, xs, vals, exponent, params.q);
}

namespace {

struct Window {
  double lo;
  double hi;
};

constexpr Window kCentral{1e-2, 1.0};
constexpr Window kSmall{1e-2, 1e-1};

// max_i (num_i / den_i) over grid points inside the window, skipping 0/0.
double max_ratio(std::span<const double> grid, std::span<const double> num,
                 std::span<const double> den, Window w = {0.0, kInf}) {
  double best = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!in_window(grid[i], w.lo, w.hi)) continue;
    if (num[i] == 0.0 && den[i] == 0.0) continue;
    best = std::max(best, num[i] / den[i]);
  }
  return best;
}

// The constant C with |phi(u)| u^{2 alpha+2} / M <= C min(u^{2 alpha+2}, u^{-r}).
double phi_kernel_constant(const AlphaParam& alpha, const GaussPolyFunction& phi, double r) {
  const double w = 2.0 * alpha.alpha() + 2.0;
  const double U = phi.support_hint();
  const int n = 40000;
  double c = 0.0;
  for (int i = 1; i <= n; ++i) {
    const double u = U * i / n;
    const double v = std::abs(phi(u));
    c = std::max(c, u <= 1.0 ? v : v * std::pow(u, w + r));
  }
  return c / alpha.norm_const();
}

}  // namespace

VerificationReport equivalence_report(const BesovParams& params, const GaussPolyFunction& f,
                                      const BesovProfile* profile) {
  params.validate();
  BesovProfile local;
  if (profile == nullptr) {
    local = besov_profile(params, f);
    profile = &local;
  }
  const BesovProfile& pr = *profile;
  const AlphaParam& alpha = params.alpha;
  const int k = params.k;
  const double p = params.p;
  const double q = params.q;
  const bool converged = pr.quadrature_failures == 0;

  VerificationReport rep("besov");
  nlohmann::ordered_json base = {{"alpha", alpha.alpha()},
                                 {"k", k},
                                 {"p", p},
                                 {"q", std::isinf(q) ? nlohmann::ordered_json("inf")
                                                     : nlohmann::ordered_json(q)},
                                 {"beta", params.beta},
                                 {"phi_order", pr.phi_order},
                                 {"f", function_record(f)}};
  auto inputs = [&](nlohmann::ordered_json extra = nlohmann::ordered_json::object()) {
    nlohmann::ordered_json j = base;
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    return j;
  };
  rep.metadata() = inputs({{"x_points", pr.x_grid.size()},
                           {"t_points", pr.t_grid.size()},
                           {"quadrature_failures", pr.quadrature_failures}});

  const auto& xs = pr.x_grid;
  const auto& ts = pr.t_grid;
  const std::size_t nx = xs.size();
  std::vector<double> kval(nx);
  for (std::size_t i = 0; i < nx; ++i) kval[i] = pr.k_upper[i].value();

  // Seminorms.
  const SeminormEstimate sB =
      seminorm_from_samples(SeminormKind::B, xs, pr.omega, params.exponent(), q);
  const SeminormEstimate sBt =
      seminorm_from_samples(SeminormKind::B_tilde, xs, pr.omega_tilde, params.exponent(), q);
  const SeminormEstimate sK = seminorm_from_samples(SeminormKind::K, xs, kval, params.beta, q);
  const SeminormEstimate sC =
      seminorm_from_samples(SeminormKind::C, ts, pr.conv_norm, params.exponent(), q);
  for (const SeminormEstimate* s : {&sB, &sBt, &sK, &sC}) {
    CheckRecord r;
    r.id = "seminorm_finite_" + to_string(s->kind);
    r.anchor = "smooth_membership";
    r.relation = "finite";
    r.measured = s->value;
    r.tolerance = kInf;
    r.inputs = inputs({{"left_slope", s->left_slope}, {"right_slope", s->right_slope}});
    r.status = (std::isfinite(s->value) && !s->diverging)
                   ? (converged ? CheckStatus::pass : CheckStatus::inconclusive)
                   : CheckStatus::fail;
    rep.add(std::move(r));
  }

  if (f.is_zero()) {
    rep.add_upper("zero_function_seminorms", "trivial_zero",
                  std::max({sB.value, sBt.value, sK.value, sC.value}), 0.0, inputs(), converged);
    return rep;
  }

  // Pointwise relations between the moduli.
  {
    std::vector<double> twice(nx);
    for (std::size_t i = 0; i < nx; ++i) twice[i] = 2.0 * pr.omega[i];
    rep.add_upper("symmetric_modulus_le_twice_modulus", "modulus_comparison",
                  max_ratio(xs, pr.omega_tilde, twice), 1.0 + 1e-9, inputs(), converged);
    double worst = 0.0;
    double gap = 0.0;
    for (std::size_t i = 1; i < nx; ++i) {
      worst = std::max(worst, pr.omega[i - 1] - pr.omega[i]);
      if (pr.omega[i] > 0.0) gap = std::max(gap, 1.0 - pr.omega_local[i] / pr.omega[i]);
    }
    rep.add_upper("modulus_nondecreasing", "modulus_definition", worst, 0.0, inputs(), converged);
    rep.add_info("modulus_local_sup_gap", "modulus_definition", gap, inputs())
        .note = "largest relative shortfall of the 18-point local supremum below the running one";
    double over = 0.0;
    for (std::size_t i = 0; i < nx; ++i) {
      const KUpper& ku = pr.k_upper[i];
      over = std::max(over, ku.value() - std::min(ku.keep, ku.move));
    }
    rep.add_upper("k_upper_admissible", "k_functional_definition", over, 0.0, inputs(), converged);
    std::vector<double> ratio_t(nx);
    for (std::size_t i = 0; i < nx; ++i) ratio_t[i] = std::pow(2.0, std::isinf(q) ? 1.0 : q);
    std::vector<double> bt_ratio(nx);
    for (std::size_t i = 0; i < nx; ++i) {
      const double a = std::isinf(q) ? sBt.integrand[i] : std::pow(sBt.integrand[i], q);
      const double b = std::isinf(q) ? sB.integrand[i] : std::pow(sB.integrand[i], q);
      bt_ratio[i] = (a == 0.0 && b == 0.0) ? 0.0 : a / (b * ratio_t[i]);
    }
    rep.add_upper("symmetric_seminorm_integrand_bound", "modulus_comparison",
                  *std::max_element(bt_ratio.begin(), bt_ratio.end()), 1.0 + 1e-9, inputs(),
                  converged);
  }

  // K-functional sandwich with the explicit constant chains.
  {
    std::vector<double> upper_ratio(nx, 0.0);
    std::vector<double> lower_ratio(nx, 0.0);
    std::vector<double> sandwich(nx, 0.0);
    for (std::size_t i = 0; i < nx; ++i) {
      const double x = xs[i];
      const double s2 = std::sqrt(2.0);
      const double bk = b_coeff(alpha, k, x);
      const double bk1 = b_coeff(alpha, k - 1, x);
      const double c1 = s2 * (bk + x * bk1);
      const double c0 =
          k == 1 ? s2 + 1.0 : s2 * (bk1 + x * b_coeff(alpha, k - 2, x)) + bk1;
      const double chain = std::max(c0, c1 / x);
      upper_ratio[i] = pr.omega[i] / (chain * kval[i]);
      lower_ratio[i] = kval[i] * bk / (2.0 * x * pr.omega[i]);
      sandwich[i] = pr.omega[i] / (std::pow(x, k - 1) * kval[i]);
    }
    const std::vector<double> ones(nx, 1.0);
    rep.add_upper("modulus_le_chain_times_k", "k_functional_sandwich_upper",
                  max_ratio(xs, upper_ratio, ones), 1.0 + 1e-6, inputs(), converged);
    rep.add_upper("k_le_chain_times_modulus", "k_functional_sandwich_lower",
                  max_ratio(xs, lower_ratio, ones), 1.0 + 1e-6, inputs(), converged);
    double lo = kInf;
    double hi = 0.0;
    for (std::size_t i = 0; i < nx; ++i) {
      if (!in_window(xs[i], kCentral.lo, kCentral.hi)) continue;
      lo = std::min(lo, sandwich[i]);
      hi = std::max(hi, sandwich[i]);
    }
    rep.add_range("sandwich_ratio_slope", "k_functional_equivalence",
                  slope_estimate(xs, sandwich, kCentral.lo, kCentral.hi), -0.15, 0.15,
                  inputs({{"window", {kCentral.lo, kCentral.hi}},
                          {"ratio_min", lo},
                          {"ratio_max", hi}}),
                  converged);
    rep.add_upper("sandwich_ratio_spread", "k_functional_equivalence", hi / lo, 50.0,
                  inputs({{"window", {kCentral.lo, kCentral.hi}},
                          {"ratio_min", lo},
                          {"ratio_max", hi}}),
                  converged);
  }

  // Convolution upper bound: Minkowski step and the min-kernel form.
  const GaussPolyFunction phi = phi_for(params);
  const double r_exp = params.beta + k + 1.0;
  const double c_phi = phi_kernel_constant(alpha, phi, r_exp);
  const double w = 2.0 * alpha.alpha() + 2.0;
  const double M = alpha.norm_const();
  {
    double worst_mink = 0.0;
    double worst_kernel = 0.0;
    std::vector<double> integrand(nx);
    for (std::size_t j = 0; j < ts.size(); ++j) {
      const double t = ts[j];
      if (!in_window(t, kCentral.lo, kCentral.hi)) continue;
      const GaussPolyFunction phit = dilate(alpha, phi, t);
      for (std::size_t i = 0; i < nx; ++i) {
        integrand[i] = std::abs(phit(xs[i])) * pr.omega_tilde[i] * std::pow(xs[i], w) / M;
      }
      const double mink = trapezoid_log(xs, integrand);
      for (std::size_t i = 0; i < nx; ++i) {
        const double u = xs[i] / t;
        integrand[i] = std::min(std::pow(u, w), std::pow(u, -r_exp)) * pr.omega_tilde[i];
      }
      const double kern = c_phi * trapezoid_log(xs, integrand);
      if (pr.conv_norm[j] > 0.0) {
        worst_mink = std::max(worst_mink, pr.conv_norm[j] / mink);
        worst_kernel = std::max(worst_kernel, pr.conv_norm[j] / kern);
      }
    }
    rep.add_upper("convolution_le_modulus_integral", "convolution_upper_minkowski", worst_mink,
                  1.0, inputs({{"window", {kCentral.lo, kCentral.hi}}}), converged);
    rep.add_upper("convolution_le_kernel_integral", "convolution_upper_kernel", worst_kernel,
                  1.0, inputs({{"window", {kCentral.lo, kCentral.hi}}, {"r", r_exp},
                               {"kernel_constant", c_phi}}),
                  converged);
  }

  // Convolution lower control: the ratio stays bounded as x -> 0.
  {
    std::vector<double> ratio(nx, 0.0);
    std::vector<double> integrand(ts.size());
    bool finite = true;
    for (std::size_t i = 0; i < nx; ++i) {
      const double x = xs[i];
      for (std::size_t j = 0; j < ts.size(); ++j) {
        const double u = x / ts[j];
        integrand[j] = std::min(std::pow(u, k - 1), std::pow(u, k)) * pr.conv_norm[j];
      }
      const double rhs = trapezoid_log(ts, integrand);
      ratio[i] = pr.omega_tilde[i] / rhs;
      if (in_window(x, kCentral.lo, kCentral.hi) && !(std::isfinite(ratio[i]) && ratio[i] > 0.0)) {
        finite = false;
      }
    }
    const double slope = finite ? slope_estimate(xs, ratio, kSmall.lo, kSmall.hi)
                                : std::numeric_limits<double>::quiet_NaN();
    double lo = kInf;
    double hi = 0.0;
    for (std::size_t i = 0; i < nx; ++i) {
      if (!in_window(xs[i], kCentral.lo, kCentral.hi)) continue;
      lo = std::min(lo, ratio[i]);
      hi = std::max(hi, ratio[i]);
    }
    nlohmann::ordered_json in = inputs({{"window", {kCentral.lo, kCentral.hi}},
                                        {"ratio_min", lo},
                                        {"ratio_max", hi}});
    if (p > 1.0) {
      rep.add_lower("convolution_lower_ratio_bounded", "convolution_lower_control", slope,
                    -0.15, in, converged);
    } else {
      CheckRecord& r = rep.add_info("convolution_lower_ratio_bounded",
                                    "convolution_lower_control", slope, in);
      r.note = "requires 1 < p; only the symmetric-modulus-into-convolution direction is asserted for p = 1";
    }
  }
  return rep;
}

VerificationReport scaling_report(const BesovParams& params, const GaussPolyFunction& f,
                                  const BesovProfile* profile) {
  params.validate();
  BesovProfile local;
  if (profile == nullptr) {
    local = besov_profile(params, f);
    profile = &local;
  }
  const BesovProfile& pr = *profile;
  const int k = params.k;
  const bool converged = pr.quadrature_failures == 0;
  VerificationReport rep("scaling");
  const nlohmann::ordered_json base = {{"alpha", params.alpha.alpha()},
                                       {"k", k},
                                       {"p", params.p},
                                       {"phi_order", pr.phi_order},
                                       {"f", function_record(f)},
                                       {"window", {kSmall.lo, kSmall.hi}}};
  if (f.is_zero()) return rep;
  rep.add_range("modulus_scaling_slope", "modulus_power_bound",
                slope_estimate(pr.x_grid, pr.omega, kSmall.lo, kSmall.hi), k - 0.1, k + 0.1,
                base, converged);
  CheckRecord& r = rep.add_range("convolution_small_t_slope", "convolution_kernel_exponents",
                                 slope_estimate(pr.t_grid, pr.conv_norm, kSmall.lo, kSmall.hi),
                                 k - 1 - 0.15, k + 0.15, base, converged);
  r.note = "phi has vanishing even moments below order 2 n0, so the norm scales like t^(2 n0)";
  return rep;
}

}  // namespace dunkl
