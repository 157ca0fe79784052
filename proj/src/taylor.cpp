#include "dunkl/taylor.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

namespace dunkl {

namespace {

constexpr double kResonanceExact = 1e-12;
constexpr double kResonanceNear = 1e-4;

QuadSpec plain(const QuadSpec& spec) {
  QuadSpec s = spec;
  s.endpoint_exponent.reset();
  s.right_exponent.reset();
  return s;
}

double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

struct TermBuild {
  std::vector<PowerTerm> u;
  std::vector<PowerTerm> w;
  double min_gap = std::numeric_limits<double>::infinity();
};

void merge_terms(std::vector<PowerTerm>& terms) {
  std::sort(terms.begin(), terms.end(), [](const PowerTerm& l, const PowerTerm& r) {
    if (l.odd_in_x != r.odd_in_x) return l.odd_in_x < r.odd_in_x;
    if (l.a_exp != r.a_exp) return l.a_exp < r.a_exp;
    return l.r_exp < r.r_exp;
  });
  std::vector<PowerTerm> out;
  for (const PowerTerm& t : terms) {
    if (!out.empty() && out.back().odd_in_x == t.odd_in_x &&
        std::abs(out.back().a_exp - t.a_exp) < 1e-12 &&
        std::abs(out.back().r_exp - t.r_exp) < 1e-12) {
      out.back().coef += t.coef;
    } else {
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const PowerTerm& t) { return t.coef == 0.0; });
  terms = std::move(out);
}

// Terms of int_r^a T(z) z^shift dz for T given by `terms`.
std::vector<PowerTerm> antiderivative(const std::vector<PowerTerm>& terms, double shift,
                                      double& min_gap) {
  std::vector<PowerTerm> out;
  for (const PowerTerm& t : terms) {
    const double q1 = t.r_exp + shift + 1.0;
    min_gap = std::min(min_gap, std::abs(q1));
    if (std::abs(q1) < kResonanceExact) continue;
    const double c = t.coef / q1;
    out.push_back({c, t.a_exp + q1, 0.0, t.odd_in_x});
    out.push_back({-c, t.a_exp, q1, t.odd_in_x});
  }
  merge_terms(out);
  return out;
}

TermBuild build_terms(double e, int order) {
  TermBuild b;
  b.u = {{0.5, -e, 0.0, true}};
  b.w = {{0.5, 0.0, 0.0, false}};
  for (int j = 1; j <= order; ++j) {
    std::vector<PowerTerm> nu = antiderivative(b.w, -e, b.min_gap);
    std::vector<PowerTerm> nw = antiderivative(b.u, e, b.min_gap);
    b.u = std::move(nu);
    b.w = std::move(nw);
  }
  return b;
}

// A power r^q with its coefficient already evaluated at a fixed x.
struct BoundTerm {
  double coef;
  double q;
  bool from_u;  // part of U r^e (even combination) rather than W
};

std::vector<BoundTerm> bind_terms(const ThetaKernel::Data& d, double a, double s) {
  const double e = d.alpha.weight_exp();
  std::vector<BoundTerm> out;
  for (const PowerTerm& t : d.u) {
    out.push_back({t.coef * std::pow(a, t.a_exp) * (t.odd_in_x ? s : 1.0), t.r_exp + e, true});
  }
  for (const PowerTerm& t : d.w) {
    out.push_back({t.coef * std::pow(a, t.a_exp) * (t.odd_in_x ? s : 1.0), t.r_exp, false});
  }
  return out;
}

bool integer_apart(double p, double q) {
  const double d = p - q;
  return std::abs(d - std::round(d)) < 1e-9;
}

// Groups of exponents that differ by integers; within a group the factor
// r^{q - q_min} is a polynomial and the group is smooth after extracting
// r^{q_min}.
std::vector<std::vector<BoundTerm>> exponent_classes(const std::vector<BoundTerm>& terms) {
  std::vector<std::vector<BoundTerm>> classes;
  for (const BoundTerm& t : terms) {
    bool placed = false;
    for (auto& c : classes) {
      if (integer_apart(c.front().q, t.q)) {
        c.push_back(t);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({t});
  }
  return classes;
}

double min_exponent(const std::vector<BoundTerm>& terms) {
  double q = std::numeric_limits<double>::infinity();
  for (const BoundTerm& t : terms) q = std::min(q, t.q);
  return q;
}

double int_pow(double r, double p) {
  const double n = std::round(p);
  if (std::abs(p - n) < 1e-9) return std::pow(r, static_cast<int>(n));
  return std::pow(r, p);
}

std::vector<double> inner_cuts(std::span<const double> bps, double a) {
  std::vector<double> cuts;
  for (double b : bps) {
    const double r = std::abs(b);
    if (r > 0.0 && r < a) cuts.push_back(r);
  }
  return cuts;
}

}  // namespace

double b_coeff(const AlphaParam& alpha, int p, double x) {
  if (p < 0) throw DomainError("b_coeff: order must be nonnegative");
  const int m = p / 2;
  const double base = std::pow(0.5 * x, p);
  const double apoch = pochhammer(alpha.alpha() + 1.0, p % 2 == 0 ? m : m + 1);
  return base / (apoch * std::tgamma(m + 1.0));
}

GaussPolyFunction b_polynomial(const AlphaParam& alpha, int p) {
  std::vector<double> c(static_cast<std::size_t>(p) + 1, 0.0);
  c[static_cast<std::size_t>(p)] = b_coeff(alpha, p, 1.0);
  return GaussPolyFunction::polynomial(std::move(c));
}

// ---------------------------------------------------------------------------
// Numeric tables

struct ThetaAtX::Table {
  static constexpr int kPieces = 48;
  static constexpr int kNodes = 24;
  using Piece = std::array<double, kNodes>;

  double a = 0.0;
  double s = 0.0;
  double e = 0.0;
  // u[j][p], w[j][p] hold U_j, W_j at the Chebyshev nodes of piece p; j >= 1.
  std::vector<std::vector<Piece>> u;
  std::vector<std::vector<Piece>> w;

  static const std::array<double, kNodes>& nodes() {
    static const std::array<double, kNodes> t = [] {
      std::array<double, kNodes> v{};
      for (int i = 0; i < kNodes; ++i) v[i] = std::cos(std::numbers::pi * i / (kNodes - 1));
      return v;
    }();
    return t;
  }

  double lo(int p) const { return std::ldexp(a, -p - 1); }
  double hi(int p) const { return std::ldexp(a, -p); }
  double r_min() const { return lo(kPieces - 1); }

  static double barycentric(const Piece& vals, double t) {
    const auto& xs = nodes();
    double num = 0.0;
    double den = 0.0;
    for (int i = 0; i < kNodes; ++i) {
      const double d = t - xs[i];
      if (d == 0.0) return vals[i];
      double wi = (i % 2 == 0) ? 1.0 : -1.0;
      if (i == 0 || i == kNodes - 1) wi *= 0.5;
      const double c = wi / d;
      num += c * vals[i];
      den += c;
    }
    return num / den;
  }

  double eval(int j, bool want_u, double r) const {
    if (j == 0) return want_u ? s / (2.0 * std::pow(a, e)) : 0.5;
    if (r >= a) return 0.0;
    if (r < r_min()) return below_floor(j, want_u, r);
    int p = static_cast<int>(std::floor(std::log2(a / r)));
    p = std::clamp(p, 0, kPieces - 1);
    while (p > 0 && r > hi(p)) --p;
    while (p < kPieces - 1 && r < lo(p)) ++p;
    const double t = 2.0 * (r - lo(p)) / (hi(p) - lo(p)) - 1.0;
    const auto& tab = want_u ? u : w;
    return barycentric(tab[j][p], t);
  }

  double integrand(int j, bool want_u, double z) const {
    // U_j integrates W_{j-1} z^{-e}; W_j integrates U_{j-1} z^{e}.
    return want_u ? eval(j - 1, false, z) * std::pow(z, -e)
                  : eval(j - 1, true, z) * std::pow(z, e);
  }

  // Below the finest piece: continue the integral in log z from r_min.
  double below_floor(int j, bool want_u, double r) const {
    const double top = r_min();
    const double base = eval(j, want_u, top);
    if (r <= 0.0) return base;
    const RealFn g = [&](double v) {
      const double z = std::exp(v);
      return integrand(j, want_u, z) * z;
    };
    QuadSpec spec;
    spec.abs_tol = 1e-300;
    spec.rel_tol = 1e-12;
    return base + dunkl::integrate(g, std::log(r), std::log(top), spec).value;
  }

  void build(int order) {
    const auto& xs = nodes();
    const JacobiRule& gl = legendre_rule(kNodes);
    u.assign(static_cast<std::size_t>(order) + 1, {});
    w.assign(static_cast<std::size_t>(order) + 1, {});
    auto gl_integral = [&](int j, bool want_u, double l, double h) {
      if (h <= l) return 0.0;
      const double half = 0.5 * (h - l);
      const double mid = 0.5 * (h + l);
      double acc = 0.0;
      for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
        acc += gl.weights[i] * integrand(j, want_u, mid + half * gl.nodes[i]);
      }
      return acc * half;
    };
    for (int j = 1; j <= order; ++j) {
      for (bool want_u : {true, false}) {
        std::vector<Piece> tab(kPieces);
        double above = 0.0;  // integral over (hi(p), a)
        for (int p = 0; p < kPieces; ++p) {
          const double l = lo(p);
          const double h = hi(p);
          for (int i = 0; i < kNodes; ++i) {
            const double r = l + 0.5 * (xs[i] + 1.0) * (h - l);
            tab[p][i] = above + gl_integral(j, want_u, r, h);
          }
          above += gl_integral(j, want_u, l, h);
        }
        (want_u ? u : w)[j] = std::move(tab);
      }
    }
  }
};

// ---------------------------------------------------------------------------
// ThetaKernel

ThetaKernel::ThetaKernel(const AlphaParam& alpha, int order, ThetaMode mode) {
  if (order < 0) throw DomainError("ThetaKernel: order must be nonnegative");
  auto d = std::make_shared<Data>(Data{alpha, order, mode, {}, {}});
  const TermBuild b = build_terms(alpha.weight_exp(), order);
  if (mode == ThetaMode::automatic) {
    d->mode = b.min_gap < kResonanceNear ? ThetaMode::numeric : ThetaMode::symbolic;
  }
  if (d->mode == ThetaMode::symbolic) {
    if (b.min_gap < kResonanceExact) {
      throw DomainError("ThetaKernel: resonant parameter, symbolic expansion unavailable");
    }
    d->u = b.u;
    d->w = b.w;
  }
  data_ = std::move(d);
}

bool ThetaKernel::is_resonant(const AlphaParam& alpha, int order, double tol) {
  return build_terms(alpha.weight_exp(), order).min_gap < std::max(tol, kResonanceExact);
}

ThetaAtX ThetaKernel::at(double x) const {
  if (x == 0.0 || !std::isfinite(x)) throw DomainError("ThetaKernel: x must be finite and nonzero");
  return ThetaAtX(data_, x);
}

double ThetaKernel::operator()(double x, double y) const { return at(x).value(y); }

ThetaAtX::ThetaAtX(std::shared_ptr<const ThetaKernel::Data> data, double x)
    : data_(std::move(data)), x_(x), a_(std::abs(x)), s_(sgn(x)) {
  if (data_->mode == ThetaMode::numeric) {
    auto t = std::make_shared<Table>();
    t->a = a_;
    t->s = s_;
    t->e = data_->alpha.weight_exp();
    t->build(data_->order);
    table_ = std::move(t);
  }
}

ThetaAtX::Parts ThetaAtX::parts(double r) const {
  r = std::abs(r);
  if (r > a_) return {};
  const double e = data_->alpha.weight_exp();
  Parts out;
  if (table_) {
    const int k = data_->order;
    if (r == 0.0) {
      // U_k r^e vanishes at 0 for k = 0; for higher orders take the limit
      // from the finest tabulated point.
      const double rm = std::ldexp(table_->r_min(), -60);
      out.ua = table_->eval(k, true, rm) * std::pow(rm, e);
      out.w = table_->eval(k, false, rm);
      return out;
    }
    out.ua = table_->eval(k, true, r) * std::pow(r, e);
    out.w = table_->eval(k, false, r);
    return out;
  }
  for (const PowerTerm& t : data_->u) {
    out.ua += t.coef * std::pow(a_, t.a_exp) * (t.odd_in_x ? s_ : 1.0) * std::pow(r, t.r_exp + e);
  }
  for (const PowerTerm& t : data_->w) {
    out.w += t.coef * std::pow(a_, t.a_exp) * (t.odd_in_x ? s_ : 1.0) * std::pow(r, t.r_exp);
  }
  return out;
}

double ThetaAtX::weighted(double y) const {
  const Parts p = parts(y);
  return p.ua + sgn(y) * p.w;
}

double ThetaAtX::value(double y) const {
  return weighted(y) / data_->alpha.weight(y);
}

QuadResult ThetaAtX::integrate(const RealFn& h, const QuadSpec& spec,
                               std::span<const double> breakpoints) const {
  spec.validate();
  const std::vector<double> cuts = inner_cuts(breakpoints, a_);
  if (table_) {
    std::vector<double> all = cuts;
    for (int p = 1; p <= 8; ++p) all.push_back(std::ldexp(a_, -p));
    const RealFn g = [&](double r) {
      const Parts pr = parts(r);
      const double hp = h(r);
      const double hm = h(-r);
      return pr.ua * (hp + hm) + pr.w * (hp - hm);
    };
    return dunkl::integrate(g, table_->r_min(), a_, plain(spec), all);
  }
  const auto classes = exponent_classes(bind_terms(*data_, a_, s_));
  QuadResult total;
  for (const auto& cls : classes) {
    const double q0 = min_exponent(cls);
    const RealFn g = [&](double r) {
      const double hp = h(r);
      const double hm = h(-r);
      double acc = 0.0;
      for (const BoundTerm& t : cls) {
        acc += t.coef * int_pow(r, t.q - q0) * (t.from_u ? hp + hm : hp - hm);
      }
      return acc;
    };
    total += integrate_weighted(g, 0.0, a_, q0, 0.0, plain(spec), cuts);
  }
  return total;
}

QuadResult ThetaAtX::abs_mass(const QuadSpec& spec) const {
  spec.validate();
  std::vector<double> cuts;
  for (int p = 1; p <= 8; ++p) cuts.push_back(std::ldexp(a_, -p));
  if (table_) {
    const RealFn g = [&](double r) {
      const Parts pr = parts(r);
      return std::abs(pr.ua + pr.w) + std::abs(pr.ua - pr.w);
    };
    return dunkl::integrate(g, table_->r_min(), a_, plain(spec), cuts);
  }
  const std::vector<BoundTerm> terms = bind_terms(*data_, a_, s_);
  const double q0 = min_exponent(terms);
  const RealFn g = [&](double r) {
    double ua = 0.0;
    double w = 0.0;
    for (const BoundTerm& t : terms) (t.from_u ? ua : w) += t.coef * int_pow(r, t.q - q0);
    return std::abs(ua + w) + std::abs(ua - w);
  };
  return integrate_weighted(g, 0.0, a_, q0, 0.0, plain(spec), cuts);
}

double theta_mass(const AlphaParam& alpha, int k, double x, const QuadSpec& spec) {
  if (k < 1) throw DomainError("theta_mass: k must be at least 1");
  if (x == 0.0) return 0.0;
  return ThetaKernel(alpha, k - 1).at(x).abs_mass(spec).value;
}

double theta0_moment(const AlphaParam& alpha, int p, double x, const QuadSpec& spec) {
  if (x == 0.0) return 0.0;
  const GaussPolyFunction bp = b_polynomial(alpha, p);
  return ThetaKernel(alpha, 0).at(x).integrate([&](double y) { return bp(y); }, spec).value;
}

// ---------------------------------------------------------------------------
// Remainder

Remainder::Remainder(const AlphaParam& alpha, int k, const GaussPolyFunction& f,
                     RemainderMode mode, const QuadSpec& spec, ThetaMode theta_mode)
    : alpha_(alpha),
      k_(k),
      mode_(mode),
      spec_(spec),
      f_(f),
      theta_(alpha, std::max(k - 1, 0), theta_mode) {
  if (k < 0) throw DomainError("Remainder: order must be nonnegative");
  spec.validate();
  for (int p = 0; p <= k; ++p) {
    powers_.push_back(p == 0 ? f : dunkl_apply(alpha, powers_.back()));
  }
  top_parts_ = parity_parts(powers_.back());
  f_parts_ = parity_parts(f);
}

GaussPolyFunction Remainder::taylor_polynomial(double x) const {
  GaussPolyFunction acc({}, f_.gauss_scale(), f_.support_hint_field());
  for (int p = 0; p < k_; ++p) acc = acc + b_coeff(alpha_, p, x) * powers_[p];
  return acc;
}

std::vector<double> Remainder::breakpoints(double x) const {
  const double T = f_.support_hint();
  std::vector<double> out;
  if (!std::isfinite(T)) return out;
  out.push_back(std::abs(x) + T);
  if (std::abs(x) > T) out.push_back(std::abs(x) - T);
  return out;
}

QuadResult Remainder::integral_at(const ThetaAtX& theta, double a) const {
  const QuadSpec inner = spec_.nested();
  const RealFn h = [&](double y) { return translate(alpha_, top_parts_, y, a, inner).value; };
  std::vector<double> cuts;
  const double T = top_parts_.support;
  if (std::isfinite(T)) {
    cuts.push_back(std::abs(a) + T);
    cuts.push_back(std::abs(std::abs(a) - T));
  }
  return theta.integrate(h, spec_, cuts);
}

QuadResult Remainder::at(double x, double a) const {
  if (k_ == 0) return translate(alpha_, f_parts_, x, a, spec_);
  if (x == 0.0) return {};
  if (mode_ == RemainderMode::integral) return integral_at(theta_.at(x), a);
  QuadResult r = translate(alpha_, f_parts_, x, a, spec_);
  for (int p = 0; p < k_; ++p) r.value -= b_coeff(alpha_, p, x) * powers_[p](a);
  return r;
}

Evaluable Remainder::function(double x) const {
  auto self = std::make_shared<const Remainder>(*this);
  const double support = std::abs(x) + f_.support_hint();
  if (mode_ == RemainderMode::integral && k_ > 0 && x != 0.0) {
    auto theta = std::make_shared<const ThetaAtX>(theta_.at(x));
    return {[self, theta](double a) { return self->integral_at(*theta, a).value; }, support};
  }
  return {[self, x](double a) { return self->at(x, a).value; }, support};
}

QuadResult remainder(const AlphaParam& alpha, int k, const GaussPolyFunction& f, double x,
                     double a, RemainderMode mode, const QuadSpec& spec) {
  return Remainder(alpha, k, f, mode, spec).at(x, a);
}

double taylor_identity_residual(const AlphaParam& alpha, int k, const GaussPolyFunction& f,
                                double x, double a, const QuadSpec& spec) {
  const Remainder rem(alpha, k, f, RemainderMode::integral, spec);
  const double lhs = translate(alpha, f, x, a, spec).value;
  const double poly = rem.taylor_polynomial(x)(a);
  return std::abs(lhs - poly - rem.at(x, a).value);
}

double remainder_recursion_residual(const AlphaParam& alpha, int k,
                                    const GaussPolyFunction& f, double x, double a,
                                    const QuadSpec& spec) {
  if (k < 1) throw DomainError("remainder_recursion_residual: k must be at least 1");
  const double lhs = Remainder(alpha, k, f, RemainderMode::integral, spec).at(x, a).value;
  if (x == 0.0) return std::abs(lhs);
  const Remainder inner(alpha, k - 1, dunkl_apply(alpha, f), RemainderMode::recurrence,
                        spec.nested());
  const RealFn h = [&](double y) { return inner.at(y, a).value; };
  const double T = f.support_hint();
  std::vector<double> cuts;
  if (std::isfinite(T)) {
    cuts.push_back(std::abs(a) + T);
    cuts.push_back(std::abs(std::abs(a) - T));
  }
  const double rhs = ThetaKernel(alpha, 0).at(x).integrate(h, spec, cuts).value;
  return std::abs(lhs - rhs);
}

namespace {

double iterated(const AlphaParam& alpha, const ThetaKernel& theta0, int k,
                const ParityParts& f, double x, double a, const QuadSpec& spec) {
  if (x == 0.0) return 0.0;
  std::vector<double> cuts;
  if (std::isfinite(f.support)) {
    cuts.push_back(std::abs(a) + f.support);
    cuts.push_back(std::abs(std::abs(a) - f.support));
  }
  const QuadSpec inner = spec.nested();
  RealFn h;
  if (k == 1) {
    h = [&](double y) { return translate(alpha, f, y, a, inner).value; };
  } else {
    h = [&](double y) { return iterated(alpha, theta0, k - 1, f, y, a, inner); };
  }
  return theta0.at(x).integrate(h, spec, cuts).value;
}

}  // namespace

double iterated_integral_I(const AlphaParam& alpha, int k, const GaussPolyFunction& f,
                           double x, double a, const QuadSpec& spec) {
  if (k < 1 || k > 4) throw DomainError("iterated_integral_I: k must lie in 1..4");
  const ThetaKernel theta0(alpha, 0, ThetaMode::symbolic);
  return iterated(alpha, theta0, k, parity_parts(f), x, a, spec);
}

double SymmetricRemainder::residual() const { return std::abs(remainder_sum - closed_form); }

SymmetricRemainder symmetric_remainder(const AlphaParam& alpha, int k,
                                       const GaussPolyFunction& f, double x, double a,
                                       const QuadSpec& spec) {
  const Remainder rem(alpha, k, f, RemainderMode::integral, spec);
  SymmetricRemainder out;
  out.remainder_sum = rem.at(x, a).value + rem.at(-x, a).value;
  double closed = translate(alpha, f, x, a, spec).value + translate(alpha, f, -x, a, spec).value;
  for (int i = 0; 2 * i <= k - 1; ++i) {
    closed -= 2.0 * b_coeff(alpha, 2 * i, x) * dunkl_power(alpha, f, 2 * i)(a);
  }
  out.closed_form = closed;
  return out;
}

double dunkl_fd(const AlphaParam& alpha, const RealFn& F, double a, int order, double h) {
  if (order != 1 && order != 2) throw DomainError("dunkl_fd: order must be 1 or 2");
  if (!(std::abs(a) > 2.0 * h)) throw DomainError("dunkl_fd: |a| must exceed twice the step");
  const double c = alpha.weight_exp();
  auto samples = [&](double center) {
    std::array<double, 5> v{};
    for (int j = -2; j <= 2; ++j) v[j + 2] = F(center + j * h);
    return v;
  };
  const auto p = samples(a);
  const auto m = samples(-a);
  auto d1 = [&](const std::array<double, 5>& v) {
    return (v[0] - 8.0 * v[1] + 8.0 * v[3] - v[4]) / (12.0 * h);
  };
  auto d2 = [&](const std::array<double, 5>& v) {
    return (-v[0] + 16.0 * v[1] - 30.0 * v[2] + 16.0 * v[3] - v[4]) / (12.0 * h * h);
  };
  const double fo = 0.5 * (p[2] - m[2]);
  if (order == 1) return d1(p) + c * fo / a;
  const double dp = d1(p);
  const double dm = d1(m);
  const double fo_prime = 0.5 * (dp + dm);
  const double fe_prime = 0.5 * (dp - dm);
  return d2(p) + c * (fo_prime / a - fo / (a * a)) + c * fe_prime / a;
}

}  // namespace dunkl
