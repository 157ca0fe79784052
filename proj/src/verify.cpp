#include "dunkl/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "dunkl/dunklcore.hpp"
#include "dunkl/parallel.hpp"
#include "dunkl/special.hpp"
#include "dunkl/taylor.hpp"

namespace dunkl {

namespace {

using json = nlohmann::ordered_json;

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kInf = std::numeric_limits<double>::infinity();

json number(double v) {
  if (std::isfinite(v)) return v;
  return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
}

json function_json(const NamedFunction& nf) {
  return {{"name", nf.name}, {"coeffs", nf.f.coeffs()}, {"gauss_scale", nf.f.gauss_scale()}};
}

// Running maximum that remembers where it was attained.
struct Worst {
  double value = 0.0;
  json where = json::object();
  bool converged = true;

  void offer(double v, json at) {
    if (std::isnan(value)) return;
    if (where.empty() || std::isnan(v) || v > value) {
      value = v;
      where = std::move(at);
    }
  }
};

json merged(json base, const json& extra) {
  for (auto it = extra.begin(); it != extra.end(); ++it) base[it.key()] = it.value();
  return base;
}

QuadSpec norm_quad() { return BesovParams::default_norm_quad(); }
QuadSpec inner_quad() { return BesovParams::default_inner_quad(); }

// Points (x, y) with x, y on a 6 x 6 grid in [0.2, 3]^2.
const double kMassGrid[] = {0.2, 0.5, 0.9, 1.4, 2.1, 3.0};

const double kProductPairs[][2] = {{0.3, 0.7},  {1.0, 1.0},   {1.5, 0.4},
                                   {-0.8, 1.2}, {2.0, -2.5},  {0.5, -0.5},
                                   {-1.1, -0.6}, {2.7, 0.9},  {0.2, 2.2}};

const double kTaylorX[] = {-1.5, -0.6, 0.25, 0.9, 2.0};
const double kTaylorA[] = {-1.2, -0.4, 0.0, 0.5, 1.7};
const double kIdentityPoints[][2] = {{0.8, 0.2}, {-0.6, 0.9}, {1.3, -0.5}};
const double kNormX[] = {-2.5, -1.0, -0.3, -0.05, 0.05, 0.3, 1.0, 2.5};

// ---------------------------------------------------------------- kernel

VerificationReport kernel_suite(const VerifyConfig& cfg) {
  VerificationReport rep("kernel");
  for (double a : cfg.alphas) {
    const AlphaParam alpha(a);
    const json base = {{"alpha", a}};

    Worst mass;
    for (double x : kMassGrid) {
      for (double y : kMassGrid) {
        const KernelMass m = kernel_mass(alpha, x, y, cfg.quad);
        mass.converged = mass.converged && m.converged;
        mass.offer(m.total_variation, {{"x", x}, {"y", y}});
      }
    }
    rep.add_upper("kernel_mass_bound", "translation_kernel_total_variation", mass.value,
                  kSqrt2 + 1e-8, merged(base, mass.where), mass.converged);

    Worst prod;
    Worst unit;
    for (double t : {0.3, 1.0, 2.5}) {
      for (const auto& xy : kProductPairs) {
        const double x = xy[0];
        const double y = xy[1];
        const std::complex<double> lhs =
            dunkl_kernel(alpha, {0.0, t}, x) * dunkl_kernel(alpha, {0.0, t}, y);
        const std::complex<double> rhs = translate_kernel(alpha, t, x, y, cfg.quad);
        prod.offer(std::abs(lhs - rhs), {{"t", t}, {"x", x}, {"y", y}});
      }
    }
    ParityParts one;
    one.even = [](double) { return 1.0; };
    one.odd_over_x = [](double) { return 0.0; };
    for (const auto& xy : kProductPairs) {
      const QuadResult r = translate(alpha, one, xy[0], xy[1], cfg.quad);
      unit.converged = unit.converged && r.converged;
      unit.offer(std::abs(r.value - 1.0), {{"x", xy[0]}, {"y", xy[1]}});
    }
    rep.add_upper("product_formula", "product_formula", prod.value, 1e-6,
                  merged(base, prod.where));
    rep.add_upper("translation_of_constant", "translation_unit_mass", unit.value, 1e-8,
                  merged(base, unit.where), unit.converged);

    Worst sym;
    const double samples[][3] = {{1.0, 2.0, 1.5},  {0.7, 1.3, -1.0}, {1.1, 0.5, 0.9},
                                 {2.0, 1.5, -3.2}, {0.6, 0.6, 0.3},  {-0.9, 1.7, 2.1}};
    for (const auto& s : samples) {
      const double x = s[0];
      const double y = s[1];
      const double z = s[2];
      const double w = w_kernel(alpha, x, y, z);
      const double scale = std::max(1.0, std::abs(w));
      const double gap = std::max({std::abs(w - w_kernel(alpha, y, x, z)),
                                   std::abs(w - w_kernel(alpha, -x, z, y)),
                                   std::abs(w - w_kernel(alpha, -z, y, -x))});
      sym.offer(gap / scale, {{"x", x}, {"y", y}, {"z", z}});
    }
    rep.add_upper("kernel_symmetries", "translation_kernel_symmetry", sym.value, 1e-10,
                  merged(base, sym.where));
  }
  return rep;
}

// ----------------------------------------------------------- translation

VerificationReport translation_suite(const VerifyConfig& cfg) {
  VerificationReport rep("translation");
  const GaussPolyFunction partner({1.0}, 2.0);
  for (double a : cfg.alphas) {
    const AlphaParam alpha(a);
    for (const NamedFunction& nf : cfg.functions) {
      if (nf.f.is_zero()) continue;
      const GaussPolyFunction& f = nf.f;
      const json base = {{"alpha", a}, {"f", function_json(nf)}};

      Worst sym;
      for (const auto& xy : kProductPairs) {
        const QuadResult l = translate(alpha, f, xy[0], xy[1], cfg.quad);
        const QuadResult r = translate_by_density(alpha, f.evaluable(), xy[1], xy[0], cfg.quad);
        sym.converged = sym.converged && l.converged && r.converged;
        sym.offer(std::abs(l.value - r.value) / (1.0 + std::abs(l.value)),
                  {{"x", xy[0]}, {"y", xy[1]}});
      }
      rep.add_upper("translation_symmetry", "translation_symmetry", sym.value, 1e-8,
                    merged(base, sym.where), sym.converged);

      Worst contraction;
      for (double p : {1.0, 2.0, 4.0}) {
        const LpContext ctx{alpha, p, cfg.truncation, norm_quad()};
        const double fn = lp_norm(ctx, f).value;
        for (double x : {0.3, 1.0, 2.5}) {
          const Evaluable tf = translated(alpha, f, x, inner_quad());
          const double T = f.support_hint();
          const double bps[] = {x + T, std::abs(x - T)};
          const NormResult n = lp_norm(ctx, tf, bps);
          contraction.converged = contraction.converged && n.converged;
          contraction.offer(n.value / fn, {{"p", p}, {"x", x}});
        }
      }
      rep.add_upper("translation_contraction", "translation_norm_bound", contraction.value,
                    kSqrt2 + 1e-6, merged(base, contraction.where), contraction.converged);

      const GaussPolyFunction fg = convolved_exact(alpha, f, partner);
      Worst young;
      const double pqr[][3] = {{1.0, 1.0, 1.0}, {1.0, 2.0, 2.0}};
      for (const auto& e : pqr) {
        const auto norm = [&](const GaussPolyFunction& g, double p) {
          return lp_norm(LpContext{alpha, p, cfg.truncation, norm_quad()}, g).value;
        };
        young.offer(norm(fg, e[2]) / (norm(f, e[0]) * norm(partner, e[1])),
                    {{"p", e[0]}, {"q", e[1]}, {"r", e[2]}});
      }
      rep.add_upper("young_bound", "young_inequality", young.value, kSqrt2 + 1e-6,
                    merged(base, merged(young.where, {{"g", function_json({"partner", partner})}})));

      Worst closed;
      for (double x : {-0.7, 0.4, 1.6}) {
        const QuadResult q = convolve(alpha, f.evaluable(), partner.evaluable(), x, inner_quad(),
                                      ConvolutionOrder::narrow_outer);
        closed.converged = closed.converged && q.converged;
        closed.offer(std::abs(fg(x) - q.value) / (1.0 + std::abs(q.value)), {{"x", x}});
      }
      rep.add_upper("convolution_closed_form", "convolution_definition", closed.value, 1e-7,
                    merged(base, closed.where), closed.converged);

      const QuadResult fg04 =
          convolve(alpha, f.evaluable(), partner.evaluable(), 0.4, cfg.quad);
      const QuadResult gf04 =
          convolve(alpha, partner.evaluable(), f.evaluable(), 0.4, cfg.quad);
      rep.add_upper("convolution_commutes", "convolution_definition",
                    std::abs(fg04.value - gf04.value), 1e-7, merged(base, {{"x", 0.4}}),
                    fg04.converged && gf04.converged);

      Worst transform;
      for (double xi : {0.5, 2.0}) {
        const std::complex<double> lhs = dunkl_transform(alpha, fg.evaluable(), xi, cfg.quad);
        const std::complex<double> rhs = dunkl_transform(alpha, f.evaluable(), xi, cfg.quad) *
                                         dunkl_transform(alpha, partner.evaluable(), xi, cfg.quad);
        transform.offer(std::abs(lhs - rhs), {{"xi", xi}});
      }
      rep.add_upper("transform_of_convolution", "transform_convolution_product", transform.value,
                    1e-6, merged(base, transform.where));
    }

    const GaussPolyFunction g = GaussPolyFunction::gaussian();
    Worst commute;
    for (double t : {0.6, -0.6}) {
      commute.offer(translate_convolution_commutes(alpha, g.evaluable(), partner.evaluable(), t,
                                                   0.9, cfg.quad),
                    {{"t", t}, {"x", 0.9}});
    }
    rep.add_upper("translation_convolution_commute", "translation_convolution_interplay",
                  commute.value, 1e-6, merged({{"alpha", a}}, commute.where));
  }
  return rep;
}

// ---------------------------------------------------------------- taylor

VerificationReport taylor_suite(const VerifyConfig& cfg) {
  VerificationReport rep("taylor");
  for (double a : cfg.alphas) {
    const AlphaParam alpha(a);

    Worst moment;
    for (int p = 0; p <= 4; ++p) {
      for (double x : {-1.0, -0.5, 0.5, 1.0, 2.0}) {
        moment.offer(std::abs(theta0_moment(alpha, p, x, cfg.quad) - b_coeff(alpha, p + 1, x)),
                     {{"p", p}, {"x", x}});
      }
    }
    rep.add_upper("theta0_moment", "theta_moment_identity", moment.value, 1e-8,
                  merged({{"alpha", a}}, moment.where))
        .note = "target b_{p+1}(x); the statement prints b_{p+1}(y), its proof ends at x";

    for (int k : cfg.ks) {
      Worst mass;
      for (double x : {0.2, 0.8, 2.0}) {
        const double bound = b_coeff(alpha, k, x) + x * b_coeff(alpha, k - 1, x);
        mass.offer(theta_mass(alpha, k, x, cfg.quad) - bound, {{"x", x}, {"bound", bound}});
      }
      rep.add_upper("theta_mass_bound", "theta_mass_bound", mass.value, 1e-8,
                    merged({{"alpha", a}, {"k", k}}, mass.where));

      for (const NamedFunction& nf : cfg.functions) {
        if (nf.f.is_zero()) continue;
        const GaussPolyFunction& f = nf.f;
        const json base = {{"alpha", a}, {"k", k}, {"f", function_json(nf)}};
        const GaussPolyFunction top1 = dunkl_power(alpha, f, k - 1);

        Worst formula;
        Worst modes;
        for (double x : kTaylorX) {
          for (double at : kTaylorA) {
            const double tx = translate(alpha, f, x, at, cfg.quad).value;
            formula.offer(taylor_identity_residual(alpha, k, f, x, at, cfg.quad) /
                              (1.0 + std::abs(tx)),
                          {{"x", x}, {"a", at}});
            const double ri = remainder(alpha, k, f, x, at, RemainderMode::integral, cfg.quad).value;
            const double rr =
                remainder(alpha, k, f, x, at, RemainderMode::recurrence, cfg.quad).value;
            modes.offer(std::abs(ri - rr), {{"x", x}, {"a", at}});
          }
        }
        rep.add_upper("taylor_formula", "taylor_formula", formula.value, 1e-6,
                      merged(base, formula.where));
        rep.add_upper("remainder_modes_agree", "remainder_definition", modes.value, 1e-6,
                      merged(base, modes.where));

        Worst step;
        Worst recursion;
        Worst iterated;
        Worst shift;
        Worst symmetric;
        for (const auto& xa : kIdentityPoints) {
          const double x = xa[0];
          const double at = xa[1];
          const json where = {{"x", x}, {"a", at}};
          const double rk = remainder(alpha, k, f, x, at, RemainderMode::integral, cfg.quad).value;
          const double prev =
              k == 1 ? translate(alpha, f, x, at, cfg.quad).value
                     : remainder(alpha, k - 1, f, x, at, RemainderMode::integral, cfg.quad).value;
          step.offer(std::abs(rk - (prev - b_coeff(alpha, k - 1, x) * top1(at))), where);
          symmetric.offer(symmetric_remainder(alpha, k, f, x, at, cfg.quad).residual(), where);
          if (k <= 2) {
            recursion.offer(remainder_recursion_residual(alpha, k, f, x, at, cfg.quad), where);
            const RealFn Ik = [&](double s) {
              return iterated_integral_I(alpha, k, f, x, s, cfg.quad);
            };
            iterated.offer(std::abs(dunkl_fd(alpha, Ik, at, k) - rk), where);
          }
          if (k == 1) {
            const GaussPolyFunction lf = dunkl_apply(alpha, f);
            const RealFn I1 = [&](double s) {
              return iterated_integral_I(alpha, 1, f, x, s, cfg.quad);
            };
            const RealFn I1l = [&](double s) {
              return iterated_integral_I(alpha, 1, lf, x, s, cfg.quad);
            };
            shift.offer(std::abs(dunkl_fd(alpha, I1, at, 2) - dunkl_fd(alpha, I1l, at, 1)), where);
          }
        }
        rep.add_upper("identity_remainder_step", "remainder_step", step.value, 1e-6,
                      merged(base, step.where));
        if (k <= 2) {
          rep.add_upper("identity_remainder_recursion", "remainder_recursion", recursion.value,
                        1e-6, merged(base, recursion.where));
          rep.add_upper("identity_iterated_dunkl", "iterated_integral_dunkl", iterated.value,
                        1e-4, merged(base, iterated.where));
        }
        if (k == 1) {
          rep.add_upper("identity_iterated_shift", "iterated_integral_shift", shift.value, 1e-4,
                        merged(base, shift.where));
        }
        rep.add_upper("identity_symmetric_remainder", "symmetric_remainder", symmetric.value,
                      1e-6, merged(base, symmetric.where));
      }
    }
  }
  return rep;
}

// ----------------------------------------------------------------- norms

VerificationReport norms_suite(const VerifyConfig& cfg) {
  VerificationReport rep("norms");
  for (double a : cfg.alphas) {
    const AlphaParam alpha(a);
    for (int k : cfg.ks) {
      for (const NamedFunction& nf : cfg.functions) {
        if (nf.f.is_zero()) continue;
        const GaussPolyFunction& f = nf.f;
        const GaussPolyFunction top1 = dunkl_power(alpha, f, k - 1);
        const double T = f.support_hint();
        for (double p : cfg.ps) {
          const LpContext ctx{alpha, p, cfg.truncation, norm_quad()};
          const json base = {{"alpha", a}, {"k", k}, {"p", p}, {"f", function_json(nf)}};
          const double top1_norm = lp_norm(ctx, top1).value;
          const Remainder rk(alpha, k, f, RemainderMode::recurrence, inner_quad());
          std::unique_ptr<Remainder> rprev;
          if (k >= 2) {
            rprev = std::make_unique<Remainder>(alpha, k - 1, f, RemainderMode::recurrence,
                                                inner_quad());
          }
          Worst chain;
          Worst triangle;
          bool converged = true;
          for (double x : kNormX) {
            const double bps[] = {std::abs(x) + T, std::abs(std::abs(x) - T)};
            const NormResult prev =
                rprev ? lp_norm(ctx, rprev->function(x), rprev->breakpoints(x))
                      : lp_norm(ctx, translated(alpha, f, x, inner_quad()), bps);
            const NormResult cur = lp_norm(ctx, rk.function(x), rk.breakpoints(x));
            converged = converged && prev.converged && cur.converged;
            const double ax = std::abs(x);
            const double constant =
                kSqrt2 * (b_coeff(alpha, k - 1, ax) + (k >= 2 ? ax * b_coeff(alpha, k - 2, ax) : 0.0));
            chain.offer(prev.value / (constant * top1_norm), {{"x", x}, {"constant", constant}});
            triangle.offer(
                cur.value / (prev.value + std::abs(b_coeff(alpha, k - 1, x)) * top1_norm),
                {{"x", x}});
          }
          rep.add_upper("remainder_norm_chain", "remainder_norm_bound", chain.value, 1.0 + 1e-6,
                        merged(base, chain.where), converged);
          rep.add_upper("remainder_norm_triangle", "remainder_norm_step", triangle.value,
                        1.0 + 1e-9, merged(base, triangle.where), converged);

          BesovParams P;
          P.alpha = alpha;
          P.k = k;
          P.p = p;
          P.truncation = cfg.truncation;
          std::vector<double> xs;
          std::vector<double> ns;
          for (int j = 0; j <= 5; ++j) {
            xs.push_back(std::pow(10.0, -2.0 + j / 5.0));
            ns.push_back(remainder_norm(P, f, xs.back()));
          }
          rep.add_range("remainder_scaling_slope", "remainder_power_law",
                        slope_estimate(xs, ns, 1e-2, 1e-1), k - 0.1, k + 0.1,
                        merged(base, {{"window", {1e-2, 1e-1}}}));
        }
      }
    }
  }
  return rep;
}

// ----------------------------------------------------------------- besov

VerificationReport besov_suite(const VerifyConfig& cfg) {
  VerificationReport rep("besov");
  for (double a : cfg.alphas) {
    const AlphaParam alpha(a);
    for (int k : cfg.besov_ks) {
      const int n_min = (k - 1) / 2 + 1;
      Worst moments;
      for (int n0 : {n_min, n_min + 1}) {
        const GaussPolyFunction phi = hermite_phi(alpha, n0, k);
        for (int i = 0; i < n0; ++i) {
          moments.offer(std::abs(half_line_moment(alpha, phi, 2 * i)), {{"n0", n0}, {"i", i}});
        }
      }
      rep.add_upper("phi_moments", "test_function_moments", moments.value, 1e-10,
                    merged({{"alpha", a}, {"k", k}}, moments.where));

      for (double p : cfg.ps) {
        for (const NamedFunction& nf : cfg.besov_functions) {
          BesovParams P;
          P.alpha = alpha;
          P.k = k;
          P.p = p;
          P.q = cfg.qs.front();
          P.beta = cfg.betas.front();
          P.x_grid = cfg.x_grid;
          P.t_grid = cfg.t_grid;
          P.truncation = cfg.truncation;
          P.threads = cfg.threads;
          const BesovProfile profile = besov_profile(P, nf.f);
          rep.append(scaling_report(P, nf.f, &profile));
          for (double q : cfg.qs) {
            for (double beta : cfg.betas) {
              P.q = q;
              P.beta = beta;
              rep.append(equivalence_report(P, nf.f, &profile));
            }
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace

NamedFunction named_function(const std::string& name) { return {name, catalog_function(name)}; }

VerifyConfig::VerifyConfig()
    : functions{named_function("gaussian"), named_function("x_gaussian"),
                named_function("cubic_gaussian")},
      besov_functions{named_function("gaussian")},
      suites(suite_names()),
      threads(default_thread_count()) {
  quad.abs_tol = 1e-13;
  quad.rel_tol = 1e-11;
}

VerifyConfig VerifyConfig::paper_defaults() {
  VerifyConfig c;
  c.alphas = {-0.25, 0.5, 1.5};
  c.ks = {1, 2, 3};
  c.besov_ks = {1, 2, 3};
  c.ps = {1.0, 2.0};
  c.qs = {1.0, kInf};
  c.betas = {0.3, 0.7};
  return c;
}

void VerifyConfig::validate() const {
  if (alphas.empty() || ks.empty() || ps.empty() || qs.empty() || betas.empty()) {
    throw DomainError("verify: parameter lists must not be empty");
  }
  for (double a : alphas) AlphaParam check(a);
  for (int k : ks) {
    if (k < 1 || k > 3) throw DomainError("verify: k must lie in 1..3");
  }
  for (int k : besov_ks) {
    if (k < 1) throw DomainError("verify: besov k must be positive");
  }
  for (const auto& s : suites) {
    const auto& all = suite_names();
    if (std::find(all.begin(), all.end(), s) == all.end()) {
      throw DomainError("verify: unknown suite '" + s + "'");
    }
  }
  if (!(truncation >= 0.0)) throw DomainError("verify: truncation must be nonnegative");
  quad.validate();
  BesovParams P;
  P.x_grid = x_grid;
  P.t_grid = t_grid;
  for (double p : ps) {
    P.p = p;
    for (double q : qs) {
      P.q = q;
      for (double b : betas) {
        P.beta = b;
        P.validate();
      }
    }
  }
}

json VerifyConfig::to_json() const {
  json j;
  j["alpha"] = alphas;
  j["k"] = ks;
  j["besov_k"] = besov_ks;
  j["p"] = ps;
  json qj = json::array();
  for (double q : qs) qj.push_back(number(q));
  j["q"] = qj;
  j["beta"] = betas;
  json fj = json::array();
  for (const auto& nf : functions) fj.push_back(function_json(nf));
  j["functions"] = fj;
  json bj = json::array();
  for (const auto& nf : besov_functions) bj.push_back(function_json(nf));
  j["besov_functions"] = bj;
  j["suites"] = suites;
  j["quad"] = {{"abs_tol", quad.abs_tol}, {"rel_tol", quad.rel_tol}};
  j["norm_quad"] = {{"abs_tol", norm_quad().abs_tol}, {"rel_tol", norm_quad().rel_tol}};
  j["inner_quad"] = {{"abs_tol", inner_quad().abs_tol}, {"rel_tol", inner_quad().rel_tol}};
  j["truncation"] = truncation;
  j["x_grid"] = {{"lo", x_grid.front()}, {"hi", x_grid.back()}, {"points", x_grid.size()}};
  j["t_grid"] = {{"lo", t_grid.front()}, {"hi", t_grid.back()}, {"points", t_grid.size()}};
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"kernel", "translation", "taylor", "norms",
                                              "besov"};
  return names;
}

VerificationReport run_suite(const std::string& name, const VerifyConfig& cfg) {
  if (name == "kernel") return kernel_suite(cfg);
  if (name == "translation") return translation_suite(cfg);
  if (name == "taylor") return taylor_suite(cfg);
  if (name == "norms") return norms_suite(cfg);
  if (name == "besov") return besov_suite(cfg);
  throw DomainError("unknown suite '" + name + "'");
}

bool VerifyOutcome::any_fail() const {
  return std::any_of(suites.begin(), suites.end(),
                     [](const VerificationReport& r) { return r.any_fail(); });
}

json VerifyOutcome::to_json(const VerifyConfig& cfg) const {
  json j;
  j["tool"] = "dunkl-lab";
  j["command"] = "verify";
  j["config"] = cfg.to_json();
  std::size_t n = 0;
  std::size_t counts[4] = {0, 0, 0, 0};
  for (const auto& r : suites) {
    n += r.checks().size();
    for (CheckStatus s : {CheckStatus::pass, CheckStatus::fail, CheckStatus::inconclusive,
                          CheckStatus::info}) {
      counts[static_cast<int>(s)] += r.count(s);
    }
  }
  j["summary"] = {{"checks", n},
                  {"pass", counts[0]},
                  {"fail", counts[1]},
                  {"inconclusive", counts[2]},
                  {"info", counts[3]}};
  json arr = json::array();
  for (const auto& r : suites) arr.push_back(r.to_json());
  j["suites"] = arr;
  return j;
}

VerifyOutcome run_verify(const VerifyConfig& cfg) {
  cfg.validate();
  VerifyOutcome out;
  for (const auto& name : suite_names()) {
    if (std::find(cfg.suites.begin(), cfg.suites.end(), name) == cfg.suites.end()) continue;
    out.suites.push_back(run_suite(name, cfg));
  }
  return out;
}

}  // namespace dunkl
