#include "dunkl/dunklcore.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

namespace dunkl {

namespace {

// c_alpha of the folded translation integral.
double translation_const(const AlphaParam& alpha) {
  const double a = alpha.alpha();
  return std::exp(std::lgamma(a + 1.0) - std::lgamma(a + 0.5)) /
         std::sqrt(std::numbers::pi);
}

// Gamma(alpha+1)^2 / (2^{alpha-1} sqrt(pi) Gamma(alpha+1/2)).
double density_const(const AlphaParam& alpha) {
  const double a = alpha.alpha();
  return std::exp(2.0 * std::lgamma(a + 1.0) - std::lgamma(a + 0.5) -
                  (a - 1.0) * std::numbers::ln2) /
         std::sqrt(std::numbers::pi);
}

// (x+y+z)(z+x-y)(z-x+y) = 2xyz (1 - b_{x,y,z} + b_{z,x,y} + b_{z,y,x}).
double bracket_numerator(double x, double y, double z) {
  return (x + y + z) * (z + x - y) * (z - x + y);
}

QuadSpec plain(const QuadSpec& spec) {
  QuadSpec s = spec;
  s.endpoint_exponent.reset();
  s.right_exponent.reset();
  return s;
}

// int_{sigma S} f(z) W(x,y,z) dmu(z), written over u = |z| in S.
QuadResult density_branch(const AlphaParam& alpha, const RealFn& f, double support,
                          double x, double y, double sigma, const QuadSpec& spec) {
  const TranslationMeasure m = TranslationMeasure::make(x, y);
  const double a = alpha.alpha();
  const double e = a - 0.5;
  const double xy = x * y;
  const double scale =
      density_const(alpha) / (2.0 * xy * std::pow(std::abs(xy), 2.0 * a) * alpha.norm_const());
  const double s1 = m.outer;
  const double s0 = m.inner <= 1e-14 * s1 ? 0.0 : m.inner;
  std::vector<double> cuts;
  if (std::isfinite(support) && support > s0 && support < s1) cuts.push_back(support);
  if (s0 == 0.0) {
    const RealFn g = [&](double u) {
      const double z = sigma * u;
      const double fz = f(z);
      if (fz == 0.0) return 0.0;
      return fz * scale * (bracket_numerator(x, y, z) / z) * std::pow(s1 + u, e);
    };
    return integrate_weighted(g, 0.0, s1, 2.0 * a, e, plain(spec), cuts);
  }
  const RealFn g = [&](double u) {
    const double z = sigma * u;
    const double fz = f(z);
    if (fz == 0.0) return 0.0;
    return fz * scale * sigma * bracket_numerator(x, y, z) * std::pow((s1 + u) * (u + s0), e);
  };
  return integrate_weighted(g, s0, s1, e, e, plain(spec), cuts);
}

}  // namespace

TranslationMeasure TranslationMeasure::make(double x, double y) {
  TranslationMeasure m;
  m.x = x;
  m.y = y;
  if (x == 0.0) {
    m.kind = MeasureKind::point_mass_y;
  } else if (y == 0.0) {
    m.kind = MeasureKind::point_mass_x;
  }
  m.inner = std::abs(std::abs(x) - std::abs(y));
  m.outer = std::abs(x) + std::abs(y);
  return m;
}

bool TranslationMeasure::in_support(double z) const {
  switch (kind) {
    case MeasureKind::point_mass_x:
      return z == x;
    case MeasureKind::point_mass_y:
      return z == y;
    case MeasureKind::density:
      break;
  }
  const double az = std::abs(z);
  return az >= inner && az <= outer;
}

double w_kernel(const AlphaParam& alpha, double x, double y, double z) {
  if (x == 0.0 || y == 0.0) {
    throw DomainError("w_kernel: x and y must be nonzero (point-mass case)");
  }
  const TranslationMeasure m = TranslationMeasure::make(x, y);
  if (z == 0.0 || !m.in_support(z)) return 0.0;
  const double a = alpha.alpha();
  const double bxyz = (x * x + y * y - z * z) / (2.0 * x * y);
  const double bzxy = (z * z + x * x - y * y) / (2.0 * z * x);
  const double bzyx = (z * z + y * y - x * x) / (2.0 * z * y);
  const double bracket = 1.0 - bxyz + bzxy + bzyx;
  const double s1 = m.outer;
  const double s0 = m.inner;
  const double delta = std::pow((s1 * s1 - z * z) * (z * z - s0 * s0), a - 0.5) /
                       std::pow(std::abs(x * y * z), 2.0 * a);
  return density_const(alpha) * bracket * delta;
}

KernelMass kernel_mass(const AlphaParam& alpha, double x, double y, const QuadSpec& spec) {
  KernelMass out;
  if (x == 0.0 || y == 0.0) {
    out.branch_plus = 1.0;
    out.total_variation = 1.0;
    return out;
  }
  const RealFn one = [](double) { return 1.0; };
  const double inf = std::numeric_limits<double>::infinity();
  const QuadResult plus = density_branch(alpha, one, inf, x, y, 1.0, spec);
  const QuadResult minus = density_branch(alpha, one, inf, x, y, -1.0, spec);
  out.branch_plus = plus.value;
  out.branch_minus = minus.value;
  out.total_variation = std::abs(plus.value) + std::abs(minus.value);
  out.converged = plus.converged && minus.converged;
  return out;
}

ParityParts parity_parts(const Evaluable& f) {
  ParityParts p;
  p.support = f.support;
  p.even = [f](double z) { return 0.5 * (f(z) + f(-z)); };
  p.odd_over_x = [f](double z) {
    constexpr double kSmall = 1e-5;
    if (std::abs(z) > kSmall) return (f(z) - f(-z)) / (2.0 * z);
    return (f(kSmall) - f(-kSmall)) / (2.0 * kSmall);
  };
  return p;
}

ParityParts parity_parts(const GaussPolyFunction& f) {
  ParityParts p;
  p.support = f.normable() ? f.support_hint() : std::numeric_limits<double>::infinity();
  p.even = [e = f.even_part()](double z) { return e(z); };
  std::vector<double> c;
  for (std::size_t n = 1; n < f.coeffs().size(); n += 2) {
    c.resize(n, 0.0);
    c[n - 1] = f.coeffs()[n];
  }
  GaussPolyFunction odd(std::move(c), f.gauss_scale(), f.support_hint_field());
  p.odd_over_x = [odd](double z) { return odd(z); };
  return p;
}

QuadResult translate(const AlphaParam& alpha, const ParityParts& f, double x, double y,
                     const QuadSpec& spec) {
  if (x == 0.0) return {f(y), 0.0, 1, true};
  if (y == 0.0) return {f(x), 0.0, 1, true};
  const double T = f.support;
  // Everything lies beyond the support: the integrand is negligible.
  if (std::isfinite(T) && std::abs(std::abs(x) - std::abs(y)) > T) return {};
  const double a = alpha.alpha();
  const double xy = x * y;
  const double s = x + y;
  const double base_pos = (x - y) * (x - y);
  const double base_neg = (x + y) * (x + y);
  const RealFn g = [&](double t) {
    const double z2 = xy >= 0.0 ? base_pos + 2.0 * xy * (1.0 - t)
                                : base_neg - 2.0 * xy * (1.0 + t);
    const double z = std::sqrt(std::max(z2, 0.0));
    if (std::isfinite(T) && z > T) return 0.0;
    return f.even(z) + s * f.odd_over_x(z);
  };
  std::vector<double> cuts;
  if (std::isfinite(T)) {
    const double tstar = (x * x + y * y - T * T) / (2.0 * xy);
    if (tstar > -1.0 && tstar < 1.0) cuts.push_back(tstar);
  }
  QuadResult r = integrate_weighted(g, -1.0, 1.0, a - 0.5, a + 0.5, plain(spec), cuts);
  const double c = translation_const(alpha);
  r.value *= c;
  r.error *= c;
  return r;
}

QuadResult translate(const AlphaParam& alpha, const Evaluable& f, double x, double y,
                     const QuadSpec& spec) {
  if (x == 0.0) return {f(y), 0.0, 1, true};
  if (y == 0.0) return {f(x), 0.0, 1, true};
  return translate(alpha, parity_parts(f), x, y, spec);
}

QuadResult translate(const AlphaParam& alpha, const GaussPolyFunction& f, double x,
                     double y, const QuadSpec& spec) {
  return translate(alpha, parity_parts(f), x, y, spec);
}

QuadResult translate_by_density(const AlphaParam& alpha, const Evaluable& f, double x,
                                double y, const QuadSpec& spec) {
  if (x == 0.0) return {f(y), 0.0, 1, true};
  if (y == 0.0) return {f(x), 0.0, 1, true};
  QuadResult r = density_branch(alpha, f.fn, f.support, x, y, 1.0, spec);
  r += density_branch(alpha, f.fn, f.support, x, y, -1.0, spec);
  return r;
}

std::complex<double> translate_kernel(const AlphaParam& alpha, double t, double x,
                                      double y, const QuadSpec& spec) {
  const double a = alpha.alpha();
  ParityParts re;
  re.even = [a, t](double z) { return bessel_j_normalized(a, t * z); };
  re.odd_over_x = [](double) { return 0.0; };
  ParityParts im;
  im.even = [](double) { return 0.0; };
  im.odd_over_x = [a, t](double z) {
    return t / (2.0 * (a + 1.0)) * bessel_j_normalized(a + 1.0, t * z);
  };
  return {translate(alpha, re, x, y, spec).value, translate(alpha, im, x, y, spec).value};
}

Evaluable translated(const AlphaParam& alpha, const Evaluable& f, double x,
                     const QuadSpec& spec) {
  ParityParts parts = parity_parts(f);
  return Evaluable{[alpha, parts, x, spec](double y) {
                     return translate(alpha, parts, x, y, spec).value;
                   },
                   std::abs(x) + f.support};
}

Evaluable translated(const AlphaParam& alpha, const GaussPolyFunction& f, double x,
                     const QuadSpec& spec) {
  ParityParts parts = parity_parts(f);
  return Evaluable{[alpha, parts, x, spec](double y) {
                     return translate(alpha, parts, x, y, spec).value;
                   },
                   std::abs(x) + parts.support};
}

QuadResult convolve(const AlphaParam& alpha, const Evaluable& f, const Evaluable& g,
                    double x, const QuadSpec& spec, ConvolutionOrder order) {
  const Evaluable* inner = &f;
  const Evaluable* outer = &g;
  if (order == ConvolutionOrder::narrow_outer && f.support < g.support) {
    std::swap(inner, outer);
  }
  if (!inner->decays() || !outer->decays()) {
    throw DomainError("convolve: both factors need a finite support radius");
  }
  const ParityParts parts = parity_parts(*inner);
  const QuadSpec nested = spec.nested();
  const Evaluable& w = *outer;
  const Evaluable integrand{[&](double y) {
                              const double gy = w(y);
                              if (gy == 0.0) return 0.0;
                              return translate(alpha, parts, x, -y, nested).value * gy;
                            },
                            w.support};
  const double Tf = inner->support;
  const double cuts[] = {std::abs(x) - Tf, std::abs(x) + Tf, Tf};
  return integrate_mu(alpha, integrand, plain(spec), cuts);
}

Evaluable convolved(const AlphaParam& alpha, const Evaluable& f, const Evaluable& g,
                    const QuadSpec& spec, ConvolutionOrder order) {
  return Evaluable{[alpha, f, g, spec, order](double x) {
                     return convolve(alpha, f, g, x, spec, order).value;
                   },
                   f.support + g.support};
}

namespace {

// Coefficients d_j with f = sum_j d_j Lambda^j e^{-s x^2}; Lambda^j e^{-s x^2}
// has degree j and leading coefficient (-2s)^j.
std::vector<double> lambda_gauss_coeffs(const AlphaParam& alpha, const GaussPolyFunction& f) {
  const double s = f.gauss_scale();
  const GaussPolyFunction base({1.0}, s);
  std::vector<GaussPolyFunction> basis{base};
  for (int j = 1; j <= f.degree(); ++j) basis.push_back(dunkl_apply(alpha, basis.back()));
  std::vector<double> rest = f.coeffs();
  std::vector<double> d(rest.size(), 0.0);
  for (int j = f.degree(); j >= 0; --j) {
    d[j] = rest[j] / std::pow(-2.0 * s, j);
    const auto& bc = basis[j].coeffs();
    for (std::size_t n = 0; n < bc.size(); ++n) rest[n] -= d[j] * bc[n];
  }
  return d;
}

}  // namespace

GaussPolyFunction convolved_exact(const AlphaParam& alpha, const GaussPolyFunction& f,
                                  const GaussPolyFunction& g) {
  if (f.is_zero() || g.is_zero()) return {};
  if (!f.normable() || !g.normable()) {
    throw DomainError("convolved_exact: both factors need a Gaussian factor");
  }
  const double a = f.gauss_scale();
  const double b = g.gauss_scale();
  const std::vector<double> df = lambda_gauss_coeffs(alpha, f);
  const std::vector<double> dg = lambda_gauss_coeffs(alpha, g);
  std::vector<double> d(df.size() + dg.size() - 1, 0.0);
  for (std::size_t i = 0; i < df.size(); ++i) {
    for (std::size_t j = 0; j < dg.size(); ++j) d[i + j] += df[i] * dg[j];
  }
  const double amp = std::pow(2.0 * (a + b), -(alpha.alpha() + 1.0));
  GaussPolyFunction term({amp}, a * b / (a + b));
  GaussPolyFunction out({}, term.gauss_scale());
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (j > 0) term = dunkl_apply(alpha, term);
    out = out + d[j] * term;
  }
  return out;
}

std::complex<double> dunkl_transform(const AlphaParam& alpha, const Evaluable& f,
                                     double xi, const QuadSpec& spec) {
  if (!f.decays()) throw DomainError("dunkl_transform: f needs a finite support radius");
  const double a = alpha.alpha();
  const Evaluable re{[&](double y) { return f(y) * bessel_j_normalized(a, xi * y); },
                     f.support};
  const Evaluable im{[&](double y) {
                       return f(y) * xi * y / (2.0 * (a + 1.0)) *
                              bessel_j_normalized(a + 1.0, xi * y);
                     },
                     f.support};
  return {integrate_mu(alpha, re, plain(spec)).value,
          -integrate_mu(alpha, im, plain(spec)).value};
}

double translate_convolution_commutes(const AlphaParam& alpha, const Evaluable& f,
                                      const Evaluable& h, double t, double x,
                                      const QuadSpec& spec) {
  const QuadSpec inner = spec.nested();
  const double lhs = translate(alpha, convolved(alpha, f, h, inner), t, x, spec).value;
  const double mid = convolve(alpha, translated(alpha, f, t, inner), h, x, spec).value;
  const double rhs = convolve(alpha, f, translated(alpha, h, t, inner), x, spec).value;
  return std::max({std::abs(lhs - mid), std::abs(lhs - rhs), std::abs(mid - rhs)});
}

}  // namespace dunkl
