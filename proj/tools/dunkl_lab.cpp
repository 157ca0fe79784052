#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dunkl/besov.hpp"
#include "dunkl/dunklcore.hpp"
#include "dunkl/funcalg.hpp"
#include "dunkl/report.hpp"
#include "dunkl/special.hpp"
#include "dunkl/taylor.hpp"
#include "dunkl/verify.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace dunkl;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ------------------------------------------------------------ settings

struct Settings {
  VerifyConfig v;
  std::vector<double> xs{1.0};
  std::vector<double> ys{0.5};
  std::vector<double> as{0.3};
  std::vector<double> lambdas{1.0};
  std::string out = ".";
  std::string format = "csv";
};

double parse_q(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf" || s == "infinity" || s == "Inf") return std::numeric_limits<double>::infinity();
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
  }
  throw ConfigError("q must be a number or \"inf\"");
}

template <class T>
std::vector<T> list_of(const json& j, const char* key) {
  try {
    if (j.is_array()) return j.get<std::vector<T>>();
    return {j.get<T>()};
  } catch (const json::exception&) {
    throw ConfigError(std::string("'") + key + "' has the wrong type");
  }
}

std::vector<double> q_list(const json& j) {
  std::vector<double> out;
  if (j.is_array()) {
    for (const auto& e : j) out.push_back(parse_q(e));
  } else {
    out.push_back(parse_q(j));
  }
  return out;
}

NamedFunction parse_function(const json& j) {
  if (j.is_string()) return named_function(j.get<std::string>());
  if (j.is_object()) {
    if (!j.contains("coeffs") || !j.contains("gauss_scale")) {
      throw ConfigError("a function record needs 'coeffs' and 'gauss_scale'");
    }
    try {
      return {j.value("name", std::string("custom")),
              GaussPolyFunction(j.at("coeffs").get<std::vector<double>>(),
                                j.at("gauss_scale").get<double>())};
    } catch (const json::exception&) {
      throw ConfigError("malformed function record");
    }
  }
  throw ConfigError("a function is a catalog name or {coeffs, gauss_scale}");
}

std::vector<NamedFunction> function_list(const json& j) {
  std::vector<NamedFunction> out;
  if (j.is_array()) {
    for (const auto& e : j) out.push_back(parse_function(e));
  } else {
    out.push_back(parse_function(j));
  }
  return out;
}

std::vector<double> parse_grid(const json& j, const char* key) {
  if (j.is_array()) return list_of<double>(j, key);
  if (j.is_object()) {
    try {
      return log_grid(j.at("lo").get<double>(), j.at("hi").get<double>(),
                      j.at("per_decade").get<int>());
    } catch (const json::exception&) {
      throw ConfigError(std::string("'") + key + "' needs lo, hi and per_decade");
    }
  }
  throw ConfigError(std::string("'") + key + "' must be an array or {lo, hi, per_decade}");
}

void apply_config(Settings& s, const json& c) {
  if (!c.is_object()) throw ConfigError("the config must be a JSON object");
  if (c.value("paper_defaults", false)) s.v = VerifyConfig::paper_defaults();
  for (auto it = c.begin(); it != c.end(); ++it) {
    const std::string& key = it.key();
    const json& val = it.value();
    if (key == "paper_defaults") continue;
    if (key == "alpha") {
      s.v.alphas = list_of<double>(val, "alpha");
    } else if (key == "k") {
      s.v.ks = list_of<int>(val, "k");
    } else if (key == "besov_k") {
      s.v.besov_ks = list_of<int>(val, "besov_k");
    } else if (key == "p") {
      s.v.ps = list_of<double>(val, "p");
    } else if (key == "q") {
      s.v.qs = q_list(val);
    } else if (key == "beta") {
      s.v.betas = list_of<double>(val, "beta");
    } else if (key == "function") {
      s.v.functions = function_list(val);
      s.v.besov_functions = s.v.functions;
    } else if (key == "functions") {
      s.v.functions = function_list(val);
    } else if (key == "besov_functions") {
      s.v.besov_functions = function_list(val);
    } else if (key == "x") {
      s.xs = list_of<double>(val, "x");
    } else if (key == "y") {
      s.ys = list_of<double>(val, "y");
    } else if (key == "a") {
      s.as = list_of<double>(val, "a");
    } else if (key == "lambda") {
      s.lambdas = list_of<double>(val, "lambda");
    } else if (key == "quad") {
      if (!val.is_object()) throw ConfigError("'quad' must be an object");
      if (val.contains("abs_tol")) s.v.quad.abs_tol = list_of<double>(val["abs_tol"], "abs_tol").at(0);
      if (val.contains("rel_tol")) s.v.quad.rel_tol = list_of<double>(val["rel_tol"], "rel_tol").at(0);
      if (val.contains("max_subdivisions")) {
        s.v.quad.max_subdivisions = list_of<int>(val["max_subdivisions"], "max_subdivisions").at(0);
      }
    } else if (key == "truncation") {
      s.v.truncation = list_of<double>(val, "truncation").at(0);
    } else if (key == "x_grid") {
      s.v.x_grid = parse_grid(val, "x_grid");
    } else if (key == "t_grid") {
      s.v.t_grid = parse_grid(val, "t_grid");
    } else if (key == "suites") {
      s.v.suites = list_of<std::string>(val, "suites");
    } else if (key == "threads") {
      s.v.threads = list_of<int>(val, "threads").at(0);
    } else if (key == "out") {
      s.out = list_of<std::string>(val, "out").at(0);
    } else if (key == "format") {
      s.format = list_of<std::string>(val, "format").at(0);
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
}

// Flag values; an option only overrides the config when it was given.
struct Flags {
  std::string config;
  bool paper_defaults = false;
  std::vector<double> alpha, p, beta, x, y, a, lambda, x_grid, t_grid;
  std::vector<int> k, besov_k;
  std::vector<std::string> q, suites;
  std::string function, out, format;
  double abs_tol = 0.0, rel_tol = 0.0, trunc = 0.0;
  int threads = 0;
  std::vector<CLI::Option*> given;

  bool has(const std::string& name) const {
    return std::any_of(given.begin(), given.end(), [&](const CLI::Option* o) {
      return o->get_name() == name && o->count() > 0;
    });
  }
};

void add_flags(CLI::App* cmd, Flags& f) {
  auto add = [&](CLI::Option* o) { f.given.push_back(o); };
  add(cmd->add_option("--config", f.config, "JSON config file")->check(CLI::ExistingFile));
  add(cmd->add_flag("--paper-defaults", f.paper_defaults,
                    "alpha {-0.25,0.5,1.5}, k {1,2,3}, p {1,2}, q {1,inf}, beta {0.3,0.7}"));
  add(cmd->add_option("--alpha", f.alpha, "alpha > -1/2")->delimiter(','));
  add(cmd->add_option("--k", f.k, "remainder order")->delimiter(','));
  add(cmd->add_option("--besov-k", f.besov_k, "order used by the Besov suite")->delimiter(','));
  add(cmd->add_option("--p", f.p, "Lebesgue exponent")->delimiter(','));
  add(cmd->add_option("--q", f.q, "outer exponent, number or inf")->delimiter(','));
  add(cmd->add_option("--beta", f.beta, "smoothness in (0, 1)")->delimiter(','));
  add(cmd->add_option("--function", f.function,
                      "gaussian, x_gaussian, cubic_gaussian, zero, or a JSON record"));
  add(cmd->add_option("--x", f.x, "x values")->delimiter(','));
  add(cmd->add_option("--y", f.y, "y values")->delimiter(','));
  add(cmd->add_option("--a", f.a, "evaluation points a")->delimiter(','));
  add(cmd->add_option("--lambda", f.lambda, "spectral variable")->delimiter(','));
  add(cmd->add_option("--x-grid", f.x_grid, "LO HI PER_DECADE")->expected(3));
  add(cmd->add_option("--t-grid", f.t_grid, "LO HI PER_DECADE")->expected(3));
  add(cmd->add_option("--abs-tol", f.abs_tol, "absolute quadrature tolerance"));
  add(cmd->add_option("--rel-tol", f.rel_tol, "relative quadrature tolerance"));
  add(cmd->add_option("--trunc", f.trunc, "L^p truncation radius, 0 for automatic"));
  add(cmd->add_option("--threads", f.threads, "worker threads"));
  add(cmd->add_option("--out", f.out, "output directory"));
  add(cmd->add_option("--format", f.format, "csv or json"));
  add(cmd->add_option("--suite", f.suites, "restrict verify to these suites")->delimiter(','));
}

std::vector<double> flag_grid(const std::vector<double>& g) {
  if (g.size() != 3 || g[2] != std::floor(g[2])) throw ConfigError("a grid is LO HI PER_DECADE");
  return log_grid(g[0], g[1], static_cast<int>(g[2]));
}

Settings resolve(const Flags& f) {
  Settings s;
  json c = json::object();
  if (!f.config.empty()) {
    std::ifstream in(f.config);
    if (!in) throw IoError("cannot read " + f.config);
    try {
      c = json::parse(in);
    } catch (const json::parse_error& e) {
      throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
  }
  if (f.paper_defaults) c["paper_defaults"] = true;
  apply_config(s, c);

  if (f.has("--alpha")) s.v.alphas = f.alpha;
  if (f.has("--k")) s.v.ks = f.k;
  if (f.has("--besov-k")) s.v.besov_ks = f.besov_k;
  if (f.has("--p")) s.v.ps = f.p;
  if (f.has("--q")) {
    s.v.qs.clear();
    for (const auto& q : f.q) s.v.qs.push_back(parse_q(q));
  }
  if (f.has("--beta")) s.v.betas = f.beta;
  if (f.has("--function")) {
    const json spec = f.function.starts_with("{") ? json::parse(f.function, nullptr, false)
                                                  : json(f.function);
    if (spec.is_discarded()) throw ConfigError("--function is not valid JSON");
    s.v.functions = function_list(spec);
    s.v.besov_functions = s.v.functions;
  }
  if (f.has("--x")) s.xs = f.x;
  if (f.has("--y")) s.ys = f.y;
  if (f.has("--a")) s.as = f.a;
  if (f.has("--lambda")) s.lambdas = f.lambda;
  if (f.has("--x-grid")) s.v.x_grid = flag_grid(f.x_grid);
  if (f.has("--t-grid")) s.v.t_grid = flag_grid(f.t_grid);
  if (f.has("--abs-tol")) s.v.quad.abs_tol = f.abs_tol;
  if (f.has("--rel-tol")) s.v.quad.rel_tol = f.rel_tol;
  if (f.has("--trunc")) s.v.truncation = f.trunc;
  if (f.has("--threads")) s.v.threads = f.threads;
  if (f.has("--out")) s.out = f.out;
  if (f.has("--format")) s.format = f.format;
  if (f.has("--suite")) s.v.suites = f.suites;

  if (s.format != "csv" && s.format != "json") throw ConfigError("--format must be csv or json");
  if (s.v.threads < 1) throw ConfigError("threads must be positive");
  if (const char* env = std::getenv("DUNKL_LAB_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) s.v.threads = std::min(s.v.threads, cap);
  }
  if (s.v.functions.empty() || s.v.besov_functions.empty()) {
    throw ConfigError("function lists must not be empty");
  }
  s.v.validate();
  return s;
}

// ------------------------------------------------------------- output

json json_value(double v) {
  if (std::isfinite(v)) return v;
  return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
}

// A named table; cells are numbers or strings.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;

  std::string csv() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) os << ',';
        const json& c = row[i];
        if (c.is_number()) {
          os << format_double(c.get<double>());
        } else if (c.is_boolean()) {
          os << (c.get<bool>() ? 1 : 0);
        } else {
          os << c.get<std::string>();
        }
      }
      os << '\n';
    }
    return os.str();
  }

  json records() const {
    json arr = json::array();
    for (const auto& row : rows) {
      json r = json::object();
      for (std::size_t i = 0; i < row.size(); ++i) r[columns[i]] = row[i];
      arr.push_back(r);
    }
    return arr;
  }
};

std::vector<json> row(std::initializer_list<json> cells) {
  std::vector<json> r;
  for (const auto& c : cells) r.push_back(c.is_number() ? json_value(c.get<double>()) : c);
  return r;
}

// Files are staged in memory and only written once everything succeeded.
class Output {
 public:
  explicit Output(std::string dir) : dir_(std::move(dir)) {}

  void add(std::string name, std::string content) {
    files_.emplace_back(std::move(name), std::move(content));
  }

  void add_table(const Table& t, const std::string& format) {
    if (format == "csv") {
      add(t.name + ".csv", t.csv());
    } else {
      add(t.name + ".json", t.records().dump(2) + "\n");
    }
  }

  void commit() const {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw IoError("cannot create " + dir_ + ": " + ec.message());
    for (const auto& [name, content] : files_) {
      const fs::path final_path = fs::path(dir_) / name;
      const fs::path tmp = fs::path(dir_) / ("." + name + ".tmp");
      {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << content;
        out.flush();
        if (!out) {
          fs::remove(tmp, ec);
          throw IoError("cannot write " + tmp.string());
        }
      }
      fs::rename(tmp, final_path, ec);
      if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cannot rename to " + final_path.string());
      }
      std::cout << final_path.string() << '\n';
    }
  }

 private:
  std::string dir_;
  std::vector<std::pair<std::string, std::string>> files_;
};

json function_record(const NamedFunction& nf) {
  return {{"name", nf.name}, {"coeffs", nf.f.coeffs()}, {"gauss_scale", nf.f.gauss_scale()}};
}

// Profile commands take the first entry of each parameter list.
BesovParams besov_params(const Settings& s) {
  BesovParams P;
  P.alpha = AlphaParam(s.v.alphas.front());
  P.k = s.v.ks.front();
  P.p = s.v.ps.front();
  P.q = s.v.qs.front();
  P.beta = s.v.betas.front();
  P.x_grid = s.v.x_grid;
  P.t_grid = s.v.t_grid;
  P.truncation = s.v.truncation;
  P.threads = s.v.threads;
  P.validate();
  return P;
}

// ------------------------------------------------------------ commands

int cmd_kernel(const Settings& s) {
  Table t{"kernel",
          {"alpha", "x", "y", "lambda", "kernel_re", "kernel_im", "mass_on_support",
           "mass_on_mirror", "total_variation", "converged"},
          {}};
  for (double x : s.xs) {
    for (double y : s.ys) {
      if (x == 0.0 || y == 0.0) throw ConfigError("kernel needs x, y != 0");
    }
  }
  for (double a : s.v.alphas) {
    const AlphaParam alpha(a);
    for (double x : s.xs) {
      for (double y : s.ys) {
        const KernelMass m = kernel_mass(alpha, x, y, s.v.quad);
        for (double lam : s.lambdas) {
          const std::complex<double> e = dunkl_kernel(alpha, {0.0, lam}, x);
          t.rows.push_back(row({a, x, y, lam, e.real(), e.imag(), m.branch_plus, m.branch_minus,
                                m.total_variation, m.converged}));
        }
      }
    }
  }
  Output out(s.out);
  out.add_table(t, s.format);
  out.commit();
  return 0;
}

int cmd_translate(const Settings& s) {
  Table t{"translate", {"alpha", "function", "x", "y", "value", "error", "converged"}, {}};
  for (double a : s.v.alphas) {
    const AlphaParam alpha(a);
    for (const auto& nf : s.v.functions) {
      for (double x : s.xs) {
        for (double y : s.ys) {
          const QuadResult r = translate(alpha, nf.f, x, y, s.v.quad);
          t.rows.push_back(row({a, nf.name, x, y, r.value, r.error, r.converged}));
        }
      }
    }
  }
  Output out(s.out);
  out.add_table(t, s.format);
  out.commit();
  return 0;
}

int cmd_taylor(const Settings& s) {
  Table t{"taylor",
          {"alpha", "k", "function", "x", "a", "translate", "taylor_sum", "remainder_integral",
           "remainder_recurrence", "residual"},
          {}};
  for (double a : s.v.alphas) {
    const AlphaParam alpha(a);
    for (int k : s.v.ks) {
      for (const auto& nf : s.v.functions) {
        std::vector<GaussPolyFunction> powers{nf.f};
        for (int j = 1; j < k; ++j) powers.push_back(dunkl_apply(alpha, powers.back()));
        for (double x : s.xs) {
          for (double at : s.as) {
            double sum = 0.0;
            for (int j = 0; j < k; ++j) sum += b_coeff(alpha, j, x) * powers[j](at);
            const double tx = translate(alpha, nf.f, x, at, s.v.quad).value;
            const double ri =
                remainder(alpha, k, nf.f, x, at, RemainderMode::integral, s.v.quad).value;
            const double rr =
                remainder(alpha, k, nf.f, x, at, RemainderMode::recurrence, s.v.quad).value;
            t.rows.push_back(row({a, k, nf.name, x, at, tx, sum, ri, rr, tx - sum - ri}));
          }
        }
      }
    }
  }
  Output out(s.out);
  out.add_table(t, s.format);
  out.commit();
  return 0;
}

int cmd_sweep(const Settings& s) {
  const BesovParams P = besov_params(s);
  const BesovProfile pr = besov_profile(P, s.v.functions.front().f);
  Table tx{"sweep_x", {"x", "omega", "omega_tilde", "k_upper"}, {}};
  for (std::size_t i = 0; i < pr.x_grid.size(); ++i) {
    tx.rows.push_back(
        row({pr.x_grid[i], pr.omega[i], pr.omega_tilde[i], pr.k_upper[i].value()}));
  }
  Table tt{"sweep_t", {"t", "conv_norm"}, {}};
  for (std::size_t i = 0; i < pr.t_grid.size(); ++i) {
    tt.rows.push_back(row({pr.t_grid[i], pr.conv_norm[i]}));
  }
  Output out(s.out);
  if (s.format == "csv") {
    out.add_table(tx, "csv");
    out.add_table(tt, "csv");
  } else {
    json doc = {{"x", tx.records()}, {"t", tt.records()}};
    out.add("sweep.json", doc.dump(2) + "\n");
  }
  out.commit();
  if (pr.quadrature_failures > 0) {
    std::cerr << "warning: " << pr.quadrature_failures << " quadrature failures\n";
  }
  return 0;
}

int cmd_besov(const Settings& s) {
  const BesovParams P = besov_params(s);
  const NamedFunction& nf = s.v.functions.front();
  const BesovProfile pr = besov_profile(P, nf.f);
  VerificationReport rep = equivalence_report(P, nf.f, &pr);
  rep.append(scaling_report(P, nf.f, &pr));

  Table t{"besov", {"x_or_t", "value", "kind"}, {}};
  for (std::size_t i = 0; i < pr.x_grid.size(); ++i) {
    t.rows.push_back(row({pr.x_grid[i], pr.omega[i], "omega"}));
  }
  for (std::size_t i = 0; i < pr.x_grid.size(); ++i) {
    t.rows.push_back(row({pr.x_grid[i], pr.omega_tilde[i], "omega_tilde"}));
  }
  for (std::size_t i = 0; i < pr.x_grid.size(); ++i) {
    t.rows.push_back(row({pr.x_grid[i], pr.k_upper[i].value(), "k_upper"}));
  }
  for (std::size_t i = 0; i < pr.t_grid.size(); ++i) {
    t.rows.push_back(row({pr.t_grid[i], pr.conv_norm[i], "conv_norm"}));
  }

  const std::vector<double> cs(pr.conv_norm.begin(), pr.conv_norm.end());
  json semi = json::object();
  const auto put = [&](SeminormKind kind, const std::vector<double>& grid,
                       const std::vector<double>& vals, double exponent) {
    const SeminormEstimate e = seminorm_from_samples(kind, grid, vals, exponent, P.q);
    semi[to_string(kind)] = {{"value", json_value(e.value)}, {"diverging", e.diverging}};
  };
  std::vector<double> ks;
  for (const auto& k : pr.k_upper) ks.push_back(k.value());
  put(SeminormKind::B, pr.x_grid, pr.omega, P.exponent());
  put(SeminormKind::B_tilde, pr.x_grid, pr.omega_tilde, P.exponent());
  put(SeminormKind::K, pr.x_grid, ks, P.beta);
  put(SeminormKind::C, pr.t_grid, cs, P.exponent());

  json doc;
  doc["tool"] = "dunkl-lab";
  doc["command"] = "besov";
  doc["config"] = {{"alpha", P.alpha.alpha()}, {"k", P.k},
                   {"p", P.p},                 {"q", json_value(P.q)},
                   {"beta", P.beta},           {"function", function_record(nf)}};
  doc["seminorms"] = semi;
  doc["report"] = rep.to_json();

  Output out(s.out);
  out.add_table(t, s.format);
  out.add("report.json", doc.dump(2) + "\n");
  out.commit();
  return rep.any_fail() ? kExitFail : 0;
}

int cmd_verify(const Settings& s) {
  const VerifyOutcome outcome = run_verify(s.v);
  Table t{"checks",
          {"suite", "id", "anchor", "status", "relation", "measured", "lower", "tolerance"},
          {}};
  std::size_t fails = 0;
  for (const auto& rep : outcome.suites) {
    for (const auto& c : rep.checks()) {
      t.rows.push_back(row({rep.suite(), c.id, c.anchor, to_string(c.status), c.relation,
                            c.measured, c.lower, c.tolerance}));
      if (c.status == CheckStatus::fail) {
        ++fails;
        std::cerr << "FAIL " << rep.suite() << '/' << c.id << " measured "
                  << format_double(c.measured) << " inputs " << c.inputs.dump() << '\n';
      }
    }
  }
  Output out(s.out);
  out.add("report.json", outcome.to_json(s.v).dump(2) + "\n");
  out.add_table(t, s.format);
  out.commit();
  std::cout << t.rows.size() << " checks, " << fails << " failed\n";
  return outcome.any_fail() ? kExitFail : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dunkl harmonic analysis lab: evaluations, sweeps and verification"};
  app.require_subcommand(1);
  Flags flags;
  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Settings&);
  };
  const Command commands[] = {
      {"verify", "run the verification suites and write report.json", cmd_verify},
      {"sweep", "tabulate omega, omega_tilde, K_upper and ||f * phi_t||", cmd_sweep},
      {"kernel", "Dunkl kernel and translation kernel masses", cmd_kernel},
      {"translate", "generalized translation tau_x f(y)", cmd_translate},
      {"taylor", "Taylor sum and remainder at (x, a)", cmd_taylor},
      {"besov", "seminorm estimates and equivalence checks", cmd_besov},
  };
  std::vector<Flags> per_command(std::size(commands));
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < std::size(commands); ++i) {
    CLI::App* sub = app.add_subcommand(commands[i].name, commands[i].help);
    add_flags(sub, per_command[i]);
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (!subs[i]->parsed()) continue;
    try {
      const Settings s = resolve(per_command[i]);
      return commands[i].run(s);
    } catch (const ConfigError& e) {
      std::cerr << "config error: " << e.what() << '\n';
    } catch (const DomainError& e) {
      std::cerr << "config error: " << e.what() << '\n';
    } catch (const IoError& e) {
      std::cerr << "I/O error: " << e.what() << '\n';
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
    }
    return kExitConfig;
  }
  return kExitConfig;
}
