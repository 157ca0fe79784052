#ifndef DUNKL_VERIFY_HPP
#define DUNKL_VERIFY_HPP

#include <string>
#include <vector>

#include "dunkl/besov.hpp"
#include "dunkl/funcalg.hpp"
#include "dunkl/quad.hpp"
#include "dunkl/report.hpp"

namespace dunkl {

struct NamedFunction {
  std::string name;
  GaussPolyFunction f;
};

/// A catalog function under its own name.
NamedFunction named_function(const std::string& name);

/**
 * The parameter matrix behind `dunkl-lab verify`. Every suite loops over the
 * relevant slice of it; Besov profiles are shared across q and beta.
 */
struct VerifyConfig {
  std::vector<double> alphas{0.5};
  std::vector<int> ks{1, 2};
  std::vector<double> ps{2.0};
  std::vector<double> qs{1.0};
  std::vector<double> betas{0.4};
  /// Besov diagnostics run with their own k list.
  std::vector<int> besov_ks{2};
  std::vector<NamedFunction> functions;
  std::vector<NamedFunction> besov_functions;
  /// Translations and kernel integrals inside the checks.
  QuadSpec quad;
  /// L^p truncation radius; 0 uses the function's support.
  double truncation = 0.0;
  std::vector<double> x_grid = log_grid(1e-3, 1e2, 25);
  std::vector<double> t_grid = log_grid(1e-3, 1e2, 25);
  std::vector<std::string> suites;
  int threads = 1;

  VerifyConfig();
  /// alpha in {-0.25, 0.5, 1.5}, k in {1, 2, 3}, p in {1, 2}, q in {1, inf},
  /// beta in {0.3, 0.7}, all three catalog functions.
  static VerifyConfig paper_defaults();

  /// Throws DomainError on any inadmissible entry.
  void validate() const;
  nlohmann::ordered_json to_json() const;
};

/// kernel, translation, taylor, norms, besov.
const std::vector<std::string>& suite_names();

VerificationReport run_suite(const std::string& name, const VerifyConfig& cfg);

struct VerifyOutcome {
  std::vector<VerificationReport> suites;
  bool any_fail() const;
  /// The report.json document.
  nlohmann::ordered_json to_json(const VerifyConfig& cfg) const;
};

VerifyOutcome run_verify(const VerifyConfig& cfg);

}  // namespace dunkl

#endif  // DUNKL_VERIFY_HPP
