#ifndef DUNKL_REPORT_HPP
#define DUNKL_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"

namespace dunkl {

enum class CheckStatus { pass, fail, inconclusive, info };

std::string to_string(CheckStatus s);

/**
 * One verified property. `measured` is compared with `tolerance` through
 * `relation` ("<=", ">=" or "in" for [lower, tolerance]); `inputs` holds
 * everything needed to rerun the check by hand.
 */
struct CheckRecord {
  std::string id;
  std::string anchor;
  std::string relation = "<=";
  double measured = 0.0;
  double lower = 0.0;
  double tolerance = 0.0;
  CheckStatus status = CheckStatus::inconclusive;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  std::string note;
};

class VerificationReport {
 public:
  explicit VerificationReport(std::string suite = "") : suite_(std::move(suite)) {}

  const std::string& suite() const noexcept { return suite_; }
  const std::vector<CheckRecord>& checks() const noexcept { return checks_; }
  nlohmann::ordered_json& metadata() noexcept { return metadata_; }
  const nlohmann::ordered_json& metadata() const noexcept { return metadata_; }

  /// measured <= tolerance. A non-finite measurement or converged = false
  /// gives INCONCLUSIVE.
  CheckRecord& add_upper(std::string id, std::string anchor, double measured, double tolerance,
                         nlohmann::ordered_json inputs, bool converged = true);
  /// measured >= tolerance.
  CheckRecord& add_lower(std::string id, std::string anchor, double measured, double tolerance,
                         nlohmann::ordered_json inputs, bool converged = true);
  /// lower <= measured <= upper.
  CheckRecord& add_range(std::string id, std::string anchor, double measured, double lower,
                         double upper, nlohmann::ordered_json inputs, bool converged = true);
  /// Recorded but never PASS or FAIL.
  CheckRecord& add_info(std::string id, std::string anchor, double measured,
                        nlohmann::ordered_json inputs);
  CheckRecord& add(CheckRecord r);

  void append(const VerificationReport& other);

  std::size_t count(CheckStatus s) const;
  bool any_fail() const { return count(CheckStatus::fail) > 0; }

  nlohmann::ordered_json to_json() const;

 private:
  std::string suite_;
  std::vector<CheckRecord> checks_;
  nlohmann::ordered_json metadata_ = nlohmann::ordered_json::object();
};

/// Round-trip formatting with 17 significant digits.
std::string format_double(double v);

}  // namespace dunkl

#endif  // DUNKL_REPORT_HPP
