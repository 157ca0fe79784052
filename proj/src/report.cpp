#include "dunkl/report.hpp"

#include <cmath>
#include <cstdio>

namespace dunkl {

namespace {

nlohmann::ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

CheckStatus judge(bool ok, double measured, bool converged) {
  if (!std::isfinite(measured) && !std::isinf(measured)) return CheckStatus::inconclusive;
  if (!converged) return CheckStatus::inconclusive;
  return ok ? CheckStatus::pass : CheckStatus::fail;
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "PASS";
    case CheckStatus::fail:
      return "FAIL";
    case CheckStatus::inconclusive:
      return "INCONCLUSIVE";
    case CheckStatus::info:
      return "INFO";
  }
  return "INCONCLUSIVE";
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CheckRecord& VerificationReport::add(CheckRecord r) {
  checks_.push_back(std::move(r));
  return checks_.back();
}

CheckRecord& VerificationReport::add_upper(std::string id, std::string anchor, double measured,
                                           double tolerance, nlohmann::ordered_json inputs,
                                           bool converged) {
  CheckRecord r;
  r.id = std::move(id);
  r.anchor = std::move(anchor);
  r.relation = "<=";
  r.measured = measured;
  r.tolerance = tolerance;
  r.inputs = std::move(inputs);
  r.status = judge(measured <= tolerance, measured, converged);
  return add(std::move(r));
}

CheckRecord& VerificationReport::add_lower(std::string id, std::string anchor, double measured,
                                           double tolerance, nlohmann::ordered_json inputs,
                                           bool converged) {
  CheckRecord r;
  r.id = std::move(id);
  r.anchor = std::move(anchor);
  r.relation = ">=";
  r.measured = measured;
  r.tolerance = tolerance;
  r.inputs = std::move(inputs);
  r.status = judge(measured >= tolerance, measured, converged);
  return add(std::move(r));
}

CheckRecord& VerificationReport::add_range(std::string id, std::string anchor, double measured,
                                           double lower, double upper,
                                           nlohmann::ordered_json inputs, bool converged) {
  CheckRecord r;
  r.id = std::move(id);
  r.anchor = std::move(anchor);
  r.relation = "in";
  r.measured = measured;
  r.lower = lower;
  r.tolerance = upper;
  r.inputs = std::move(inputs);
  r.status = judge(measured >= lower && measured <= upper, measured, converged);
  return add(std::move(r));
}

CheckRecord& VerificationReport::add_info(std::string id, std::string anchor, double measured,
                                          nlohmann::ordered_json inputs) {
  CheckRecord r;
  r.id = std::move(id);
  r.anchor = std::move(anchor);
  r.relation = "info";
  r.measured = measured;
  r.inputs = std::move(inputs);
  r.status = CheckStatus::info;
  return add(std::move(r));
}

void VerificationReport::append(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

std::size_t VerificationReport::count(CheckStatus s) const {
  std::size_t n = 0;
  for (const auto& c : checks_) n += c.status == s ? 1 : 0;
  return n;
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite_;
  j["metadata"] = metadata_;
  j["summary"] = {{"checks", checks_.size()},
                  {"pass", count(CheckStatus::pass)},
                  {"fail", count(CheckStatus::fail)},
                  {"inconclusive", count(CheckStatus::inconclusive)},
                  {"info", count(CheckStatus::info)}};
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json r;
    r["id"] = c.id;
    r["anchor"] = c.anchor;
    r["status"] = to_string(c.status);
    r["relation"] = c.relation;
    r["measured"] = number(c.measured);
    if (c.relation == "in") r["lower"] = number(c.lower);
    if (c.relation != "info") r["tolerance"] = number(c.tolerance);
    r["inputs"] = c.inputs;
    if (!c.note.empty()) r["note"] = c.note;
    arr.push_back(std::move(r));
  }
  return j;
}

}  // namespace dunkl
