#include "catstat/report.hpp"

#include <algorithm>

namespace catstat {

const char* to_string(CheckStatus status) noexcept {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

CheckResult graded_check(std::string name, double defect, double tol, std::string witness) {
  CheckResult r;
  r.name = std::move(name);
  r.defect = defect;
  r.status = defect <= tol ? CheckStatus::Pass : CheckStatus::Fail;
  if (r.failed()) r.witness = std::move(witness);
  return r;
}

bool CheckReport::passed() const noexcept {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.failed(); });
}

double CheckReport::max_defect() const noexcept {
  double m = 0.0;
  for (const auto& c : checks) m = std::max(m, c.defect);
  return m;
}

const CheckResult* CheckReport::find(const std::string& name) const noexcept {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

void CheckReport::append(const CheckReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

}  // namespace catstat
