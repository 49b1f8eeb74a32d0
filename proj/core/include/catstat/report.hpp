#pragma once

#include <string>
#include <vector>

namespace catstat {

enum class CheckStatus { Pass, Fail, Skipped };

const char* to_string(CheckStatus status) noexcept;

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  double defect = 0.0;  // non-negative; 0 for skipped checks
  std::string witness;  // empty when there is nothing to point at
  std::string detail;

  bool passed() const noexcept { return status == CheckStatus::Pass; }
  bool failed() const noexcept { return status == CheckStatus::Fail; }
};

/// Pass iff defect <= tol.
CheckResult graded_check(std::string name, double defect, double tol, std::string witness = {});

struct CheckReport {
  std::vector<CheckResult> checks;

  /// True iff no executed check failed; skipped checks do not count.
  bool passed() const noexcept;
  double max_defect() const noexcept;

  const CheckResult* find(const std::string& name) const noexcept;

  void add(CheckResult result) { checks.push_back(std::move(result)); }
  void append(const CheckReport& other);
};

}  // namespace catstat
