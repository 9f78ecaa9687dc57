#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace irreal {

struct CheckResult {
  std::string name;
  double expected;
  double actual;
  double tolerance;
  bool passed;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed = false;
  double seconds = 0.0;

  const CheckResult* find(const std::string& name) const;
};

struct VerifyOptions {
  /// Replaces every check's tolerance when set.
  std::optional<double> tolerance_override;
  std::uint64_t seed = 20250809;
};

/// Runs every module invariant and numeric-vs-analytic cross-check.
/// Numeric-domain errors inside a check surface as a failed check, never
/// as a crash.
VerifyReport run_verification(const VerifyOptions& options = {});

void print_report(std::ostream& out, const VerifyReport& report);

struct CriterionSpec {
  int number;
  std::string description;
  std::vector<std::string> check_names;
};

/// Release gate: named groups of checks, in fixed order. (The CLI
/// determinism gate lives in the acceptance runner since it spawns
/// processes.)
const std::vector<CriterionSpec>& acceptance_criteria();

}  // namespace irreal
