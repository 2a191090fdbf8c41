#pragma once

// Built-in acceptance suite. Each criterion reports the measured value, the
// target, its wall time and pass/fail; the runtime budget is part of the
// pass condition.

#include <iosfwd>
#include <string>
#include <vector>

namespace casimir {

struct ValidationOptions {
  /// Added to the reference zeta(3) used as a target (mutation canary).
  double zeta3_perturbation = 0.0;
  /// Criterion ids to run; empty runs all.
  std::vector<int> only;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string measured;
  std::string target;
  double seconds = 0.0;
  double time_limit = 0.0;
  std::string detail;  // exception text or extra notes
};

inline constexpr int kCriterionCount = 11;

/// Throws DomainError for an unknown id.
CriterionResult run_criterion(int id, const ValidationOptions& options = {});
std::vector<CriterionResult> run_validation(const ValidationOptions& options = {});

void print_report(std::ostream& out, const std::vector<CriterionResult>& results);
std::string report_json(const std::vector<CriterionResult>& results);

}  // namespace casimir
