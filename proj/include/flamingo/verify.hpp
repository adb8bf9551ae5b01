#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace flamingo {

struct VerifyOptions {
  /// Largest n for the sweeps; 0 keeps each check's default bound. Time
  /// budgets are enforced only with the default bounds.
  int n_max = 0;
  int jobs = 0;
  std::uint64_t seed = 20240611;
  /// Receives progress lines; may be empty.
  std::function<void(const std::string&)> progress;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool checks_passed = false;
  bool within_budget = true;
  double seconds = 0;
  double budget_seconds = 0;
  std::string detail;

  bool passed() const { return checks_passed && within_budget; }
  /// One line: `[PASS] 4 gc-equivalence (12.3s / 300s) ...`.
  std::string summary() const;
};

constexpr int kCriterionCount = 13;

/// Runs acceptance check `id` (1..13).
CriterionResult run_criterion(int id, const VerifyOptions& options);
std::vector<CriterionResult> run_all_criteria(const VerifyOptions& options);

}  // namespace flamingo
