#include <iostream>

#include "flamingo/verify.hpp"

// Runs every acceptance check at its default bound and prints one line each.
int main() {
  flamingo::VerifyOptions options;
  int failed = 0;
  for (int id = 1; id <= flamingo::kCriterionCount; ++id) {
    const auto result = flamingo::run_criterion(id, options);
    std::cout << result.summary() << std::endl;
    failed += !result.passed();
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
