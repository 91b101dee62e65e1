#pragma once
// Acceptance suite: eleven numbered criteria, each reported with its measured
// statistic, the threshold it is held to and its wall time against a budget.

#include <cstdint>
#include <string>
#include <vector>

#include "discord/operator_basis.hpp"

namespace discord {

struct AcceptanceOptions {
  /// Smaller corpora (about a fifth), same criteria and thresholds.
  bool quick = false;
  std::uint64_t seed = 1;
  /// Generator ordering used by the closed-form Werner/isotropic checks and
  /// the algebraic checks. corrupted_for_testing is the negative control.
  GeneratorOrdering ordering = GeneratorOrdering::cartan_first;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string measured;
  std::string expected;
  int samples = 0;
  double seconds = 0.0;
  double limit_seconds = 0.0;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// One line: PASS/FAIL, id, name, measured vs expected, time vs budget.
std::string format_result(const CriterionResult& r);

}  // namespace discord
