#pragma once

// Self-consistency suites run by `verify`: closed forms against each other,
// against the numerical oracles, and through the energy/entanglement
// inversions.

#include <optional>
#include <string>
#include <vector>

namespace moshinsky {

struct CheckResult {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed() const { return max_error <= tolerance; }
};

/// analytic, oracle, roundtrip or all.
bool is_verify_suite(const std::string& suite);
double default_tolerance(const std::string& suite);

/// Every check in the suite evaluated on K = 0, 0.1, ..., 1. When tol is
/// unset each suite uses its own default (1e-10 analytic, 1e-8 oracle,
/// 1e-9 roundtrip).
std::vector<CheckResult> run_verify(const std::string& suite, std::optional<double> tol = std::nullopt);

std::vector<double> standard_k_grid();

}  // namespace moshinsky
