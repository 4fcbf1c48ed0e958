#pragma once

#include <string>
#include <vector>

namespace hhbvp {

enum class VerifyLevel { quick, full };

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Built-in oracle suites, runnable from the CLI without the test harness:
///   monomial     - integral identity against the log-monomial closed forms
///   semigroup    - composition of integrals vs the summed order
///   inversion    - integral of the derivative recovers the function minus
///                  its oracle-computed boundary terms   (full only)
///   reduction    - beta = 0 / beta = 1 endpoint agreement (full only)
///   boundary     - 50-spec random corpus: boundary satisfaction, residual,
///                  superposition, assembly cross-check   (full only)
///   contraction  - empirical operator ratio vs C * Phi   (full only)
[[nodiscard]] std::vector<SuiteResult> run_verify_suites(VerifyLevel level);

}  // namespace hhbvp
