#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace icbounds::selfcheck {

struct CheckResult {
  std::string name;
  bool pass;
  double worst;        // worst observed discrepancy (or margin violation)
  std::string detail;  // where the worst case occurred
};

struct Options {
  std::uint64_t seed = 12345;
  // Comparison tolerance for the exact algebraic identities. The optimizer-
  // backed checks use max(tol, their documented defaults), so tightening tol
  // below ~1e-12 can legitimately fail on floating-point rounding.
  double tol = 1e-9;
};

// Cross-module identity suite: the parametric-form identity of the third
// constraint, the noisy-interference equality at the closed-form genie, ETW
// dominance, and inner-point containment in the outer region polygon.
std::vector<CheckResult> run_selfcheck(const Options& opts);

}  // namespace icbounds::selfcheck
