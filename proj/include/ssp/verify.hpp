#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ssp {

/// One named consistency check. worst_margin is the largest violation
/// observed across the samples (identity checks: worst absolute deviation;
/// inequality checks: worst signed excess over the bound, negative when
/// everything stayed inside).
struct CheckResult {
  std::string name;
  bool passed = false;
  double worst_margin = 0.0;
  int samples = 0;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  bool fault_injected = false;
  std::vector<CheckResult> checks;
  bool all_passed = false;
};

/// Runs every numerical consistency check of the optimality analysis: the
/// objective-ratio identity, the Cauchy-Schwarz row bound, weight
/// normalization monotonicity, the scalar induction bound (peak, limit,
/// randomized region, derivative), the partitioned-inverse block structure,
/// the radius/structure/amplification checks of the optimal family, and the
/// radius-vs-ratio monotone equivalence. Any failure signals an
/// implementation inconsistency. `inject_fault` perturbs one optimal member
/// before the structure check (negative control for the reporting path).
VerifyReport run_verification_suite(std::uint64_t seed, bool inject_fault = false);

}  // namespace ssp
