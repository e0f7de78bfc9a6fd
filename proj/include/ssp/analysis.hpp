#pragma once

#include <limits>
#include <vector>

#include "ssp/linalg.hpp"
#include "ssp/method.hpp"

namespace ssp {

/// Evaluation of the five absolute-monotonicity conditions at one radius.
/// Slack values are the raw entries whose nonnegativity the conditions
/// require; they are reported even when some are negative so that callers can
/// see which condition binds. When I + r*A is singular the slack fields hold
/// NaN and feasible is false.
struct MonotonicityCertificate {
  double r = 0.0;
  bool invertible = false;
  std::vector<double> slack_Me;   // entries of (I + rA)^{-1} e
  Matrix slack_rAM;               // entries of rA (I + rA)^{-1}
  std::vector<double> slack_bM;   // entries of b^T (I + rA)^{-1}
  double slack_tail = 0.0;        // 1 - r b^T (I + rA)^{-1} e
  bool feasible = false;

  /// Smallest slack entry across all four blocks; NaN when not invertible.
  double min_slack() const;
};

MonotonicityCertificate certify(const RungeKuttaMethod& m, double r);

/// Sentinel returned by ssp_radius for methods feasible at every probed
/// radius up to the cap.
inline constexpr double unbounded_radius = std::numeric_limits<double>::infinity();

/// Largest radius at which the monotonicity conditions hold, located by
/// bracket doubling from r = 1 followed by bisection. The feasible set is an
/// interval [0, R], which the bisection relies on (and the test suite
/// property-checks). Returns unbounded_radius when feasible at the cap, and
/// 0 when already infeasible at r = 0 (possible for b with negative entries).
double ssp_radius(const RungeKuttaMethod& m);

/// One certificate per requested radius, in input order.
std::vector<MonotonicityCertificate> feasibility_profile(const RungeKuttaMethod& m,
                                                         const std::vector<double>& r_values);

}  // namespace ssp
