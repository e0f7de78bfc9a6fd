#pragma once

#include <utility>
#include <vector>

#include "ssp/linalg.hpp"
#include "ssp/transform.hpp"

namespace ssp {

/// The reduced objective (w^T N e)^2 / (w^T N^2 e) together with the stage
/// bound 2s/(s+1) it is compared against.
struct RatioEvaluation {
  double numerator = 0.0;    // (w^T N e)^2
  double denominator = 0.0;  // w^T N^2 e
  double ratio = 0.0;
  double bound = 0.0;        // 2s/(s+1)
};

/// Point in the scalar induction bound: alpha = a^T M_{s-1}^{-1} e,
/// beta = a^T M_{s-1}^{-2} e.
struct AlphaBetaPoint {
  int s = 0;
  double alpha = 0.0;
  double beta = 0.0;
};

/// Evaluates the reduced objective. For a second-order method transformed at
/// radius r the ratio equals 1/(1/2 + 1/r). Throws DegenerateDenominator when
/// w^T N^2 e vanishes with a nonzero numerator; the all-zero w case returns
/// ratio 0.
RatioEvaluation objective_ratio(const TransformedForm& tf);

/// Cauchy-Schwarz row bound: returns (lhs, rhs) with
///   lhs = (w^T N e)^2 / (w^T N^2 e),  rhs = max_i ((Ne)_i)^2 / ((N^2 e)_i).
/// Requires N >= 0 entrywise, w on the probability simplex, and (N^2 e)_i > 0
/// for every row. The bound lhs <= rhs holds with equality only at
/// unit-coordinate w.
std::pair<double, double> row_ratio_bound(const Matrix& N, const std::vector<double>& w);

/// w / (w^T e). Throws ZeroVector for vanishing mass. Normalizing never
/// decreases the objective ratio.
std::vector<double> normalize_w(const std::vector<double>& w);

/// One-variable majorant of the induction bound, beta replaced by its
/// extremal value s*alpha^2/(2(s-1)):
///   (1 + alpha)^2 / (1 + alpha + s*alpha^2/(2(s-1))).
/// Value 1 at alpha = 0, maximum 2s/(s+1) at alpha = s-1, limit 2(s-1)/s.
double alpha_beta_value(int s, double alpha);

/// Checks (1+alpha)^2/(1+alpha+beta) <= 2s/(s+1) under the hypothesis
/// alpha^2/beta <= 2(s-1)/s. Throws HypothesisViolated when the point lies
/// outside the hypothesis region.
bool alpha_beta_bound_check(const AlphaBetaPoint& pt);

/// Closed-form derivative of alpha_beta_value against a central finite
/// difference; returns (analytic, numeric).
std::pair<double, double> derivative_check(int s, double alpha);

/// Builds M_s = [[M_prev, 0], [-a^T, 1]], inverts it numerically, and
/// confirms the block structure of M_s^{-1} and M_s^{-2}: bottom-left rows
/// equal a^T M_prev^{-1} and a^T (M_prev^{-1} + M_prev^{-2}).
bool partitioned_inverse_check(const Matrix& M_prev, const std::vector<double>& a);

}  // namespace ssp
