#pragma once

namespace ssp::tol {

/// Absolute tolerance for algebraic identity checks (N*M = I, w^T N e = r b^T e, ...).
inline constexpr double alg = 1e-11;

/// Slack entries >= -feas count as nonnegative in the monotonicity conditions.
inline constexpr double feas = 1e-10;

/// Absolute tolerance on the radius returned by bisection.
inline constexpr double bisect = 1e-10;

/// Determinants and denominators below this magnitude are treated as singular.
inline constexpr double sing = 1e-12;

/// Radii beyond this cap count as unconditional (infinite radius sentinel).
inline constexpr double r_cap = 1e6;

/// Max-norm residual target for the implicit stage solver.
inline constexpr double newton = 1e-13;

/// Iteration cap shared by the fixed-point and Newton stage solvers.
inline constexpr int max_newton_iters = 100;

/// Residual left on the order conditions by the search projection.
inline constexpr double proj = 1e-12;

/// Total-variation increase tolerated across one step (stage solves leave
/// O(newton) residual per step in the TV sequence).
inline constexpr double tv_increase = 1e-11;

}  // namespace ssp::tol
