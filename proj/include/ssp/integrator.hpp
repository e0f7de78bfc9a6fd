#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ssp/method.hpp"

namespace ssp {

/// Total variation with periodic wrap: sum_i |u_{i+1} - u_i|. Constant states
/// have TV exactly 0.
double total_variation(const std::vector<double>& u);

/// Method-of-lines test problem u' = f(u) with a certified Forward Euler step
/// fe_step: one Euler step of size fe_step must not increase the total
/// variation. The constructor probes this on the initial state (10 steps) and
/// rejects problems that fail.
class SemiDiscreteProblem {
 public:
  using Rhs = std::function<std::vector<double>(const std::vector<double>&)>;

  SemiDiscreteProblem(std::string label, std::vector<double> initial_state, Rhs rhs,
                      double fe_step, double lipschitz_estimate);

  int dimension() const { return static_cast<int>(initial_state_.size()); }
  const std::string& label() const { return label_; }
  const std::vector<double>& initial_state() const { return initial_state_; }
  double fe_step() const { return fe_step_; }
  /// Rough Lipschitz constant of f, used to pick the stage solver.
  double lipschitz() const { return lipschitz_; }

  std::vector<double> rhs(const std::vector<double>& u) const { return rhs_(u); }

 private:
  std::string label_;
  std::vector<double> initial_state_;
  Rhs rhs_;
  double fe_step_;
  double lipschitz_;
};

/// Total-variation record of one integration run.
struct TVDReport {
  std::vector<double> tv_sequence;  // TV of initial state first, then one per step
  double stage_tv_max = 0.0;        // max TV over all stage values
  double tau = 0.0;
  double tau_ratio = 0.0;           // tau / (R * fe_step), R the method's radius
  int steps = 0;
  double max_increase = 0.0;        // max consecutive TV increase, 0 if none
};

/// One step of a DIRK method. Stages are solved sequentially: stage i solves
/// y = c + tau*A(i,i)*f(y) by fixed-point iteration when the estimated
/// contraction tau*A(i,i)*L < 0.9, otherwise (or on stall) by Newton with a
/// finite-difference Jacobian, down to residual <= tol::newton. Returns the
/// new state and the stage values. Throws StageSolveFailure when the residual
/// target cannot be met.
std::pair<std::vector<double>, std::vector<std::vector<double>>> dirk_step(
    const RungeKuttaMethod& method, const SemiDiscreteProblem& problem,
    const std::vector<double>& state, double tau);

/// Periodic first-order upwind discretization of u_t + velocity*u_x = 0 on m
/// cells of width dx; square-wave initial data (1 on the middle third), so
/// the initial TV is exactly 2 and the CFL step dx/velocity is tight.
SemiDiscreteProblem make_advection(int m, double velocity, double dx);

/// Periodic Godunov (upwind for nonnegative data) discretization of
/// u_t + (u^2/2)_x = 0; nonnegative square-wave initial data, fe_step =
/// dx / max|u0|.
SemiDiscreteProblem make_burgers(int m, double dx);

/// Advances `steps` steps of size tau recording the TV of every state and
/// stage value. Requires a first- or second-order method (b^T e = 1).
TVDReport run_tvd_experiment(const RungeKuttaMethod& method, const SemiDiscreteProblem& problem,
                             double tau, int steps);

}  // namespace ssp
