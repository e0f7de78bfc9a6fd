#include "ssp/integrator.hpp"

#include <cmath>
#include <stdexcept>

#include "ssp/analysis.hpp"
#include "ssp/errors.hpp"
#include "ssp/tolerances.hpp"

namespace ssp {

double total_variation(const std::vector<double>& u) {
  const size_t m = u.size();
  double tv = 0.0;
  for (size_t i = 0; i < m; ++i) tv += std::abs(u[(i + 1) % m] - u[i]);
  return tv;
}

SemiDiscreteProblem::SemiDiscreteProblem(std::string label, std::vector<double> initial_state,
                                         Rhs rhs, double fe_step, double lipschitz_estimate)
    : label_(std::move(label)),
      initial_state_(std::move(initial_state)),
      rhs_(std::move(rhs)),
      fe_step_(fe_step),
      lipschitz_(lipschitz_estimate) {
  if (initial_state_.empty()) throw std::invalid_argument("initial state must be nonempty");
  if (fe_step_ <= 0.0) throw std::invalid_argument("fe_step must be positive");

  // Certify the Forward Euler step on the initial data before accepting the
  // problem.
  std::vector<double> u = initial_state_;
  double tv = total_variation(u);
  for (int step = 0; step < 10; ++step) {
    const std::vector<double> f = rhs_(u);
    for (size_t i = 0; i < u.size(); ++i) u[i] += fe_step_ * f[i];
    const double tv_next = total_variation(u);
    if (tv_next > tv + 1e-12)
      throw std::invalid_argument(label_ + ": Forward Euler at fe_step increases TV (step " +
                                  std::to_string(step) + ")");
    tv = tv_next;
  }
}

namespace {

double max_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Solve y = c + k f(y) by Newton with a finite-difference Jacobian.
std::vector<double> newton_stage_solve(const SemiDiscreteProblem& problem,
                                       const std::vector<double>& c, double k,
                                       std::vector<double> y, int stage) {
  const int m = static_cast<int>(c.size());
  const double fd_step = std::sqrt(std::numeric_limits<double>::epsilon());

  for (int iter = 0; iter < tol::max_newton_iters; ++iter) {
    const std::vector<double> f = problem.rhs(y);
    std::vector<double> residual(m);
    for (int i = 0; i < m; ++i) residual[i] = y[i] - c[i] - k * f[i];
    const double res = max_norm(residual);
    if (!std::isfinite(res)) break;
    if (res <= tol::newton) return y;

    Matrix jac = Matrix::identity(m);  // I - k df/dy
    for (int j = 0; j < m; ++j) {
      const double h = fd_step * std::max(1.0, std::abs(y[j]));
      std::vector<double> yp = y;
      yp[j] += h;
      const std::vector<double> fp = problem.rhs(yp);
      for (int i = 0; i < m; ++i) jac(i, j) -= k * (fp[i] - f[i]) / h;
    }
    for (double& ri : residual) ri = -ri;
    const auto delta = solve_dense(std::move(jac), std::move(residual), tol::sing);
    if (!delta) break;
    for (int i = 0; i < m; ++i) y[i] += (*delta)[i];
  }
  throw StageSolveFailure("stage " + std::to_string(stage + 1) +
                          ": Newton did not reach residual " + std::to_string(tol::newton));
}

std::vector<double> solve_stage(const SemiDiscreteProblem& problem, const std::vector<double>& c,
                                double k, int stage) {
  const int m = static_cast<int>(c.size());
  std::vector<double> y = c;

  if (std::abs(k) * problem.lipschitz() < 0.9) {
    for (int iter = 0; iter < tol::max_newton_iters; ++iter) {
      const std::vector<double> f = problem.rhs(y);
      std::vector<double> next(m);
      double res = 0.0;
      for (int i = 0; i < m; ++i) {
        next[i] = c[i] + k * f[i];
        res = std::max(res, std::abs(next[i] - y[i]));
      }
      y = std::move(next);
      if (res <= tol::newton) return y;
      if (!std::isfinite(res)) break;
    }
    // Fixed-point stalled; fall through to Newton.
  }
  return newton_stage_solve(problem, c, k, std::move(y), stage);
}

}  // namespace

std::pair<std::vector<double>, std::vector<std::vector<double>>> dirk_step(
    const RungeKuttaMethod& method, const SemiDiscreteProblem& problem,
    const std::vector<double>& state, double tau) {
  if (!is_dirk(method)) throw std::invalid_argument("dirk_step expects a DIRK method");
  if (tau <= 0.0) throw std::invalid_argument("tau must be positive");
  const int s = method.stages();
  const int m = static_cast<int>(state.size());

  std::vector<std::vector<double>> stages(s);
  std::vector<std::vector<double>> stage_f(s);
  for (int i = 0; i < s; ++i) {
    std::vector<double> c = state;
    for (int j = 0; j < i; ++j) {
      const double coeff = tau * method.A(i, j);
      if (coeff == 0.0) continue;
      for (int p = 0; p < m; ++p) c[p] += coeff * stage_f[j][p];
    }
    const double k = tau * method.A(i, i);
    stages[i] = (k == 0.0) ? c : solve_stage(problem, c, k, i);
    stage_f[i] = problem.rhs(stages[i]);
  }

  std::vector<double> next = state;
  for (int j = 0; j < s; ++j) {
    const double coeff = tau * method.b[j];
    if (coeff == 0.0) continue;
    for (int p = 0; p < m; ++p) next[p] += coeff * stage_f[j][p];
  }
  return {std::move(next), std::move(stages)};
}

SemiDiscreteProblem make_advection(int m, double velocity, double dx) {
  if (m < 3) throw std::invalid_argument("advection grid needs m >= 3");
  if (velocity <= 0.0 || dx <= 0.0) throw std::invalid_argument("velocity and dx must be positive");

  std::vector<double> u0(m, 0.0);
  for (int i = m / 3; i < 2 * m / 3; ++i) u0[i] = 1.0;

  auto rhs = [m, velocity, dx](const std::vector<double>& u) {
    std::vector<double> f(m);
    for (int i = 0; i < m; ++i) f[i] = -velocity * (u[i] - u[(i + m - 1) % m]) / dx;
    return f;
  };
  return SemiDiscreteProblem("upwind-advection(m=" + std::to_string(m) + ")", std::move(u0),
                             std::move(rhs), dx / velocity, 2.0 * velocity / dx);
}

SemiDiscreteProblem make_burgers(int m, double dx) {
  if (m < 3) throw std::invalid_argument("burgers grid needs m >= 3");
  if (dx <= 0.0) throw std::invalid_argument("dx must be positive");

  std::vector<double> u0(m, 0.0);
  for (int i = m / 3; i < 2 * m / 3; ++i) u0[i] = 1.0;
  const double umax = 1.0;

  // Godunov flux for f(u) = u^2/2; reduces to the left-state flux on
  // nonnegative data.
  auto flux = [](double left, double right) {
    const double fl = std::max(left, 0.0);
    const double fr = std::min(right, 0.0);
    return 0.5 * std::max(fl * fl, fr * fr);
  };
  auto rhs = [m, dx, flux](const std::vector<double>& u) {
    std::vector<double> f(m);
    for (int i = 0; i < m; ++i) {
      const double f_right = flux(u[i], u[(i + 1) % m]);
      const double f_left = flux(u[(i + m - 1) % m], u[i]);
      f[i] = -(f_right - f_left) / dx;
    }
    return f;
  };
  return SemiDiscreteProblem("godunov-burgers(m=" + std::to_string(m) + ")", std::move(u0),
                             std::move(rhs), dx / umax, 2.0 * umax / dx);
}

TVDReport run_tvd_experiment(const RungeKuttaMethod& method, const SemiDiscreteProblem& problem,
                             double tau, int steps) {
  auto [rho1, rho2] = order2_residuals(method);
  (void)rho2;
  if (std::abs(rho1) > 1e-8)
    throw std::invalid_argument("method must be at least first order (b^T e = 1)");
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");

  const double radius = ssp_radius(method);

  TVDReport report;
  report.tau = tau;
  report.steps = steps;
  report.tau_ratio =
      std::isinf(radius) ? 0.0 : tau / (radius * problem.fe_step());

  std::vector<double> u = problem.initial_state();
  report.tv_sequence.push_back(total_variation(u));
  report.stage_tv_max = 0.0;

  for (int step = 0; step < steps; ++step) {
    auto [next, stages] = dirk_step(method, problem, u, tau);
    for (const auto& y : stages)
      report.stage_tv_max = std::max(report.stage_tv_max, total_variation(y));
    u = std::move(next);
    report.tv_sequence.push_back(total_variation(u));
  }

  double worst = 0.0;
  for (size_t i = 0; i + 1 < report.tv_sequence.size(); ++i)
    worst = std::max(worst, report.tv_sequence[i + 1] - report.tv_sequence[i]);
  report.max_increase = std::max(worst, 0.0);
  return report;
}

}  // namespace ssp
