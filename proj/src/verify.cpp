#include "ssp/verify.hpp"

#include <cmath>
#include <random>

#include "ssp/analysis.hpp"
#include "ssp/bounds.hpp"
#include "ssp/integrator.hpp"
#include "ssp/optimal.hpp"
#include "ssp/search.hpp"
#include "ssp/tolerances.hpp"
#include "ssp/transform.hpp"

namespace ssp {

namespace {

Matrix random_nonneg_matrix(int s, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  Matrix N(s, s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) N(i, j) = uni(rng);
  return N;
}

std::vector<double> random_simplex(int s, std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(s);
  double sum = 0.0;
  for (double& wi : w) {
    wi = expo(rng);
    sum += wi;
  }
  for (double& wi : w) wi /= sum;
  return w;
}

double raw_ratio(const Matrix& N, const std::vector<double>& w) {
  const std::vector<double> Ne = mat_vec(N, ones(N.rows()));
  const std::vector<double> N2e = mat_vec(N, Ne);
  const double wNe = dot(w, Ne);
  return wNe * wNe / dot(w, N2e);
}

// Identity (w^T N e)^2 / (w^T N^2 e) = 1/(1/2 + 1/r) on second-order methods.
CheckResult check_objective_identity(std::uint64_t seed) {
  CheckResult res{"objective-ratio-identity", true, 0.0, 0};
  std::uint64_t sample_seed = seed;
  int s = 2;
  while (res.samples < 100) {
    ++sample_seed;
    const RungeKuttaMethod m = sample_second_order_dirk(s, sample_seed);
    s = (s == 6) ? 2 : s + 1;
    const double radius = ssp_radius(m);
    if (!(radius > 1e-6) || std::isinf(radius)) continue;
    const double r = 0.5 * radius;
    const RatioEvaluation eval = objective_ratio(to_transformed(m, r));
    const double expected = 1.0 / (0.5 + 1.0 / r);
    res.worst_margin = std::max(res.worst_margin, std::abs(eval.ratio - expected));
    ++res.samples;
  }
  res.passed = res.worst_margin <= 1e-9;
  return res;
}

CheckResult check_cauchy_schwarz(std::uint64_t seed) {
  CheckResult res{"cauchy-schwarz-row-bound", true, -1.0, 200};
  std::mt19937_64 rng(seed + 1);
  for (int k = 0; k < 200; ++k) {
    const int s = 2 + k % 5;
    const Matrix N = random_nonneg_matrix(s, rng);
    const std::vector<double> w = random_simplex(s, rng);
    const auto [lhs, rhs] = row_ratio_bound(N, w);
    res.worst_margin = std::max(res.worst_margin, lhs - rhs);
    // Equality certifies a unit-coordinate w.
    if (std::abs(lhs - rhs) < 1e-12) {
      double wmax = 0.0;
      for (double wi : w) wmax = std::max(wmax, wi);
      if (wmax < 1.0 - 1e-9) res.passed = false;
    }
  }
  if (res.worst_margin > tol::alg) res.passed = false;
  return res;
}

CheckResult check_normalization(std::uint64_t seed) {
  CheckResult res{"normalization-monotonicity", true, 0.0, 200};
  std::mt19937_64 rng(seed + 2);
  std::uniform_real_distribution<double> shrink(0.05, 0.95);
  double worst_drop = 0.0;
  for (int k = 0; k < 200; ++k) {
    const int s = 2 + k % 5;
    const Matrix N = random_nonneg_matrix(s, rng);
    std::vector<double> w = random_simplex(s, rng);
    const double c = shrink(rng);
    for (double& wi : w) wi *= c;  // now w^T e = c < 1
    const double before = raw_ratio(N, w);
    const double after = raw_ratio(N, normalize_w(w));
    worst_drop = std::max(worst_drop, before - after);
  }
  res.worst_margin = worst_drop;
  res.passed = worst_drop <= 1e-12;
  return res;
}

CheckResult check_alpha_beta_peak() {
  CheckResult res{"alpha-beta-peak", true, 0.0, 0};
  for (int s = 2; s <= 10; ++s) {
    const double value = alpha_beta_value(s, s - 1.0);
    const double expected = 2.0 * s / (s + 1.0);
    res.worst_margin = std::max(res.worst_margin, std::abs(value - expected));
    ++res.samples;
  }
  res.passed = res.worst_margin <= 1e-12;
  return res;
}

CheckResult check_alpha_beta_limit() {
  CheckResult res{"alpha-beta-limit", true, 0.0, 0};
  for (int s = 2; s <= 10; ++s) {
    const double value = alpha_beta_value(s, 1e9);
    const double expected = 2.0 * (s - 1.0) / s;
    res.worst_margin = std::max(res.worst_margin, std::abs(value - expected));
    ++res.samples;
  }
  res.passed = res.worst_margin <= 1e-6;
  return res;
}

CheckResult check_alpha_beta_region(std::uint64_t seed) {
  CheckResult res{"alpha-beta-bound", true, 0.0, 0};
  std::mt19937_64 rng(seed + 3);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  double worst = -1.0;
  for (int s = 2; s <= 8; ++s) {
    for (int k = 0; k < 1000; ++k) {
      const double alpha = uni(rng) * 3.0 * s;
      // beta from the constraint boundary upward, where the bound is tight.
      const double beta_min = s * alpha * alpha / (2.0 * (s - 1.0));
      const double beta = beta_min + uni(rng) * 10.0;
      const AlphaBetaPoint pt{s, alpha, beta};
      const double value = (1.0 + alpha) * (1.0 + alpha) / (1.0 + alpha + beta);
      worst = std::max(worst, value - 2.0 * s / (s + 1.0));
      if (!alpha_beta_bound_check(pt)) res.passed = false;
      ++res.samples;
    }
  }
  res.worst_margin = worst;
  return res;
}

CheckResult check_derivative(std::uint64_t seed) {
  CheckResult res{"derivative-agreement", true, 0.0, 50};
  std::mt19937_64 rng(seed + 4);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int k = 0; k < 50; ++k) {
    const int s = 2 + k % 7;
    const double alpha = 0.01 + uni(rng) * 3.0 * s;
    const auto [analytic, numeric] = derivative_check(s, alpha);
    const double rel = std::abs(analytic - numeric) / std::max(1.0, std::abs(analytic));
    res.worst_margin = std::max(res.worst_margin, rel);
  }
  res.passed = res.worst_margin <= 1e-5;
  return res;
}

CheckResult check_partitioned_inverse(std::uint64_t seed) {
  CheckResult res{"partitioned-inverse", true, 0.0, 50};
  std::mt19937_64 rng(seed + 5);
  std::uniform_real_distribution<double> diag(0.5, 2.0);
  std::uniform_real_distribution<double> off(-1.0, 1.0);
  std::uniform_real_distribution<double> pos(0.0, 1.0);
  for (int k = 0; k < 50; ++k) {
    const int kk = 2 + k % 5;
    Matrix M_prev(kk, kk);
    for (int i = 0; i < kk; ++i) {
      for (int j = 0; j < i; ++j) M_prev(i, j) = off(rng);
      M_prev(i, i) = diag(rng);
    }
    std::vector<double> a(kk);
    for (double& ai : a) ai = pos(rng);
    if (!partitioned_inverse_check(M_prev, a)) res.passed = false;
  }
  return res;
}

CheckResult check_optimal_radius() {
  CheckResult res{"optimal-family-radius", true, 0.0, 0};
  for (int s = 1; s <= 10; ++s) {
    const double radius = ssp_radius(make_optimal(s).method);
    res.worst_margin = std::max(res.worst_margin, std::abs(radius - 2.0 * s));
    ++res.samples;
  }
  // Boundary detection is limited by tol::feas against a slack slope of
  // O(1/s); 1e-8 covers s <= 10.
  res.passed = res.worst_margin <= 1e-8;
  return res;
}

CheckResult check_optimal_structure(bool inject_fault) {
  CheckResult res{"optimal-family-structure", true, 0.0, 0};
  for (int s = 1; s <= 10; ++s) {
    OptimalFamilyMember member = make_optimal(s);
    if (inject_fault && s == 2) member.method.A(1, 0) += 1e-3;
    if (!verify_structure(member)) res.passed = false;
    ++res.samples;
  }
  return res;
}

// One step of the s-stage member on u' = z*u equals s implicit-midpoint
// substeps: amplification ((1 + z/(2s)) / (1 - z/(2s)))^s.
CheckResult check_amplification() {
  CheckResult res{"iterated-midpoint-amplification", true, 0.0, 0};
  for (int s = 1; s <= 5; ++s) {
    const RungeKuttaMethod method = make_optimal(s).method;
    for (int k = 0; k < 20; ++k) {
      const double z = -2.5 + 3.0 * k / 19.0;
      SemiDiscreteProblem problem(
          "linear-test", {1.0},
          [z](const std::vector<double>& u) { return std::vector<double>{z * u[0]}; }, 1.0,
          std::abs(z));
      const auto [next, stages] = dirk_step(method, problem, {1.0}, 1.0);
      (void)stages;
      const double half = z / (2.0 * s);
      const double expected = std::pow((1.0 + half) / (1.0 - half), s);
      res.worst_margin = std::max(res.worst_margin, std::abs(next[0] - expected));
      ++res.samples;
    }
  }
  res.passed = res.worst_margin <= 1e-12;
  return res;
}

// r <= 2s iff 1/(1/2 + 1/r) <= 2s/(s+1), away from the boundary.
CheckResult check_monotone_equivalence() {
  CheckResult res{"radius-ratio-equivalence", true, 0.0, 0};
  for (int s = 1; s <= 8; ++s) {
    const double bound = 2.0 * s / (s + 1.0);
    for (int k = 1; k <= 400; ++k) {
      const double r = 4.0 * s * k / 400.0;
      if (std::abs(r - 2.0 * s) < 1e-9) continue;  // boundary itself
      const bool left = r <= 2.0 * s;
      const bool right = 1.0 / (0.5 + 1.0 / r) <= bound;
      if (left != right) res.passed = false;
      ++res.samples;
    }
  }
  return res;
}

}  // namespace

VerifyReport run_verification_suite(std::uint64_t seed, bool inject_fault) {
  VerifyReport report;
  report.seed = seed;
  report.fault_injected = inject_fault;

  report.checks.push_back(check_objective_identity(seed));
  report.checks.push_back(check_cauchy_schwarz(seed));
  report.checks.push_back(check_normalization(seed));
  report.checks.push_back(check_alpha_beta_peak());
  report.checks.push_back(check_alpha_beta_limit());
  report.checks.push_back(check_alpha_beta_region(seed));
  report.checks.push_back(check_derivative(seed));
  report.checks.push_back(check_partitioned_inverse(seed));
  report.checks.push_back(check_optimal_radius());
  report.checks.push_back(check_optimal_structure(inject_fault));
  report.checks.push_back(check_amplification());
  report.checks.push_back(check_monotone_equivalence());

  report.all_passed = true;
  for (const CheckResult& c : report.checks)
    if (!c.passed) report.all_passed = false;
  return report;
}

}  // namespace ssp
