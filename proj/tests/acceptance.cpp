// Acceptance suite: end-to-end checks of the toolkit's headline guarantees,
// one printed pass/fail line per criterion. Exits nonzero if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ssp/analysis.hpp"
#include "ssp/commands.hpp"
#include "ssp/integrator.hpp"
#include "ssp/linalg.hpp"
#include "ssp/optimal.hpp"
#include "ssp/search.hpp"
#include "ssp/transform.hpp"
#include "ssp/verify.hpp"

using namespace ssp;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Dense-grid radius scan, the oracle bisection is compared against.
double grid_scan_radius(const RungeKuttaMethod& m, double step, double r_max) {
  double last_feasible = 0.0;
  for (double r = 0.0; r <= r_max; r += step) {
    if (!certify(m, r).feasible) return last_feasible;
    last_feasible = r;
  }
  return last_feasible;
}

bool criterion_optimal_radius(std::string& detail) {
  const auto start = Clock::now();
  double worst = 0.0;
  for (int s = 1; s <= 10; ++s)
    worst = std::max(worst, std::abs(ssp_radius(make_optimal(s).method) - 2.0 * s));
  const double elapsed = seconds_since(start);
  std::ostringstream os;
  os << "worst |R - 2s| = " << worst << " over s=1..10 in " << elapsed << " s";
  detail = os.str();
  return worst <= 1e-8 && elapsed < 10.0;
}

bool criterion_two_stage_closed_form(std::string& detail) {
  const fs::path dir = fs::temp_directory_path() / "sspkit-acceptance";
  fs::create_directories(dir);
  const fs::path method_file = dir / "opt2.json";
  const fs::path report_file = dir / "opt2-analysis.json";

  const OptimalFamilyMember member = make_optimal(2);
  if (cmd_make_optimal(2, method_file.string(), true).exit_code != 0) {
    detail = "make-optimal command failed";
    return false;
  }
  if (cmd_analyze(method_file.string(), report_file.string(), true).exit_code != 0) {
    detail = "analyze command failed";
    return false;
  }
  std::ifstream in(report_file);
  nlohmann::json report;
  in >> report;
  const double radius = report["ssp_radius"].get<double>();

  const TransformedForm tf = to_transformed(member.method, 4.0);
  double worst_m = 0.0;
  const double expected_M[2][2] = {{0.5, 0.0}, {-0.5, 0.5}};
  const double expected_2M[2][2] = {{1.0, 0.0}, {-1.0, 1.0}};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      worst_m = std::max(worst_m, std::abs(tf.M(i, j) - expected_M[i][j]));
      worst_m = std::max(worst_m, std::abs(2.0 * tf.M(i, j) - expected_2M[i][j]));
    }
  }
  const double worst_w = std::max(std::abs(tf.w[0] - 0.0), std::abs(tf.w[1] - 1.0));

  std::ostringstream os;
  os << "analyze radius = " << radius << ", max |M - M_expected| = " << worst_m
     << ", max |w - (0,1)| = " << worst_w;
  detail = os.str();
  return std::abs(radius - 4.0) <= 1e-8 && worst_m <= 1e-11 && worst_w <= 1e-11;
}

bool criterion_theorem_property(std::string& detail) {
  const auto start = Clock::now();
  double worst_excess = -1e9;
  long violations = 0;
  std::uint64_t seed = 10'000;
  for (int s : {2, 3, 4}) {
    for (int k = 0; k < 1000; ++k) {
      const RungeKuttaMethod m = sample_second_order_dirk(s, seed++);
      const double radius = ssp_radius(m);
      worst_excess = std::max(worst_excess, radius - 2.0 * s);
      if (radius > 2.0 * s + 1e-8) ++violations;
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream os;
  os << violations << " violations in 3000 samples, worst R - 2s = " << worst_excess << " in "
     << elapsed << " s";
  detail = os.str();
  return violations == 0 && elapsed < 300.0;
}

bool criterion_search_recovery(std::string& detail) {
  std::ostringstream os;
  bool ok = true;
  for (int s : {2, 3}) {
    SearchConfig cfg;
    cfg.s = s;
    cfg.restarts = 20;
    cfg.seed = 42;
    const std::vector<SearchResult> results = multi_start(cfg);
    bool recovered = false;
    double best = 0.0;
    double best_distance = 1e9;
    for (const SearchResult& r : results) {
      if (r.best_radius > 2.0 * s + 1e-8) ok = false;
      if (r.best_radius >= 2.0 * s - 0.01 && r.distance_to_optimal < 0.05) recovered = true;
      if (r.best_radius > best) {
        best = r.best_radius;
        best_distance = r.distance_to_optimal;
      }
    }
    if (!recovered) ok = false;
    os << "s=" << s << ": best " << best << " (distance " << best_distance << ")  ";
  }
  detail = os.str();
  return ok;
}

bool criterion_lemma_suite(std::string& detail) {
  const VerifyReport report = run_verification_suite(2024, false);
  std::ostringstream os;
  int failed = 0;
  for (const CheckResult& c : report.checks) {
    if (!c.passed) {
      ++failed;
      os << c.name << " FAILED (margin " << c.worst_margin << ")  ";
    }
  }
  if (failed == 0) os << report.checks.size() << " checks passed";
  detail = os.str();
  return report.all_passed;
}

bool criterion_tvd_at_maximal_step(std::string& detail) {
  const auto start = Clock::now();
  double worst_increase = 0.0;
  double worst_stage_excess = -1e9;
  for (int s : {1, 2, 3}) {
    const RungeKuttaMethod method = make_optimal(s).method;
    for (int problem_id : {0, 1}) {
      const SemiDiscreteProblem problem =
          problem_id == 0 ? make_advection(100, 1.0, 0.01) : make_burgers(100, 0.01);
      const double tv0 = total_variation(problem.initial_state());
      const TVDReport report =
          run_tvd_experiment(method, problem, 2.0 * s * problem.fe_step(), 100);
      worst_increase = std::max(worst_increase, report.max_increase);
      worst_stage_excess = std::max(worst_stage_excess, report.stage_tv_max - tv0);
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream os;
  os << "worst step increase = " << worst_increase
     << ", worst stage TV excess = " << worst_stage_excess << " in " << elapsed << " s";
  detail = os.str();
  return worst_increase <= 1e-11 && worst_stage_excess <= 1e-11 && elapsed < 30.0;
}

bool criterion_oracle_equivalence(std::string& detail) {
  const auto start = Clock::now();
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const int s = 1 + k % 5;
    const RungeKuttaMethod m = sample_second_order_dirk(s, 20'000 + k);
    const double bisected = ssp_radius(m);
    if (std::isinf(bisected)) continue;
    const double scanned = grid_scan_radius(m, 1e-4, 2.0 * s + 1.0);
    worst = std::max(worst, std::abs(bisected - scanned));
  }
  std::ostringstream os;
  os << "worst |bisection - grid| = " << worst << " over 50 methods in "
     << seconds_since(start) << " s";
  detail = os.str();
  return worst <= 2e-4;
}

bool criterion_linear_exactness(std::string& detail) {
  double worst = 0.0;
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
      worst = std::max(worst, std::abs(next[0] - std::pow((1.0 + half) / (1.0 - half), s)));
    }
  }
  std::ostringstream os;
  os << "worst |step - closed form| = " << worst << " over s=1..5, 20 z samples";
  detail = os.str();
  return worst <= 1e-12;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"optimal-family radius R = 2s (s = 1..10)", criterion_optimal_radius},
      {"s=2 closed form (radius 4, M and w structure)", criterion_two_stage_closed_form},
      {"theorem as property (3000 random methods, R <= 2s)", criterion_theorem_property},
      {"search recovery of the optimum (s = 2, 3)", criterion_search_recovery},
      {"lemma verification suite", criterion_lemma_suite},
      {"TVD at the maximal step (advection + burgers)", criterion_tvd_at_maximal_step},
      {"bisection vs dense-grid oracle (50 methods)", criterion_oracle_equivalence},
      {"linear exactness of the iterated midpoint step", criterion_linear_exactness},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool passed = false;
    try {
      passed = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %zu: %s -- %s\n", passed ? "PASS" : "FAIL", i + 1,
                criteria[i].name, detail.c_str());
    std::fflush(stdout);
    if (!passed) ++failures;
  }
  if (failures > 0) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
