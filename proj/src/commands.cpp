#include "ssp/commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "ssp/analysis.hpp"
#include "ssp/errors.hpp"
#include "ssp/integrator.hpp"
#include "ssp/method_io.hpp"
#include "ssp/optimal.hpp"
#include "ssp/search.hpp"
#include "ssp/tolerances.hpp"
#include "ssp/verify.hpp"

namespace ssp {

namespace {

using nlohmann::ordered_json;

ordered_json certificate_to_json(const MonotonicityCertificate& cert) {
  ordered_json j;
  j["r"] = cert.r;
  j["feasible"] = cert.feasible;
  j["min_slack"] = cert.min_slack();  // NaN serializes as null when singular
  ordered_json slacks;
  slacks["Me"] = cert.slack_Me;
  auto rows = ordered_json::array();
  for (int i = 0; i < cert.slack_rAM.rows(); ++i) {
    auto row = ordered_json::array();
    for (int k = 0; k < cert.slack_rAM.cols(); ++k) row.push_back(cert.slack_rAM(i, k));
    rows.push_back(std::move(row));
  }
  slacks["rAM"] = std::move(rows);
  slacks["bM"] = cert.slack_bM;
  slacks["tail"] = cert.slack_tail;
  j["slacks"] = std::move(slacks);
  return j;
}

bool write_text(const std::string& path, const std::string& text, std::string& error) {
  std::ofstream out(path);
  if (!out) {
    error = "cannot write " + path;
    return false;
  }
  out << text;
  return true;
}

CommandOutcome usage_error(std::string message) {
  std::cerr << "error: " << message << "\n";
  return CommandOutcome{2, std::nullopt, std::move(message)};
}

}  // namespace

CommandOutcome cmd_analyze(const std::string& method_file, const std::optional<std::string>& out,
                           bool quiet) {
  RungeKuttaMethod method;
  try {
    method = load_method(method_file);
  } catch (const FormatError& e) {
    return usage_error(e.what());
  }

  const auto [rho1, rho2] = order2_residuals(method);
  const double radius = ssp_radius(method);
  const bool unconditional = std::isinf(radius);
  // The bisected radius can land a rounding hair past the boundary; certify
  // just inside it so the reported slacks describe the feasible side.
  const double r_cert = unconditional ? tol::r_cap : std::max(0.0, radius * (1.0 - 1e-6));
  const MonotonicityCertificate cert = certify(method, r_cert);

  ordered_json j;
  j["label"] = method.label;
  j["s"] = method.stages();
  j["order2"] = std::abs(rho1) <= tol::alg && std::abs(rho2) <= tol::alg;
  j["dirk"] = is_dirk(method);
  if (unconditional) {
    j["ssp_radius"] = nullptr;  // JSON has no infinity
    j["unconditional"] = true;
  } else {
    j["ssp_radius"] = radius;
    j["unconditional"] = false;
  }
  j["certificate_at_radius"] = certificate_to_json(cert);

  const std::string text = j.dump(2) + "\n";
  if (!quiet) std::cout << text;

  CommandOutcome outcome;
  if (out) {
    std::string err;
    if (!write_text(*out, text, err)) return usage_error(err);
    outcome.report_path = *out;
  }
  std::ostringstream summary;
  summary << method.label << ": ssp_radius="
          << (unconditional ? std::string("inf") : std::to_string(radius))
          << " order2=" << (j["order2"].get<bool>() ? "true" : "false")
          << " dirk=" << (j["dirk"].get<bool>() ? "true" : "false");
  outcome.summary = summary.str();
  if (!quiet) std::cout << outcome.summary << "\n";
  return outcome;
}

CommandOutcome cmd_make_optimal(int s, const std::optional<std::string>& out, bool quiet) {
  if (s < 1) return usage_error("stage count must be >= 1, got " + std::to_string(s));

  const OptimalFamilyMember member = make_optimal(s);
  const bool structure_ok = verify_structure(member);
  const std::string text = method_to_json(member.method).dump(2) + "\n";
  if (!quiet) std::cout << text;

  CommandOutcome outcome;
  if (out) {
    std::string err;
    if (!write_text(*out, text, err)) return usage_error(err);
    outcome.report_path = *out;
  }
  std::ostringstream summary;
  summary << member.method.label << ": claimed radius " << member.claimed_radius
          << ", structure verified: " << (structure_ok ? "true" : "false");
  outcome.summary = summary.str();
  outcome.exit_code = structure_ok ? 0 : 1;
  if (!quiet) std::cout << outcome.summary << "\n";
  return outcome;
}

CommandOutcome cmd_verify(std::uint64_t seed, const std::optional<std::string>& out,
                          bool inject_fault, bool quiet) {
  const VerifyReport report = run_verification_suite(seed, inject_fault);

  ordered_json j;
  j["seed"] = report.seed;
  j["fault_injected"] = report.fault_injected;
  auto checks = ordered_json::array();
  for (const CheckResult& c : report.checks) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    cj["worst_margin"] = c.worst_margin;
    cj["samples"] = c.samples;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["all_passed"] = report.all_passed;

  if (!quiet) {
    for (const CheckResult& c : report.checks)
      std::cout << (c.passed ? "[ ok ] " : "[FAIL] ") << c.name << " (worst margin "
                << c.worst_margin << ", " << c.samples << " samples)\n";
  }

  CommandOutcome outcome;
  if (out) {
    std::string err;
    if (!write_text(*out, j.dump(2) + "\n", err)) return usage_error(err);
    outcome.report_path = *out;
  }
  outcome.exit_code = report.all_passed ? 0 : 1;
  outcome.summary = report.all_passed ? "all lemma checks passed"
                                      : "LEMMA CHECK FAILURE: implementation contradicts the bound";
  if (!quiet) std::cout << outcome.summary << "\n";
  return outcome;
}

CommandOutcome cmd_search(const SearchOptions& opts, bool quiet) {
  if (opts.s_values.empty()) return usage_error("need at least one --s value");
  for (int s : opts.s_values)
    if (s < 1) return usage_error("stage counts must be >= 1");
  if (opts.restarts < 1) return usage_error("--restarts must be >= 1");
  if (opts.max_iters < 0) return usage_error("--max-iters must be >= 0");

  std::ostringstream csv;
  csv << "s,restart,best_radius,distance_to_optimal,iterations\n";
  csv.precision(17);

  bool bound_violated = false;
  std::ostringstream summary;
  CommandOutcome outcome;

  for (size_t idx = 0; idx < opts.s_values.size(); ++idx) {
    const int s = opts.s_values[idx];
    SearchConfig cfg;
    cfg.s = s;
    cfg.restarts = opts.restarts;
    cfg.max_iters = opts.max_iters;
    cfg.seed = opts.seed;
    const std::vector<SearchResult> results = multi_start(cfg);

    double best = 0.0;
    double best_distance = std::numeric_limits<double>::infinity();
    for (size_t restart = 0; restart < results.size(); ++restart) {
      const SearchResult& r = results[restart];
      const int iterations = r.trace.empty() ? 0 : r.trace.back().first;
      csv << s << "," << restart << "," << r.best_radius << "," << r.distance_to_optimal << ","
          << iterations << "\n";
      if (r.best_radius > 2.0 * s + 1e-8) bound_violated = true;
      if (r.best_radius > best) {
        best = r.best_radius;
        best_distance = r.distance_to_optimal;
      }
    }
    if (idx > 0) summary << "; ";
    summary << "s=" << s << ": best " << best << " <= " << 2 * s << " (distance "
            << best_distance << ")";
  }

  if (opts.out) {
    std::string err;
    if (!write_text(*opts.out, csv.str(), err)) return usage_error(err);
    outcome.report_path = *opts.out;
  }
  outcome.summary = summary.str();
  if (bound_violated) {
    outcome.exit_code = 1;
    outcome.summary += " -- RADIUS BOUND VIOLATED";
  }
  if (!quiet) std::cout << outcome.summary << "\n";
  return outcome;
}

CommandOutcome cmd_integrate(const IntegrateOptions& opts, bool quiet) {
  if (opts.method_file.has_value() == opts.optimal_s.has_value())
    return usage_error("give exactly one of --method-file and --optimal-s");
  if (opts.problem != "advection" && opts.problem != "burgers")
    return usage_error("--problem must be advection or burgers");
  if (opts.m < 3) return usage_error("--m must be >= 3");
  if (opts.steps < 1) return usage_error("--steps must be >= 1");
  if (opts.tau_ratio <= 0.0) return usage_error("--tau-ratio must be positive");

  RungeKuttaMethod method;
  try {
    method = opts.method_file ? load_method(*opts.method_file)
                              : make_optimal(*opts.optimal_s).method;
  } catch (const Error& e) {
    return usage_error(e.what());
  }
  if (!is_dirk(method)) return usage_error("integration requires a DIRK method");

  const double radius = ssp_radius(method);
  if (std::isinf(radius))
    return usage_error("method is monotone at every step size; --tau-ratio has no reference step");
  if (radius <= 0.0) return usage_error("method has SSP radius 0; no positive TVD step exists");

  const double dx = 1.0 / opts.m;
  const SemiDiscreteProblem problem = (opts.problem == "advection")
                                          ? make_advection(opts.m, 1.0, dx)
                                          : make_burgers(opts.m, dx);
  const double tau = opts.tau_ratio * radius * problem.fe_step();

  TVDReport report;
  try {
    report = run_tvd_experiment(method, problem, tau, opts.steps);
  } catch (const StageSolveFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return CommandOutcome{1, std::nullopt, std::string("stage solve failed: ") + e.what()};
  }

  std::ostringstream csv;
  csv.precision(17);
  csv << "step,tv\n";
  for (size_t i = 0; i < report.tv_sequence.size(); ++i)
    csv << i << "," << report.tv_sequence[i] << "\n";

  ordered_json j;
  j["method"] = method.label;
  j["problem"] = problem.label();
  j["m"] = opts.m;
  j["ssp_radius"] = radius;
  j["tau"] = report.tau;
  j["tau_ratio"] = report.tau_ratio;
  j["steps"] = report.steps;
  j["tv_initial"] = report.tv_sequence.front();
  j["tv_final"] = report.tv_sequence.back();
  j["stage_tv_max"] = report.stage_tv_max;
  j["max_increase"] = report.max_increase;
  if (!quiet) std::cout << j.dump(2) << "\n";

  CommandOutcome outcome;
  if (opts.out) {
    std::string err;
    if (!write_text(*opts.out, csv.str(), err)) return usage_error(err);
    outcome.report_path = *opts.out;
  }
  std::ostringstream summary;
  summary << "TVD: max increase " << report.max_increase << " over " << report.steps
          << " steps at tau = " << report.tau;
  outcome.summary = summary.str();
  outcome.exit_code = report.max_increase > tol::tv_increase ? 1 : 0;
  if (outcome.exit_code == 1) outcome.summary += " -- TV INCREASE ABOVE TOLERANCE";
  if (!quiet) std::cout << outcome.summary << "\n";
  return outcome;
}

}  // namespace ssp
