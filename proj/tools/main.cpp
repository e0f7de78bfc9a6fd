#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ssp/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"SSP radius toolkit for Runge-Kutta methods"};
  app.require_subcommand(1);

  std::optional<std::string> out;
  std::uint64_t seed = 0;
  bool quiet = false;
  app.add_option("--out", out, "write the report/CSV to this path")->expected(1);
  app.add_option("--seed", seed, "RNG seed for randomized commands");
  app.add_flag("--quiet", quiet, "suppress stdout reports");
  app.fallthrough();

  auto* analyze = app.add_subcommand(
      "analyze", "order, DIRK structure, SSP radius and certificate of a method file");
  std::string method_file;
  analyze->add_option("method_file", method_file, "method JSON file")->required();

  auto* make_opt = app.add_subcommand(
      "make-optimal", "construct the radius-optimal second-order DIRK method (radius 2s)");
  int opt_s = 1;
  make_opt->add_option("--s", opt_s, "stage count")->required();

  auto* verify = app.add_subcommand(
      "verify", "run the full numerical consistency suite for the optimality analysis");
  bool inject_fault = false;
  verify->add_flag("--self-test-fault", inject_fault,
                   "negative control: inject a fault so the suite must fail");

  auto* search = app.add_subcommand(
      "search", "multi-start coefficient search confirming the radius <= 2s bound");
  ssp::SearchOptions search_opts;
  search->add_option("--s", search_opts.s_values, "stage counts (repeatable)");
  search->add_option("--restarts", search_opts.restarts, "independent restarts per s");
  search->add_option("--max-iters", search_opts.max_iters, "sweep cap per restart");

  auto* integrate = app.add_subcommand(
      "integrate", "total-variation experiment on a method-of-lines test problem");
  ssp::IntegrateOptions int_opts;
  std::string int_method_file;
  int int_optimal_s = 0;
  auto* mf = integrate->add_option("--method-file", int_method_file, "method JSON file");
  auto* os = integrate->add_option("--optimal-s", int_optimal_s, "use the optimal member");
  mf->excludes(os);
  integrate->add_option("--problem", int_opts.problem, "test problem")
      ->required()
      ->check(CLI::IsMember({"advection", "burgers"}));
  integrate->add_option("--m", int_opts.m, "grid size");
  integrate->add_option("--tau-ratio", int_opts.tau_ratio, "step as a fraction of R*fe_step");
  integrate->add_option("--steps", int_opts.steps, "number of steps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage error
  }

  ssp::CommandOutcome outcome;
  if (*analyze) {
    outcome = ssp::cmd_analyze(method_file, out, quiet);
  } else if (*make_opt) {
    outcome = ssp::cmd_make_optimal(opt_s, out, quiet);
  } else if (*verify) {
    outcome = ssp::cmd_verify(seed, out, inject_fault, quiet);
  } else if (*search) {
    search_opts.seed = seed;
    search_opts.out = out;
    outcome = ssp::cmd_search(search_opts, quiet);
  } else if (*integrate) {
    if (integrate->count("--method-file")) int_opts.method_file = int_method_file;
    if (integrate->count("--optimal-s")) int_opts.optimal_s = int_optimal_s;
    int_opts.out = out;
    outcome = ssp::cmd_integrate(int_opts, quiet);
  }
  return outcome.exit_code;
}
