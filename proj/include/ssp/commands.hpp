#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ssp {

/// Exit-code contract: 0 success, 1 check failure (theorem-consistency
/// alarm), 2 usage or input error.
struct CommandOutcome {
  int exit_code = 0;
  std::optional<std::string> report_path;
  std::string summary;
};

CommandOutcome cmd_analyze(const std::string& method_file, const std::optional<std::string>& out,
                           bool quiet);

CommandOutcome cmd_make_optimal(int s, const std::optional<std::string>& out, bool quiet);

CommandOutcome cmd_verify(std::uint64_t seed, const std::optional<std::string>& out,
                          bool inject_fault, bool quiet);

struct SearchOptions {
  std::vector<int> s_values = {2};
  int restarts = 20;
  int max_iters = 400;
  std::uint64_t seed = 0;
  std::optional<std::string> out;  // CSV: s,restart,best_radius,distance_to_optimal,iterations
};

CommandOutcome cmd_search(const SearchOptions& opts, bool quiet);

struct IntegrateOptions {
  std::optional<std::string> method_file;
  std::optional<int> optimal_s;
  std::string problem;  // "advection" or "burgers"
  int m = 100;
  double tau_ratio = 1.0;  // tau = tau_ratio * R * fe_step
  int steps = 100;
  std::optional<std::string> out;  // CSV: step,tv
};

CommandOutcome cmd_integrate(const IntegrateOptions& opts, bool quiet);

}  // namespace ssp
