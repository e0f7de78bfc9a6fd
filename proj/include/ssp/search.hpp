#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ssp/method.hpp"

namespace ssp {

struct SearchConfig {
  int s = 2;
  int restarts = 20;
  int max_iters = 400;
  std::uint64_t seed = 0;
  double perturbation_scale = 0.1;
  double convergence_tol = 1e-8;
};

struct SearchResult {
  RungeKuttaMethod best_method;
  double best_radius = 0.0;
  /// Max-norm distance of (A, b) to the radius-optimal member with the same
  /// stage count.
  double distance_to_optimal = 0.0;
  /// (sweep index, best radius so far); non-decreasing in the second entry.
  std::vector<std::pair<int, double>> trace;
  std::uint64_t seed = 0;
};

/// Random second-order DIRK method, deterministic given the seed: b is a
/// positive simplex sample, strictly-lower A entries are uniform on [0, 2/s],
/// and the diagonal is solved (all entries equal) so that b^T A e = 1/2
/// exactly. Throws DegenerateSample when the diagonal solve keeps failing.
RungeKuttaMethod sample_second_order_dirk(int s, std::uint64_t rng_seed);

/// Projects a DIRK candidate back onto the order-condition manifold used by
/// the search: clamps b to nonnegative, rescales it onto the simplex, then
/// re-solves the common diagonal entry. Idempotent on already-projected
/// methods. Throws DegenerateSample when b has no mass left.
RungeKuttaMethod project_second_order(const RungeKuttaMethod& m);

/// Derivative-free coordinate search maximizing ssp_radius over the
/// order-condition manifold. Perturbs strictly-lower A entries and b (on the
/// simplex) by +-scale, accepts improving moves, and decays the scale by 0.7
/// after each sweep without improvement. Stops after max_iters sweeps, when a
/// sweep's best improvement drops below convergence_tol, or when the scale
/// itself decays below convergence_tol.
SearchResult local_search(const RungeKuttaMethod& start, const SearchConfig& cfg);

/// Independent restarts of local_search, each from a fresh sampled start with
/// its own RNG stream derived from (cfg.seed, restart index). Restarts run in
/// parallel; the returned vector is ordered by restart index regardless of
/// schedule.
std::vector<SearchResult> multi_start(const SearchConfig& cfg);

/// Multi-start search per stage count; returns the per-s best result, ties
/// broken toward the lower restart index.
std::vector<SearchResult> bound_sweep(const std::vector<int>& s_values, const SearchConfig& cfg);

/// Max-norm distance of (A, b) to the radius-optimal family member.
double distance_to_optimal_family(const RungeKuttaMethod& m);

}  // namespace ssp
