#include "ssp/search.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <stdexcept>
#include <string>

#include "ssp/analysis.hpp"
#include "ssp/errors.hpp"
#include "ssp/optimal.hpp"
#include "ssp/tolerances.hpp"

namespace ssp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, int restart) {
  return splitmix64(base ^ splitmix64(static_cast<std::uint64_t>(restart) + 1));
}

// Solves the common diagonal entry so that b^T A e = 1/2 with the strictly
// lower part fixed. Negative diagonals are allowed; feasibility screening is
// the radius computation's job.
void solve_diagonal(Matrix& A, const std::vector<double>& b) {
  const int s = static_cast<int>(b.size());
  double bsum = 0.0;
  double lower_mass = 0.0;
  for (int i = 0; i < s; ++i) {
    bsum += b[i];
    double row = 0.0;
    for (int j = 0; j < i; ++j) row += A(i, j);
    lower_mass += b[i] * row;
  }
  if (std::abs(bsum) <= tol::sing)
    throw DegenerateSample("b-weighted diagonal mass " + std::to_string(bsum));
  const double d = (0.5 - lower_mass) / bsum;
  for (int i = 0; i < s; ++i) A(i, i) = d;
}

}  // namespace

RungeKuttaMethod sample_second_order_dirk(int s, std::uint64_t rng_seed) {
  if (s < 1) throw InvalidStageCount("stage count must be >= 1, got " + std::to_string(s));
  std::mt19937_64 rng(rng_seed);
  std::exponential_distribution<double> expo(1.0);
  std::uniform_real_distribution<double> lower(0.0, 2.0 / s);

  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<double> b(s);
    double mass = 0.0;
    for (int i = 0; i < s; ++i) {
      b[i] = expo(rng);
      mass += b[i];
    }
    if (mass <= tol::sing) continue;
    for (double& bi : b) bi /= mass;

    Matrix A(s, s);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < i; ++j) A(i, j) = lower(rng);
    try {
      solve_diagonal(A, b);
    } catch (const DegenerateSample&) {
      continue;
    }
    return make_method("sampled-dirk(s=" + std::to_string(s) + ")", std::move(A), std::move(b));
  }
  throw DegenerateSample("no valid sample after 100 attempts");
}

RungeKuttaMethod project_second_order(const RungeKuttaMethod& m) {
  if (!is_dirk(m)) throw std::invalid_argument("projection expects a DIRK method");
  RungeKuttaMethod out = m;
  double mass = 0.0;
  for (double& bi : out.b) {
    bi = std::max(bi, 0.0);
    mass += bi;
  }
  if (mass <= tol::sing) throw DegenerateSample("b lost all mass under projection");
  for (double& bi : out.b) bi /= mass;
  solve_diagonal(out.A, out.b);
  return out;
}

namespace {

// Free parameters of the order-condition manifold: the strictly-lower A
// entries followed by the (unnormalized) weights. The diagonal is not free;
// the projection re-solves it.
std::vector<double> encode_free(const RungeKuttaMethod& m) {
  const int s = m.stages();
  std::vector<double> theta;
  theta.reserve(s * (s - 1) / 2 + s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < i; ++j) theta.push_back(m.A(i, j));
  for (int i = 0; i < s; ++i) theta.push_back(m.b[i]);
  return theta;
}

RungeKuttaMethod decode_free(int s, const std::vector<double>& theta) {
  Matrix A(s, s);
  size_t k = 0;
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < i; ++j) A(i, j) = theta[k++];
  std::vector<double> b(theta.begin() + static_cast<long>(k), theta.end());
  return project_second_order(
      make_method("search-candidate(s=" + std::to_string(s) + ")", std::move(A), std::move(b)));
}

}  // namespace

SearchResult local_search(const RungeKuttaMethod& start, const SearchConfig& cfg) {
  const int s = start.stages();
  RungeKuttaMethod current = project_second_order(start);
  double best = ssp_radius(current);

  // Radius evaluations carry boundary-detection noise of order tol::feas
  // divided by the binding slack's slope; accept only gains clearly above it.
  constexpr double accept_eps = 3e-8;

  std::vector<double> theta = encode_free(current);
  const int dims = static_cast<int>(theta.size());

  // Evaluates a free-parameter vector; returns -1 on degenerate projections.
  auto eval = [&s](const std::vector<double>& t) -> double {
    try {
      return ssp_radius(decode_free(s, t));
    } catch (const DegenerateSample&) {
      return -1.0;
    }
  };

  SearchResult result;
  result.trace.emplace_back(0, best);

  // Poll directions for stalled sweeps, drawn from the restart's own stream.
  std::mt19937_64 poll_rng(cfg.seed ^ 0x706f6c6cULL);
  std::normal_distribution<double> gauss(0.0, 1.0);
  // Unit direction of the last accepted move; polls biased toward it follow
  // the ridge far more often than isotropic draws once the dimension grows.
  std::vector<double> momentum;

  double scale = cfg.perturbation_scale;
  for (int sweep = 1; sweep <= cfg.max_iters; ++sweep) {
    // Exploratory pass: greedy +-scale probe per coordinate.
    std::vector<double> trial = theta;
    double r_trial = best;
    for (int c = 0; c < dims; ++c) {
      for (double delta : {scale, -scale}) {
        std::vector<double> cand = trial;
        cand[c] += delta;
        const double r = eval(cand);
        if (r > r_trial + accept_eps) {
          trial = std::move(cand);
          r_trial = r;
        }
      }
    }

    // The feasibility boundary has pointed ridges whose improving cone often
    // misses every axis; probe coordinate pairs next.
    if (r_trial <= best + accept_eps) {
      for (int ci = 0; ci < dims && r_trial <= best + accept_eps; ++ci) {
        for (int cj = ci + 1; cj < dims; ++cj) {
          for (double di : {scale, -scale}) {
            for (double dj : {scale, -scale}) {
              std::vector<double> cand = trial;
              cand[ci] += di;
              cand[cj] += dj;
              const double r = eval(cand);
              if (r > r_trial + accept_eps) {
                trial = std::move(cand);
                r_trial = r;
              }
            }
          }
        }
      }
    }

    // Random polling: the improving cone at a ridge point covers only a few
    // percent of directions and shrinks with the dimension, so draw enough to
    // escape with high probability before the scale is cut. Every other draw
    // is biased toward the momentum direction.
    if (r_trial <= best + accept_eps) {
      const int polls = 32 * std::max(dims, 3);
      for (int k = 0; k < polls && r_trial <= best + accept_eps; ++k) {
        std::vector<double> dir(static_cast<size_t>(dims));
        double norm = 0.0;
        for (double& x : dir) {
          x = gauss(poll_rng);
          norm += x * x;
        }
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;
        if (!momentum.empty() && k % 2 == 0) {
          for (int c = 0; c < dims; ++c) dir[c] = momentum[c] + 0.35 * dir[c] / norm;
          norm = std::sqrt(dot(dir, dir));
          if (norm == 0.0) continue;
        }
        std::vector<double> cand = trial;
        for (int c = 0; c < dims; ++c) cand[c] += scale * dir[c] / norm;
        const double r = eval(cand);
        if (r > r_trial + accept_eps) {
          trial = std::move(cand);
          r_trial = r;
        }
      }
    }

    if (r_trial > best + accept_eps) {
      // Pattern acceleration: keep extrapolating along the aggregate move
      // while it pays. This is what lets coordinate probes follow the narrow
      // ridge toward the optimum instead of zigzag-stalling on it.
      std::vector<double> direction(static_cast<size_t>(dims));
      for (int c = 0; c < dims; ++c) direction[c] = trial[c] - theta[c];
      for (int hop = 0; hop < 32; ++hop) {
        std::vector<double> cand = trial;
        for (int c = 0; c < dims; ++c) cand[c] += direction[c];
        const double r = eval(cand);
        if (r <= r_trial + accept_eps) break;
        trial = std::move(cand);
        r_trial = r;
      }
      momentum.assign(static_cast<size_t>(dims), 0.0);
      double mnorm = 0.0;
      for (int c = 0; c < dims; ++c) {
        momentum[c] = trial[c] - theta[c];
        mnorm += momentum[c] * momentum[c];
      }
      mnorm = std::sqrt(mnorm);
      if (mnorm > 0.0)
        for (double& x : momentum) x /= mnorm;
      else
        momentum.clear();

      theta = std::move(trial);
      best = r_trial;
      result.trace.emplace_back(sweep, best);
      // Success restores the scale so the ladder is spent on genuine stalls.
      scale = std::min(scale / 0.7, cfg.perturbation_scale);
    } else {
      result.trace.emplace_back(sweep, best);
      scale *= 0.7;
      // Below this scale any remaining move changes the radius by less than
      // the convergence tolerance.
      if (scale < cfg.convergence_tol) break;
    }
  }

  current = decode_free(s, theta);
  result.best_radius = ssp_radius(current);  // recomputed on finalize
  result.best_method = std::move(current);
  result.distance_to_optimal = distance_to_optimal_family(result.best_method);
  result.seed = cfg.seed;
  return result;
}

std::vector<SearchResult> multi_start(const SearchConfig& cfg) {
  std::vector<std::future<SearchResult>> futures;
  futures.reserve(cfg.restarts);
  for (int restart = 0; restart < cfg.restarts; ++restart) {
    const std::uint64_t seed = derive_seed(cfg.seed, restart);
    futures.push_back(std::async(std::launch::async, [cfg, seed] {
      SearchConfig local_cfg = cfg;
      local_cfg.seed = seed;
      const RungeKuttaMethod start = sample_second_order_dirk(cfg.s, seed);
      return local_search(start, local_cfg);
    }));
  }
  std::vector<SearchResult> results;
  results.reserve(cfg.restarts);
  for (auto& f : futures) results.push_back(f.get());
  return results;
}

std::vector<SearchResult> bound_sweep(const std::vector<int>& s_values, const SearchConfig& cfg) {
  if (s_values.empty()) throw std::invalid_argument("s_values must be nonempty");
  std::vector<SearchResult> best_per_s;
  best_per_s.reserve(s_values.size());
  for (int s : s_values) {
    SearchConfig per_s = cfg;
    per_s.s = s;
    std::vector<SearchResult> results = multi_start(per_s);
    int best = 0;
    for (int i = 1; i < static_cast<int>(results.size()); ++i)
      if (results[i].best_radius > results[best].best_radius) best = i;
    best_per_s.push_back(std::move(results[best]));
  }
  return best_per_s;
}

double distance_to_optimal_family(const RungeKuttaMethod& m) {
  const OptimalFamilyMember opt = make_optimal(m.stages());
  double dist = max_abs_diff(m.A, opt.method.A);
  dist = std::max(dist, max_abs_diff(m.b, opt.method.b));
  return dist;
}

}  // namespace ssp
