#pragma once

// Test-only oracles. These stay independent of the library code paths they
// check: the inverse below is a plain textbook Gauss-Jordan, and the radius
// scan walks a dense grid instead of bisecting.

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "ssp/analysis.hpp"
#include "ssp/linalg.hpp"
#include "ssp/method.hpp"

namespace oracle {

inline ssp::Matrix gauss_jordan_inverse(const ssp::Matrix& a) {
  const int n = a.rows();
  ssp::Matrix work = a;
  ssp::Matrix inv = ssp::Matrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int i = col + 1; i < n; ++i)
      if (std::abs(work(i, col)) > std::abs(work(pivot, col))) pivot = i;
    if (work(pivot, col) == 0.0) throw std::runtime_error("oracle: singular matrix");
    for (int j = 0; j < n; ++j) {
      std::swap(work(pivot, j), work(col, j));
      std::swap(inv(pivot, j), inv(col, j));
    }
    const double p = work(col, col);
    for (int j = 0; j < n; ++j) {
      work(col, j) /= p;
      inv(col, j) /= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      const double f = work(i, col);
      for (int j = 0; j < n; ++j) {
        work(i, j) -= f * work(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

/// Largest grid point k*step (k >= 0) with every smaller grid point feasible.
inline double grid_scan_radius(const ssp::RungeKuttaMethod& m, double step, double r_max) {
  double last_feasible = 0.0;
  for (double r = 0.0; r <= r_max; r += step) {
    if (!ssp::certify(m, r).feasible) return last_feasible;
    last_feasible = r;
  }
  return last_feasible;
}

/// General random DIRK: lower entries of both signs, positive random b mass.
/// Not second order; exercises certify/bisection away from the search
/// manifold.
inline ssp::RungeKuttaMethod random_dirk(int s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> lower(-0.3, 1.2);
  std::uniform_real_distribution<double> diag(-0.2, 1.0);
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  ssp::Matrix A(s, s);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < i; ++j) A(i, j) = lower(rng);
    A(i, i) = diag(rng);
  }
  std::vector<double> b(s);
  double mass = 0.0;
  for (double& bi : b) {
    bi = weight(rng);
    mass += bi;
  }
  for (double& bi : b) bi /= mass;
  return ssp::make_method("random-dirk", std::move(A), std::move(b));
}

}  // namespace oracle
