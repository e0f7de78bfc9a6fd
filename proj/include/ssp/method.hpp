#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ssp/linalg.hpp"

namespace ssp {

/// A Runge-Kutta method in Butcher form: stage matrix A (s x s), weight
/// vector b (length s). Stage equations read
///   y_i = u + tau * sum_j A(i,j) f(y_j),   u_next = u + tau * sum_j b_j f(y_j).
struct RungeKuttaMethod {
  std::string label;
  Matrix A;
  std::vector<double> b;

  int stages() const { return static_cast<int>(b.size()); }
};

/// Builds a method and validates the shape invariants (A is s x s, b has s
/// entries, s >= 1). Throws FormatError on mismatch.
RungeKuttaMethod make_method(std::string label, Matrix A, std::vector<double> b);

/// True iff every strictly-upper entry of A is exactly zero, so stages can be
/// solved one after another.
bool is_dirk(const RungeKuttaMethod& m);

/// Residuals of the two second-order conditions: (b^T e - 1, b^T A e - 1/2).
/// Both zero (within tolerance) iff the method is at least second order.
std::pair<double, double> order2_residuals(const RungeKuttaMethod& m);

bool is_second_order(const RungeKuttaMethod& m, double tolerance);

}  // namespace ssp
