#include "ssp/method.hpp"

#include <cmath>

#include "ssp/errors.hpp"

namespace ssp {

RungeKuttaMethod make_method(std::string label, Matrix A, std::vector<double> b) {
  const int s = static_cast<int>(b.size());
  if (s < 1) throw FormatError("method needs at least one stage");
  if (A.rows() != s || A.cols() != s)
    throw FormatError("A must be " + std::to_string(s) + "x" + std::to_string(s));
  return RungeKuttaMethod{std::move(label), std::move(A), std::move(b)};
}

bool is_dirk(const RungeKuttaMethod& m) { return is_lower_triangular(m.A); }

std::pair<double, double> order2_residuals(const RungeKuttaMethod& m) {
  const int s = m.stages();
  double bsum = 0.0;
  double bAe = 0.0;
  for (int i = 0; i < s; ++i) {
    bsum += m.b[i];
    double row = 0.0;
    for (int j = 0; j < s; ++j) row += m.A(i, j);
    bAe += m.b[i] * row;
  }
  return {bsum - 1.0, bAe - 0.5};
}

bool is_second_order(const RungeKuttaMethod& m, double tolerance) {
  auto [r1, r2] = order2_residuals(m);
  return std::abs(r1) <= tolerance && std::abs(r2) <= tolerance;
}

}  // namespace ssp
