#include "ssp/optimal.hpp"

#include <cmath>
#include <string>

#include "ssp/errors.hpp"
#include "ssp/tolerances.hpp"
#include "ssp/transform.hpp"

namespace ssp {

OptimalFamilyMember make_optimal(int s) {
  if (s < 1) throw InvalidStageCount("stage count must be >= 1, got " + std::to_string(s));

  // Coefficients built from integer ratios, not decimal literals, to keep
  // representation error out of the radius checks.
  Matrix A(s, s);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < i; ++j) A(i, j) = 1.0 / s;
    A(i, i) = 1.0 / (2.0 * s);
  }
  std::vector<double> b(s, 1.0 / s);

  OptimalFamilyMember member;
  member.s = s;
  member.method =
      make_method("iterated-implicit-midpoint(" + std::to_string(s) + ")", std::move(A), std::move(b));
  member.claimed_radius = 2.0 * s;
  return member;
}

bool verify_structure(const OptimalFamilyMember& member) {
  const int s = member.s;
  TransformedForm tf;
  try {
    tf = to_transformed(member.method, 2.0 * s);
  } catch (const SingularTransform&) {
    return false;
  }

  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      const double expected = (j <= i) ? 2.0 : 0.0;
      if (std::abs(tf.N(i, j) - expected) > tol::alg) return false;
    }
  }

  for (int i = 0; i < s; ++i) {
    const double expected = (i == s - 1) ? 1.0 : 0.0;
    if (std::abs(tf.w[i] - expected) > tol::alg) return false;
  }

  // 2*M must be bidiagonal: +1 on the diagonal, -1 on the subdiagonal.
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      double expected = 0.0;
      if (i == j) expected = 1.0;
      if (i == j + 1) expected = -1.0;
      if (std::abs(2.0 * tf.M(i, j) - expected) > tol::alg) return false;
    }
  }
  return true;
}

}  // namespace ssp
