#pragma once

#include <vector>

#include "ssp/linalg.hpp"
#include "ssp/method.hpp"

namespace ssp {

/// Change of variables used throughout the radius analysis:
///   N = I + r A,   M = N^{-1},   w^T = r b^T N^{-1}.
/// For DIRK input both N and M are lower triangular with the strict upper
/// part exactly zero.
struct TransformedForm {
  double r = 0.0;
  Matrix N;
  Matrix M;
  std::vector<double> w;

  int stages() const { return static_cast<int>(w.size()); }
};

/// Throws SingularTransform when |det(I + r A)| falls below the singularity
/// tolerance, i.e. r sits at a pole. DIRK inputs are inverted by forward
/// substitution, general ones by dense elimination.
TransformedForm to_transformed(const RungeKuttaMethod& m, double r);

/// Inverse substitution: A = (N - I)/r, b^T = w^T N / r. Throws ZeroRadius
/// when tf.r == 0 (the substitution collapses there).
RungeKuttaMethod from_transformed(const TransformedForm& tf);

}  // namespace ssp
