#pragma once

#include "ssp/method.hpp"

namespace ssp {

/// Member of the radius-optimal second-order DIRK family: diagonal 1/(2s),
/// strictly-lower entries 1/s, weights 1/s. One step equals s iterated
/// implicit-midpoint substeps of size tau/s, and the method attains radius 2s.
struct OptimalFamilyMember {
  int s = 0;
  RungeKuttaMethod method;
  double claimed_radius = 0.0;  // = 2s
};

/// Throws InvalidStageCount for s < 1.
OptimalFamilyMember make_optimal(int s);

/// Transforms the member at r = 2s and checks the expected structure: N has
/// every lower-triangular entry equal to 2, w is the last unit vector, and
/// 2*M is bidiagonal with +1 diagonal and -1 subdiagonal (the factor 2
/// rescales M to unit diagonal; the conditions are invariant under positive
/// scaling of M).
bool verify_structure(const OptimalFamilyMember& member);

}  // namespace ssp
