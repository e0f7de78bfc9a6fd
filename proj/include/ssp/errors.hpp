#pragma once

#include <stdexcept>
#include <string>

namespace ssp {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// I + r*A is numerically singular; r sits at a pole of the transformation.
struct SingularTransform : Error {
  using Error::Error;
};

/// The Butcher form cannot be recovered from a transformed form with r = 0.
struct ZeroRadius : Error {
  using Error::Error;
};

/// Stage count outside the supported range.
struct InvalidStageCount : Error {
  using Error::Error;
};

/// w^T N^2 e vanished while the numerator did not.
struct DegenerateDenominator : Error {
  using Error::Error;
};

/// Weight vector is not a probability simplex point.
struct InvalidSimplex : Error {
  using Error::Error;
};

/// Vector with zero mass cannot be normalized.
struct ZeroVector : Error {
  using Error::Error;
};

/// Scalar bound requires s >= 2.
struct InvalidStage : Error {
  using Error::Error;
};

/// Point lies outside the hypothesis region of the scalar bound.
struct HypothesisViolated : Error {
  using Error::Error;
};

/// Partitioned block is not invertible.
struct SingularBlock : Error {
  using Error::Error;
};

/// Order-condition projection has no solution for this sample.
struct DegenerateSample : Error {
  using Error::Error;
};

/// Implicit stage equation could not be solved to tolerance.
struct StageSolveFailure : Error {
  using Error::Error;
};

/// Method file does not match the expected JSON schema.
struct FormatError : Error {
  using Error::Error;
};

}  // namespace ssp
