// Error hierarchy shared by all modules.
#pragma once

#include <stdexcept>
#include <string>

namespace fourcalc {

struct CalcError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OverflowError : CalcError {
  using CalcError::CalcError;
};

struct BadParameter : CalcError {
  using CalcError::CalcError;
};

struct PreconditionViolated : CalcError {
  using CalcError::CalcError;
};

// group calculus
struct UnknownGenerator : CalcError {
  using CalcError::CalcError;
};
struct InconsistentIdentification : CalcError {
  using CalcError::CalcError;
};

// divisor / cover arithmetic
struct BasisMismatch : CalcError {
  using CalcError::CalcError;
};
struct NonIntegralGenus : CalcError {
  using CalcError::CalcError;
};

// manifold construction
struct UnknownSurface : CalcError {
  using CalcError::CalcError;
};
struct NotATorus : CalcError {
  using CalcError::CalcError;
};
struct GenusMismatch : CalcError {
  using CalcError::CalcError;
};
struct NormalBundleMismatch : CalcError {
  using CalcError::CalcError;
};
struct DisconnectedConfiguration : CalcError {
  using CalcError::CalcError;
};
struct MissingComplementFact : CalcError {
  using CalcError::CalcError;
};
struct UnknownBlock : CalcError {
  using CalcError::CalcError;
};
struct UnknownPipeline : CalcError {
  using CalcError::CalcError;
};

}  // namespace fourcalc
