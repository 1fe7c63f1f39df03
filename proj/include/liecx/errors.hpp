#pragma once

#include <stdexcept>
#include <string>

namespace liecx {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct NotSquare : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  using Error::Error;
};

// Raised by the Lie algebra constructor; carries the first failing triple.
struct JacobiViolation : Error {
  int i, j, k;
  JacobiViolation(const std::string& what, int i_, int j_, int k_)
      : Error(what), i(i_), j(j_), k(k_) {}
};

struct NotAComplexStructure : Error {
  using Error::Error;
};

struct InvalidInput : Error {
  using Error::Error;
};

struct ThetaRequired : InvalidInput {
  using InvalidInput::InvalidInput;
};

struct ThetaForbidden : InvalidInput {
  using InvalidInput::InvalidInput;
};

struct ThetaZero : InvalidInput {
  using InvalidInput::InvalidInput;
};

struct InvalidN : InvalidInput {
  using InvalidInput::InvalidInput;
};

struct InvalidJordanTriple : Error {
  using Error::Error;
};

struct SingularBasis : Error {
  using Error::Error;
};

// Requested construction has no known integrable structure (a negative
// result, not a usage error; the CLI maps it to exit code 1).
struct NoKnownStructure : Error {
  using Error::Error;
};

struct InconsistentFixing : InvalidInput {
  using InvalidInput::InvalidInput;
};

}  // namespace liecx
