#ifndef SYNLA_ERRORS_HPP
#define SYNLA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace synla {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands have different ambient dimensions.
struct DimensionMismatch : Error {
  using Error::Error;
};

/// A matrix required to be PSD has negative spectrum beyond tolerance.
struct NotPositive : Error {
  using Error::Error;
};

/// Inversion requested for a matrix with spectrum inside the rank cutoff.
struct NotInvertible : Error {
  using Error::Error;
};

/// A matrix fails the projection invariant (idempotent symmetric).
struct NotProjection : Error {
  using Error::Error;
};

/// A matrix fails the effect invariant (0 <= e <= 1).
struct NotEffect : Error {
  using Error::Error;
};

/// An operation requiring commutativity was given non-commuting input.
struct NonCommutative : Error {
  using Error::Error;
};

/// An element is not a member of the subspace it must belong to.
struct NotMember : Error {
  using Error::Error;
};

/// A named precondition failed; the message names the violated inequality.
struct PreconditionFailure : Error {
  using Error::Error;
};

/// A self-check of a theorem-guaranteed identity failed beyond tolerance.
/// Seeing this means the numerics broke down, not that the caller erred.
struct InternalCheckFailure : Error {
  using Error::Error;
};

/// Malformed input document (matrix files, reports).
struct ParseError : Error {
  using Error::Error;
};

}  // namespace synla

#endif  // SYNLA_ERRORS_HPP
