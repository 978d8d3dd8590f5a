#pragma once

#include <stdexcept>
#include <string>

namespace finsler {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed arguments, out-of-range parameters, bad config files.
struct InvalidInput : Error {
  using Error::Error;
};

/// Division by a jet whose value part is zero, or a negative power of zero.
struct SingularJet : Error {
  using Error::Error;
};

/// Evaluation outside a function's domain (sqrt of a non-positive value,
/// s outside a family's working interval, ...).
struct DomainError : Error {
  using Error::Error;
};

struct NumericOverflow : Error {
  using Error::Error;
};

/// The fundamental tensor failed its positive-definiteness test.
struct NonPositiveDefinite : Error {
  using Error::Error;
};

/// The Berwald-frame normalization radicand is not positive, or a
/// closed-form denominator vanished.
struct DegenerateFrame : Error {
  using Error::Error;
};

/// Operation requested for a family it is not defined on.
struct UnsupportedFamily : Error {
  using Error::Error;
};

/// A denominator of the p/q split is numerically zero.
struct SingularSplit : Error {
  using Error::Error;
};

/// Mean Cartan torsion is numerically zero; the I-weighted decomposition
/// is undefined.
struct RiemannianFlag : Error {
  using Error::Error;
};

/// s is at (or too close to) the singular endpoints of a sqrt-type family.
struct SingularODE : Error {
  using Error::Error;
};

/// Adaptive quadrature did not converge within its subdivision budget.
struct QuadratureFailure : Error {
  using Error::Error;
};

}  // namespace finsler
