#pragma once

#include <stdexcept>
#include <string>

namespace qotto {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an input value was violated (range, sign, probability).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The configuration is mathematically degenerate: a zero energy gap, a 0/0
/// efficiency, a vanishing heat denominator.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// Integration or invariant failure (unitarity drift, NaN, non-convergence).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration file or flag combination.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qotto
