#pragma once

#include <stdexcept>
#include <string>

namespace trient {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (wrong range, wrong shape).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Input data does not describe a physical object (non-Hermitian operator,
/// unnormalized state, incomplete measurement, impure covariance matrix).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The requested combination is outside what the library evaluates.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A formula was evaluated at a configuration where it divides by zero.
class SingularError : public Error {
 public:
  using Error::Error;
};

/// A constructive search exhausted its budget without reaching its target.
class SearchFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace trient
