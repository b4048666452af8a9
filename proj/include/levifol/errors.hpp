#pragma once

#include <stdexcept>
#include <string>

namespace levifol {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected input: malformed data or a violated precondition. Maps to CLI exit status 2.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Operands live in ambient spaces of different dimension.
class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

/// A check that holds for every valid input failed. Always a bug; CLI exit status 3.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace levifol
