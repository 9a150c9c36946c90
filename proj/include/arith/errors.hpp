#pragma once

#include <stdexcept>
#include <string>

namespace arith {

/// Base class for every error raised by the library. The CLI maps all of
/// them to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller passed arguments outside an operation's contract.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A mathematical domain violation (n = 0, zero denominator, nonpositive base).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured resource bound (sieve limit, digit budget) is too small.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// The input is well formed but outside what the exact engine can decide,
/// e.g. a non-integer exponent in a power comparison.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A structural invariant was violated when constructing an object.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Two independent verification routes disagree with a proved implication.
/// Always an implementation defect.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace arith
