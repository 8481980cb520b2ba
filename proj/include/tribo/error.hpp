#pragma once

#include <stdexcept>
#include <string>

namespace tribo {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two scalars (or octonions) from different scalar variants were combined.
class VariantMismatch : public Error {
 public:
  using Error::Error;
};

/// A precondition on an argument failed (division by zero, n out of range, delta = 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Parameters fall outside the root regime (discriminant <= 0, repeated roots).
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (scalar literal, range, config file).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace tribo
