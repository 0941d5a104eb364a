#pragma once

#include <stdexcept>
#include <string>

namespace dimlift {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions or arities do not fit together.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap (dimension, variables, powerset width) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside of its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two cover paths of a diagram compose to different maps.
class CoherenceError : public Error {
 public:
  using Error::Error;
};

/// Malformed external input (JSON, rationals, relations).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input the algorithms do not handle (e.g. a non-dismantlable poset).
class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

/// A self-check failed. Indicates a bug, never bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace dimlift
