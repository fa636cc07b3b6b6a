#pragma once

#include <stdexcept>
#include <string>

namespace trm {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point or parameter lies outside the domain an operation is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An angle or direction was requested from a zero-length vector.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// The bisection polish of the s evaluator missed its residual target.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class NotCollinearError : public Error {
 public:
  using Error::Error;
};

/// No candidate survived the residual filter while tracing a circle.
class EmptyTraceError : public Error {
 public:
  using Error::Error;
};

/// The requested bound is only established for a different parameter range.
class UnsupportedRegime : public Error {
 public:
  using Error::Error;
};

/// An inverse hyperbolic sine argument would require the square root of a
/// non-positive quantity.
class NonpositiveArgError : public Error {
 public:
  using Error::Error;
};

}  // namespace trm
