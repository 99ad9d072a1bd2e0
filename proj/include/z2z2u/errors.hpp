#pragma once

#include <stdexcept>
#include <string>

namespace z2z2u {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands have different (alpha, beta) shapes, ring tags or lengths.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or brute-force computation would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (code files, vector literals, certificates).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace z2z2u
