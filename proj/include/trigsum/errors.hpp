#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trigsum {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division of a rational, polynomial or field element by zero.
class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of an operation (negative binomial index,
/// angle that is not a rational multiple of pi, non-integer bound...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A trigonometric function or a quotient was evaluated at a singularity.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Operands live in cyclotomic fields of different conductors.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// An expression references a name that has no value in the binding.
class UnboundParameter : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed its configured work budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Syntax error in the identity language; `position` is a byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace trigsum
