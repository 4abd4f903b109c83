#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prur {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in incompatible rings.
class ContextError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation (zero divisor, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Caller violated a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Invariant broken inside the library; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// A configured work budget was exhausted.
class StepLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// A local cap on optional work (see WorkCap) was reached.
class WorkCapExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace prur
