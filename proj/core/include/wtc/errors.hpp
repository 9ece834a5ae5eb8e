#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wtc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands that cannot be combined, e.g. jets about different base points.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A jet ran out of valid order. Seen from `generate`, this means the input
/// order budget was too small.
class InsufficientOrder : public Error {
 public:
  InsufficientOrder(const std::string& what, int required = -1)
      : Error(what), required_(required) {}

  /// Input order that would have sufficed, or -1 when unknown.
  int required() const noexcept { return required_; }

 private:
  int required_;
};

/// Caller violated a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A consistency identity that must hold exactly failed numerically; this
/// indicates a bug rather than bad input.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. line() is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace wtc
