#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weylreps {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// GNS vectors built over different states were combined.
class OwnerMismatch : public Error {
 public:
  using Error::Error;
};

/// Vectors of the position and momentum models were combined.
class FlavorMismatch : public Error {
 public:
  using Error::Error;
};

/// The requested generator does not exist in this representation
/// (the position operator in the momentum model and vice versa).
class NonexistentObservable : public Error {
 public:
  using Error::Error;
};

/// The Hermitian eigensolver did not converge.
class EigenFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace weylreps
