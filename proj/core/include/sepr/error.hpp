#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sepr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two polynomials built over different variable tables were combined.
class VariableTableMismatch : public Error {
 public:
  VariableTableMismatch() : Error("polynomials belong to different variable tables") {}
};

/// A precondition on a value was violated (zero divisor, zero polynomial, bad index, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An evaluation point did not assign a variable the polynomial uses.
class UnassignedVariable : public Error {
 public:
  explicit UnassignedVariable(const std::string& name)
      : Error("variable '" + name + "' is not assigned"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// A point meant for the open positive orthant has a non-positive coordinate.
class OrthantViolation : public Error {
 public:
  explicit OrthantViolation(const std::string& name)
      : Error("value of '" + name + "' is not strictly positive"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Syntax error in an entry expression; offset is a byte offset into the source text.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : Error("offset " + std::to_string(offset) + ": " + message),
        offset_(offset),
        message_(message) {}
  std::size_t offset() const noexcept { return offset_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t offset_;
  std::string message_;
};

/// Malformed matrix document. Row and column are 1-based; zero means "not applicable".
class MatrixFormatError : public Error {
 public:
  explicit MatrixFormatError(const std::string& message) : Error(message) {}
  MatrixFormatError(std::size_t row, std::size_t col, const ParseError& cause)
      : Error("entry (" + std::to_string(row) + "," + std::to_string(col) + ") " + cause.what()),
        row_(row),
        col_(col),
        offset_(cause.offset()) {}
  MatrixFormatError(std::size_t row, std::size_t col, std::size_t offset, const std::string& message)
      : Error("entry (" + std::to_string(row) + "," + std::to_string(col) + ") offset " +
              std::to_string(offset) + ": " + message),
        row_(row),
        col_(col),
        offset_(offset) {}
  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t row_ = 0;
  std::size_t col_ = 0;
  std::size_t offset_ = 0;
};

}  // namespace sepr
