#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polardeg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different rings (field or variable count differ).
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A precondition on the mathematical input is violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap (S-pair count, basis size) was exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Malformed polynomial or weight text. Carries a 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace polardeg
