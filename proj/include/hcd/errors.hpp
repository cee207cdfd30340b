#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hcd {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: division by zero, context mismatch, missing substitution image.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A Groebner or linear-algebra computation exceeded its configured budget.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition does not hold (point off the set, singular point, empty set).
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class EmptySet : public PreconditionFailed {
 public:
  EmptySet() : PreconditionFailed("the ideal is the unit ideal: the set is empty") {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace hcd
