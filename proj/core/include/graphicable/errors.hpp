#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace graphicable {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input to a constructor or operation (bad edge, index out of
/// range, size mismatch, invalid family parameter).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search was asked to run beyond its documented bound.
/// Never a wrong answer, always this.
class ResourceLimitExceeded : public Error {
 public:
  ResourceLimitExceeded(const std::string& what, std::size_t limit, std::size_t actual)
      : Error(what + " (limit " + std::to_string(limit) + ", got " + std::to_string(actual) + ")"),
        limit_(limit),
        actual_(actual) {}

  std::size_t limit() const noexcept { return limit_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t limit_;
  std::size_t actual_;
};

/// Text that could not be parsed: a family spec string, a JSON document, a
/// rational literal. `line`/`column` are 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string field = {}, std::size_t line = 0,
             std::size_t column = 0)
      : Error(what), field_(std::move(field)), line_(line), column_(column) {}

  const std::string& field() const noexcept { return field_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string field_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace graphicable
