#pragma once

#include <stdexcept>
#include <string>

namespace fixity {

// Base for all toolkit errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad user-facing input: malformed cycle notation, catalog syntax, degree
// mismatches, violated operation preconditions.
struct InputError : Error {
  using Error::Error;
};

// Parse failure with position information (1-based line, 0 when unknown).
struct ParseError : InputError {
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InputError(format(what, line, column)), line(line), column(column) {}
  std::size_t line;
  std::size_t column;

 private:
  static std::string format(const std::string& what, std::size_t line,
                            std::size_t column) {
    if (line == 0) return what + " (at offset " + std::to_string(column) + ")";
    return what + " (line " + std::to_string(line) + ", column " +
           std::to_string(column) + ")";
  }
};

// An operation refused to run because the group/degree exceeds the
// configured enumeration bounds.
struct ResourceError : Error {
  using Error::Error;
};

// A self-check failed: the library produced data it could not certify.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace fixity
