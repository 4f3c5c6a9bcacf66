#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jcomp {

// Base for every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mismatched vector lengths or non-square matrices.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of a formula.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Dataset-level inconsistency (unknown titles, zero TC, duplicate years).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Malformed input text. line() is 1-based; 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& detail, const std::string& source = {})
      : Error(format(source, line, detail)), line_(line), detail_(detail) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  static std::string format(const std::string& source, std::size_t line, const std::string& detail) {
    std::string out = source.empty() ? "" : source + ": ";
    if (line) out += "line " + std::to_string(line) + ": ";
    return out + detail;
  }

  std::size_t line_;
  std::string detail_;
};

}  // namespace jcomp
