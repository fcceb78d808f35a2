#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sylab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the mathematical input was violated (degree mismatch,
/// element not in group, subgroup not normal, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured resource bound was exceeded. Never a mathematical outcome.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. Carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An internal consistency check failed; indicates a bug, not a math result.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace sylab
