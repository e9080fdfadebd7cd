#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wfbar {

/// Malformed text input. Carries the 1-based line number when known (0 otherwise).
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// A structural invariant of a complex, profile or spectrum does not hold.
class InvariantViolation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace wfbar
