#pragma once

#include <stdexcept>
#include <string>

namespace reasm {

/// Input violates a structural contract (bad text, wrong ground set, ...).
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

/// Instance exceeds a configured solver or enumeration limit.
class LimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Anchored problem with no admissible second vertex.
class InfeasibleError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

} // namespace reasm
