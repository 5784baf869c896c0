#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pdxfit {

struct InvalidParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Numerical integration broke down; carries the last time the state was valid.
struct IntegrationError : std::runtime_error {
  double last_valid_time;
  IntegrationError(const std::string& what, double t)
      : std::runtime_error(what), last_valid_time(t) {}
};

struct EvaluationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All multi-start attempts failed; message holds per-start diagnostics.
struct FitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A bootstrap stratum is too small to resample from.
struct DesignViolationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Too many bootstrap refits failed for the interval to be trusted.
struct ReliabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Event budget of the exact simulator exhausted.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LabelingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  std::size_t row;  // 1-based row number, 0 if not row specific
  ParseError(const std::string& what, std::size_t row_number = 0)
      : std::runtime_error(what), row(row_number) {}
};

}  // namespace pdxfit
