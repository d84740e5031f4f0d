#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dfw {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Argument inside the domain but outside the supported/representable range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Pole of a special function (e.g. gamma at a non-positive integer).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// Malformed configuration, file or CLI input.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Numerical failure: singular systems, failed convergence.
class NumericError : public Error {
 public:
  using Error::Error;
};

class SingularSystemError : public NumericError {
 public:
  SingularSystemError(const std::string& what, double condition_estimate)
      : NumericError(what), condition_estimate_(condition_estimate) {}
  double condition_estimate() const noexcept { return condition_estimate_; }

 private:
  double condition_estimate_;
};

// A kernel was evaluated on its singular set while building a system.
class SingularEvaluationError : public NumericError {
 public:
  SingularEvaluationError(std::size_t row, std::size_t column)
      : NumericError("singular kernel evaluation at entry (" + std::to_string(row) + ", " +
                     std::to_string(column) + ")"),
        row_(row),
        column_(column) {}
  explicit SingularEvaluationError(const std::string& what)
      : NumericError(what), row_(0), column_(0) {}
  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

}  // namespace dfw
