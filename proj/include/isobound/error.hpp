#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isobound {

/// Bad orders, parameters, or structurally invalid inputs.
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Input larger than a desk-scale limit (exact search, theta).
class SizeLimitError : public std::length_error {
public:
  using std::length_error::length_error;
};

/// Unreadable or missing files.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

/// Eigensolver non-convergence or a value that should be integral but is not.
class NumericalFailure : public std::runtime_error {
public:
  NumericalFailure(const std::string &what, double residual)
      : std::runtime_error(what + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}

  double residual() const { return residual_; }

private:
  double residual_;
};

} // namespace isobound
