#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pdegreedy {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration value (unknown kernel name, bad beta, degenerate geometry, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Caller violated a precondition (dimension mismatch, empty input, odd panel count).
class UsageError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Division by a vanishing power value during a Newton step.
class NumericalBreakdown : public Error {
 public:
  NumericalBreakdown(std::ptrdiff_t index, const std::string& what)
      : Error(what), index_(index) {}

  std::ptrdiff_t index() const noexcept { return index_; }

 private:
  std::ptrdiff_t index_;
};

/// Dense Gram factorization hit a pivot below the singularity threshold.
class SingularSystem : public Error {
 public:
  SingularSystem(double min_pivot, const std::string& what)
      : Error(what), min_pivot_(min_pivot) {}

  double min_pivot() const noexcept { return min_pivot_; }

 private:
  double min_pivot_;
};

}  // namespace pdegreedy
