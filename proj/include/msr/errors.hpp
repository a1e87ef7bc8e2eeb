#pragma once

#include <stdexcept>
#include <string>

namespace msr {

// Thrown when input coordinates are non-finite or otherwise unusable.
class InvalidInputError : public std::runtime_error {
 public:
  explicit InvalidInputError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when points of different dimensions are mixed in one operation.
class DimensionMismatchError : public std::runtime_error {
 public:
  explicit DimensionMismatchError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when the ambient dimension is outside what a solver supports.
class UnsupportedDimensionError : public std::runtime_error {
 public:
  explicit UnsupportedDimensionError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by the brute-force oracle when an instance exceeds its size guard.
class SizeGuardError : public std::runtime_error {
 public:
  explicit SizeGuardError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an instance file cannot be parsed; carries the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace msr
