#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lacunary {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands disagree in dimension, quotient relation, or coefficient ring.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// A required exact division (d | N, p | numerator, ...) does not hold.
class DivisibilityError : public Error {
 public:
  using Error::Error;
};

class ParityError : public Error {
 public:
  using Error::Error;
};

/// A floating-point evaluation could not be rounded to an integer with confidence.
class NumericConfidenceError : public Error {
 public:
  using Error::Error;
};

/// The requested evaluation lies outside what the chosen engine can represent.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A harmonic-type summation range is empty for the given prime.
class EmptyRangeError : public Error {
 public:
  using Error::Error;
};

class InsufficientSeeds : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
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

}  // namespace lacunary
