#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace csheaf {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands over different prime fields were combined.
class ModulusMismatch : public Error {
 public:
  using Error::Error;
};

/// Matrix or module shapes are incompatible.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An argument is outside the domain of the operation (bad vertex, bad subset, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Path enumeration did not stabilise within the configured length bound.
class NotFiniteDimensional : public Error {
 public:
  using Error::Error;
};

/// A relation is not an admissible combination of parallel paths.
class NonAdmissible : public Error {
 public:
  using Error::Error;
};

/// A theorem's hypothesis is not met (for example an unstable subcategory).
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

/// A check that must hold by construction failed; always a defect.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

/// A bounded search ran out of budget without a certificate either way.
class Undecided : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed; carries a 1-based position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace csheaf
