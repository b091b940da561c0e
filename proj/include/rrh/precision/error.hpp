#pragma once

#include <stdexcept>
#include <string>

namespace rrh {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A gamma factor was evaluated at a non-positive integer.
class PoleError : public DomainError {
 public:
  PoleError(const std::string& what, long pole)
      : DomainError(what + " (pole at " + std::to_string(pole) + ")"), pole_(pole) {}

  long pole() const noexcept { return pole_; }

 private:
  long pole_;
};

/// Parameters for which a formula degenerates to 0/0 or x/0.
class DegenerateParameterError : public DomainError {
 public:
  DegenerateParameterError(const std::string& what, int factor)
      : DomainError(what), factor_(factor) {}

  int factor() const noexcept { return factor_; }

 private:
  int factor_;
};

/// An evaluation point where a quantity used as a denominator vanishes.
class DegeneratePointError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Morphisms whose words do not line up.
class CompositionError : public Error {
 public:
  using Error::Error;
};

}  // namespace rrh
