#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Expected failures caused by the caller's input.
class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public DomainError {
 public:
  using DomainError::DomainError;
};

class DimensionMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

// Division by a zero norm: u lies on the null cone u^T eta u = 0.
class NullConeError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ArityMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class InadmissiblePair : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnclassifiedSpec : public DomainError {
 public:
  using DomainError::DomainError;
};

class ConstraintViolation : public DomainError {
 public:
  using DomainError::DomainError;
};

// An exact identity that must hold failed. Always an implementation bug.
class IdentityViolation : public Error {
 public:
  using Error::Error;
};

// A floating-point check exceeded its tolerance.
class ToleranceExceeded : public Error {
 public:
  ToleranceExceeded(const std::string& what, double measured, double tolerance)
      : Error(what + ": relative error " + std::to_string(measured) + " exceeds " +
              std::to_string(tolerance)),
        measured_(measured),
        tolerance_(tolerance) {}

  double measured() const { return measured_; }
  double tolerance() const { return tolerance_; }

 private:
  double measured_;
  double tolerance_;
};

}  // namespace hurwitz
