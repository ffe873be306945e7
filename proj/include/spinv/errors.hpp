#pragma once

#include <stdexcept>
#include <string>

namespace spinv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A well-formed input that violates an operation's precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public DomainError {
 public:
  using DomainError::DomainError;
};

class SingularMatrixError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Raised when an operation requiring a symplectic input receives a
// square matrix of even size that is not symplectic.
class NotSymplecticError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ToleranceError : public DomainError {
 public:
  ToleranceError(const std::string& what, double norm)
      : DomainError(what + " (norm " + std::to_string(norm) + ")"), norm_(norm) {}
  double norm() const { return norm_; }

 private:
  double norm_;
};

// A post-condition that the mathematics guarantees has failed. Indicates a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace spinv
