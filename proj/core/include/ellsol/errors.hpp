#pragma once

#include <stdexcept>
#include <string>

namespace ellsol {

// Base type for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Evaluation was requested inside the exclusion radius of a pole.
class PoleProximity : public Error {
 public:
  PoleProximity(const std::string& msg, double x, double proximity)
      : Error(msg), x_(x), proximity_(proximity) {}

  double x() const noexcept { return x_; }
  double proximity() const noexcept { return proximity_; }

 private:
  double x_;
  double proximity_;
};

// A series or iteration failed to reach its accuracy target.
class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

// Three real roots were required but the discriminant does not provide them.
class NonPositiveDiscriminant : public Error {
 public:
  using Error::Error;
};

// Spectral parameters whose lambda^2 values collide.
class DegenerateDeltas : public Error {
 public:
  using Error::Error;
};

// Every point of a residual grid fell inside a mask.
class EmptyGrid : public Error {
 public:
  using Error::Error;
};

// Arguments or configuration outside the supported domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace ellsol
