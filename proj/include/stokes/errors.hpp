#pragma once

#include <stdexcept>
#include <string>

namespace stokes {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A documented precondition on configuration (node counts, grid sizes) is violated.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A runtime self-check failed (e.g. a root that must be unique is not).
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Adaptive quadrature ran out of panels before reaching its target.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double estimate, double error_estimate)
      : std::runtime_error(what), estimate_(estimate), error_estimate_(error_estimate) {}

  double estimate() const noexcept { return estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double estimate_;
  double error_estimate_;
};

}  // namespace stokes
