#pragma once

#include <stdexcept>
#include <string>

namespace ssbath {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative numerical procedure failed to reach its tolerance.
/// Carries the best estimate and the error bound achieved so far.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double estimate, double bound)
      : std::runtime_error(what), estimate_(estimate), bound_(bound) {}

  double estimate() const noexcept { return estimate_; }
  double bound() const noexcept { return bound_; }

 private:
  double estimate_;
  double bound_;
};

/// The first-order (q-1) expansion produced an unphysical value
/// (non-positive normalization, negative rate, ...).
class ValidityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller-supplied configuration is inconsistent (step size, truncation).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ssbath
