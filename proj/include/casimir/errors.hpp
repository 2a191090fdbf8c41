#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An adaptive integration exhausted its subdivision budget before meeting
/// its tolerance, or the integrand produced a non-finite value.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, double value, double error_estimate)
      : std::runtime_error(what), value_(value), error_estimate_(error_estimate) {}
  explicit NonConvergence(const std::string& what)
      : NonConvergence(what, 0.0, 0.0) {}

  double value() const noexcept { return value_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double value_;
  double error_estimate_;
};

/// Requested evaluation lies outside the regime in which a formula or an
/// engine branch is valid (e.g. a low-temperature expansion used at A >= 1).
class RegimeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The two half-step finite-difference estimates of a derivative disagree.
class StepTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid scenario configuration. The message names the offending key.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace casimir
