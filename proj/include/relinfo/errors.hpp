#pragma once

#include <stdexcept>
#include <string>

namespace relinfo {

/// Input outside the domain of a function or physical model (bad quantum
/// numbers, Z >= 137, ...). Maps to CLI exit code 2.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// The integrand is not integrable at the origin (endpoint exponent <= -1).
class DivergentIntegral : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Adaptive refinement ran out of subdivisions before meeting the tolerance.
/// Maps to CLI exit code 3.
class ToleranceNotMet : public std::runtime_error {
  public:
    ToleranceNotMet(const std::string& what, double value, double error)
        : std::runtime_error(what), value_(value), error_(error) {}

    double value() const noexcept { return value_; }
    double error() const noexcept { return error_; }

  private:
    double value_;
    double error_;
};

} // namespace relinfo
