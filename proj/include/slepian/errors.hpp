#pragma once

#include <stdexcept>
#include <string>

namespace slepian {

/// Caller supplied an argument outside an operation's domain.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Nested quadrature requested for more segments than the configured limit.
class DimensionTooLarge : public InvalidInput {
 public:
  DimensionTooLarge(int segments, int limit)
      : InvalidInput("DimensionTooLarge: " + std::to_string(segments) +
                     " segments exceed the quadrature limit of " + std::to_string(limit) +
                     "; use the Monte Carlo method"),
        segments_(segments),
        limit_(limit) {}

  int segments() const noexcept { return segments_; }
  int limit() const noexcept { return limit_; }

 private:
  int segments_;
  int limit_;
};

/// Quadrature error estimate stayed above tolerance after all refinements.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, double estimate, double error)
      : std::runtime_error(what), estimate_(estimate), error_(error) {}

  double estimate() const noexcept { return estimate_; }
  double error() const noexcept { return error_; }

 private:
  double estimate_;
  double error_;
};

/// A closed form produced a value too far outside [0, 1] to be rounding.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace slepian
