#pragma once

#include <stdexcept>
#include <string>

namespace ortho {

/// Invalid norm or scene description (asymmetric polygon, p < 1, bad JSON payload).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Degenerate geometric input (collinear triangle, coincident points, zero vectors
/// where a direction is required).
class DegenerateInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A root finder or minimizer did not produce a certified answer.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition, e.g. passed a point that is not
/// a circumcenter. Carries the measured residual.
class PreconditionViolation : public std::logic_error {
 public:
  PreconditionViolation(const std::string& what, double residual)
      : std::logic_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Busemann bisector of two opposite rays.
class UndefinedBisector : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace ortho
