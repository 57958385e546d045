#pragma once

#include <stdexcept>
#include <string>

namespace gaudin {

/// Argument outside the mathematical domain of an operation (wrong
/// half-plane, pole of Gamma, nonpositive length, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested value is infinite (e.g. E_a(0) with a <= 1).
class DivergenceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A quadrature or discretisation failed its self-convergence check.
class AccuracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed object violates one of its structural invariants.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Linear algebra breakdown.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// kappa <-> gamma inversion could not bracket or converge.
class InversionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Degenerate input to a log-log order fit.
class FitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Invalid option value or series order.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace gaudin
