#pragma once

#include <stdexcept>
#include <string>

namespace latticeturb {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid or inconsistent configuration (lengths, ranges, schema).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure. `diagnostics` carries solver-specific detail.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, std::string diagnostics = {})
      : Error(what), diagnostics_(std::move(diagnostics)) {}
  const std::string& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::string diagnostics_;
};

/// Requested time step violates a stability guard.
class StepSizeError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Iteration did not reach its tolerance within the step budget.
class ConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Solution grew beyond the blow-up threshold.
class DivergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace latticeturb
