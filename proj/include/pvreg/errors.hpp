#pragma once

#include <stdexcept>
#include <string>

namespace pvreg {

/// Process exit codes used by the command line tool.
enum class ExitCode : int {
  kSuccess = 0,
  kValidation = 2,
  kNonConvergence = 3,
  kIo = 4,
};

/// Base of every error raised by the library. Each subclass maps onto one
/// exit code so the CLI can report failures uniformly.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual ExitCode exit_code() const { return ExitCode::kValidation; }
};

/// A point lies outside the domain (or outside B_R for the profile).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Coincident arguments of a singular kernel.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// Malformed or missing input values.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Boundary flux with nonzero net integral.
class CompatibilityError : public Error {
 public:
  using Error::Error;
};

/// Invalid parameter value (p <= 1, negative strength, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Invalid run configuration, including unknown keys and overlapping subdomains.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// The grid does not resolve the vortex cores.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// A scalar equation has no root in the admissible bracket.
class SolvabilityError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::kNonConvergence; }
};

/// An iterative method failed to converge.
class NonConvergenceError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::kNonConvergence; }
};

/// Integrator or factorization failure.
class NumericalError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::kNonConvergence; }
};

/// Filesystem failures.
class IoError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::kIo; }
};

}  // namespace pvreg
