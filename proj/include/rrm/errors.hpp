#pragma once

#include <stdexcept>
#include <string>

namespace rrm {

// Base for everything the library throws on purpose. The CLI maps the
// concrete type to an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent experiment configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Forward-reaction probability exceeds one; the step size must shrink.
class StepSizeError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure failed its own convergence or consistency check.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace rrm
