#pragma once

#include <stdexcept>
#include <string>

namespace rhobind {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid argument or violated precondition (bad order, bad partition, ...).
struct DomainError : Error {
  using Error::Error;
};

/// Exact int64 arithmetic left the representable range.
struct OverflowError : Error {
  using Error::Error;
};

/// An exhaustive scan was requested beyond its configured size cap.
struct CapExceededError : Error {
  using Error::Error;
};

/// Power iteration did not reach the residual tolerance within the cap.
struct ConvergenceError : Error {
  ConvergenceError(const std::string& msg, double residual)
      : Error(msg), last_residual(residual) {}
  double last_residual;
};

/// No sign change found when bracketing a real root.
struct RootIsolationError : Error {
  using Error::Error;
};

/// graph6 decoding failure. Subclasses distinguish the failure kind.
struct Graph6Error : Error {
  using Error::Error;
};
struct Graph6HeaderError : Graph6Error {
  using Graph6Error::Graph6Error;
};
struct Graph6CharError : Graph6Error {
  using Graph6Error::Graph6Error;
};
struct Graph6TruncatedError : Graph6Error {
  using Graph6Error::Graph6Error;
};

}  // namespace rhobind
