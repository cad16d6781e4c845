#pragma once

#include <stdexcept>
#include <string>

namespace daqc {

/// Bad input: violated precondition, malformed spec string, dimension
/// mismatch, divergent parameter regime. CLI exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Request exceeds a hard resource guard (qubit count, simulation budget).
/// CLI exit code 3.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Integrator norm drift exceeded its budget; retry with a smaller step.
class StepSizeError : public ValidationError {
 public:
  explicit StepSizeError(const std::string& what) : ValidationError(what) {}
};

/// Charge-basis truncation too small for the requested levels to converge.
class TruncationError : public ValidationError {
 public:
  explicit TruncationError(const std::string& what) : ValidationError(what) {}
};

}  // namespace daqc
