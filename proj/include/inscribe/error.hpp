#pragma once

#include <stdexcept>
#include <string>

namespace inscribe {

enum class ErrorCode {
  Parse,
  AllCollinear,
  NotSimple,
  CoverageError,
  DegenerateLine,
  InvalidPair,
  TooManyInterior,
  NotInterior,
  NotConvexPosition,
  Degenerate,
  EpsilonTooLarge,
  SignConditionViolated,
  EmptyTriangle,
  ParallelLines,
  ConstructionFailed,
  InvalidB,
  NotConvexInterior,
  UnknownLabel,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

/// Every recoverable failure in the library. The CLI maps these to exit code 2.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace inscribe
