#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sgqw {

enum class ErrorCode {
  EmptySubgraph,
  InvalidVertex,
  LoopEdge,
  DuplicateEdge,
  TooSmall,
  TooLarge,
  InvalidArc,
  InvalidEdge,
  EmptyComplement,
  DimensionMismatch,
  NotSymmetric,
  NoConvergence,
  DegenerateSpectrum,
  SolverFailure,
  StepCapExceeded,
  ZeroTrials,
  InvalidDescriptor,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every recoverable failure in the library is reported through this type;
/// `code()` lets callers (the CLI in particular) map failures onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sgqw
