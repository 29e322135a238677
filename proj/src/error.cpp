#include "sgqw/error.hpp"

namespace sgqw {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptySubgraph: return "EmptySubgraph";
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidArc: return "InvalidArc";
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::EmptyComplement: return "EmptyComplement";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorCode::SolverFailure: return "SolverFailure";
    case ErrorCode::StepCapExceeded: return "StepCapExceeded";
    case ErrorCode::ZeroTrials: return "ZeroTrials";
    case ErrorCode::InvalidDescriptor: return "InvalidDescriptor";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace sgqw
