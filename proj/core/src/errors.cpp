#include "skembed/errors.hpp"

namespace skembed {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonIntegrableMean: return "NonIntegrableMean";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::MeanNotZero: return "MeanNotZero";
    case ErrorCode::UnboundedValue: return "UnboundedValue";
    case ErrorCode::OutsideDisk: return "OutsideDisk";
    case ErrorCode::SingularityUnresolved: return "SingularityUnresolved";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotStarlike: return "NotStarlike";
    case ErrorCode::PathBudgetExceeded: return "PathBudgetExceeded";
    case ErrorCode::DistanceQueryFailure: return "DistanceQueryFailure";
    case ErrorCode::InsufficientTail: return "InsufficientTail";
    case ErrorCode::WindowMismatch: return "WindowMismatch";
    case ErrorCode::DerivativeVanishes: return "DerivativeVanishes";
    case ErrorCode::VerticalTangent: return "VerticalTangent";
    case ErrorCode::EdgeSingularity: return "EdgeSingularity";
  }
  return "Unknown";
}

}  // namespace skembed
