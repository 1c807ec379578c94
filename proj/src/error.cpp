#include "kummerlab/error.hpp"

namespace kummerlab {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "INVALID_INPUT";
    case ErrorCode::Precondition: return "PRECONDITION";
    case ErrorCode::NonInvertible: return "NON_INVERTIBLE";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::NotIsometry: return "NOT_ISOMETRY";
    case ErrorCode::SplitViolation: return "SPLIT_VIOLATION";
    case ErrorCode::WrongRank: return "WRONG_RANK";
    case ErrorCode::WrongSignature: return "WRONG_SIGNATURE";
    case ErrorCode::UnsupportedDegree: return "UNSUPPORTED_DEGREE";
    case ErrorCode::SearchBoundExceeded: return "SEARCH_BOUND_EXCEEDED";
    case ErrorCode::NotHyperbolic: return "NOT_HYPERBOLIC";
    case ErrorCode::DegeneratePeriod: return "DEGENERATE_PERIOD";
    case ErrorCode::CapExceeded: return "CAP_EXCEEDED";
    case ErrorCode::EmptyEnsemble: return "EMPTY_ENSEMBLE";
    case ErrorCode::UnsupportedTau: return "UNSUPPORTED_TAU";
    case ErrorCode::InsufficientSamples: return "INSUFFICIENT_SAMPLES";
    case ErrorCode::DegenerateRadii: return "DEGENERATE_RADII";
    case ErrorCode::DegenerateFiber: return "DEGENERATE_FIBER";
    case ErrorCode::IndeterminatePoint: return "INDETERMINATE_POINT";
    case ErrorCode::OffSurface: return "OFF_SURFACE";
    case ErrorCode::ChartFailure: return "CHART_FAILURE";
    case ErrorCode::TooFewSaddles: return "TOO_FEW_SADDLES";
    case ErrorCode::Indeterminate: return "INDETERMINATE";
    case ErrorCode::OnCubic: return "ON_CUBIC";
    case ErrorCode::InternalInvariant: return "INTERNAL_INVARIANT";
  }
  return "UNKNOWN";
}

}  // namespace kummerlab
