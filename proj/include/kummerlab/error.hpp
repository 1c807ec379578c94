#pragma once

#include <stdexcept>
#include <string>

namespace kummerlab {

enum class ErrorCode {
  InvalidInput,
  Precondition,
  NonInvertible,
  DimensionMismatch,
  NotIsometry,
  SplitViolation,
  WrongRank,
  WrongSignature,
  UnsupportedDegree,
  SearchBoundExceeded,
  NotHyperbolic,
  DegeneratePeriod,
  CapExceeded,
  EmptyEnsemble,
  UnsupportedTau,
  InsufficientSamples,
  DegenerateRadii,
  DegenerateFiber,
  IndeterminatePoint,
  OffSurface,
  ChartFailure,
  TooFewSaddles,
  Indeterminate,
  OnCubic,
  InternalInvariant,
};

const char* to_string(ErrorCode code);

/// Error raised by every module operation. `stage` carries the failing
/// step of a composed map (involution chain index), or -1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, int stage = -1)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), stage_(stage) {}

  ErrorCode code() const noexcept { return code_; }
  int stage() const noexcept { return stage_; }

 private:
  ErrorCode code_;
  int stage_;
};

}  // namespace kummerlab
