#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lshape {

enum class ErrorCode {
  kInvalidArgument,
  kDegenerateAlpha,
  kOracleTooLarge,
  kSExceedsR,
  kBoundaryDegenerate,
  kLogDomain,
  kNoRootInUnitInterval,
  kMethodDisagreement,
  kArcDegenerate,
  kWall,
  kOnCriticalLine,
  kNoEtaRoot,
  kBranchMismatch,
  kOnCut,
  kOutsideBand,
  kWindowBelowCritical,
  kAngleOutOfRange,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kDegenerateAlpha: return "degenerate-alpha";
    case ErrorCode::kOracleTooLarge: return "oracle-too-large";
    case ErrorCode::kSExceedsR: return "s-exceeds-r";
    case ErrorCode::kBoundaryDegenerate: return "boundary-degenerate";
    case ErrorCode::kLogDomain: return "log-domain";
    case ErrorCode::kNoRootInUnitInterval: return "no-root-in-unit-interval";
    case ErrorCode::kMethodDisagreement: return "method-disagreement";
    case ErrorCode::kArcDegenerate: return "arc-degenerate";
    case ErrorCode::kWall: return "wall";
    case ErrorCode::kOnCriticalLine: return "on-critical-line";
    case ErrorCode::kNoEtaRoot: return "no-eta-root";
    case ErrorCode::kBranchMismatch: return "branch-mismatch";
    case ErrorCode::kOnCut: return "on-cut";
    case ErrorCode::kOutsideBand: return "outside-band";
    case ErrorCode::kWindowBelowCritical: return "window-below-critical";
    case ErrorCode::kAngleOutOfRange: return "angle-out-of-range";
  }
  return "unknown";
}

/// Domain errors that cross module boundaries. `code()` is stable and is what
/// the CLI maps to exit statuses; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline void require(bool condition, ErrorCode code, const std::string& detail) {
  if (!condition) throw Error(code, detail);
}

}  // namespace lshape
