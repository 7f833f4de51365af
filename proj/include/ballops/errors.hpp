#pragma once

#include <stdexcept>
#include <string>

namespace ballops {

enum class ErrorCode {
  // input / validation (CLI exit code 1)
  InvalidNumber,
  NotAPolygon,
  OriginNotInterior,
  NotSymmetric,
  EmptyInput,
  ScenarioError,
  IoError,
  // precondition violations (CLI exit code 2)
  UnboundedRegion,
  NegativeRadius,
  PointNotOnSphere,
  PointNotOnBoundary,
  PointsTooFar,
  CoincidentPoints,
  RadiusTooSmall,
  NotAChebyshevCenter,
  NotCentrable,
  Infeasible,
  Unbounded,
  // invariant breach (CLI exit code 3, always a bug)
  Internal,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidNumber: return "InvalidNumber";
    case ErrorCode::NotAPolygon: return "NotAPolygon";
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::ScenarioError: return "ScenarioError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::UnboundedRegion: return "UnboundedRegion";
    case ErrorCode::NegativeRadius: return "NegativeRadius";
    case ErrorCode::PointNotOnSphere: return "PointNotOnSphere";
    case ErrorCode::PointNotOnBoundary: return "PointNotOnBoundary";
    case ErrorCode::PointsTooFar: return "PointsTooFar";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::RadiusTooSmall: return "RadiusTooSmall";
    case ErrorCode::NotAChebyshevCenter: return "NotAChebyshevCenter";
    case ErrorCode::NotCentrable: return "NotCentrable";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

// Process exit code the CLI maps an error to: 1 input, 2 precondition, 3 bug.
inline int error_exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidNumber:
    case ErrorCode::NotAPolygon:
    case ErrorCode::OriginNotInterior:
    case ErrorCode::NotSymmetric:
    case ErrorCode::EmptyInput:
    case ErrorCode::ScenarioError:
    case ErrorCode::IoError:
      return 1;
    case ErrorCode::Internal:
      return 3;
    default:
      return 2;
  }
}

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }
  int exit_code() const { return error_exit_code(code_); }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

// Internal invariants; firing one is always a bug.
inline void check_internal(bool cond, const std::string& what) {
  if (!cond) fail(ErrorCode::Internal, what);
}

}  // namespace ballops
