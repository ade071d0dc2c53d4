#pragma once

#include <stdexcept>
#include <string>

namespace geoperturb {

// Failure categories surfaced by the library. Each maps to one named
// error condition of the numerical constructions (domain violations,
// degenerate tensors, diverged iterations, ...).
enum class ErrorCode {
  DomainError,
  DegenerateMetric,
  SingularMetric,
  NonSmoothAtVector,
  DomainEscape,
  StepTooLarge,
  TooFewNodes,
  NormalFieldFlip,
  NotOrthonormal,
  BoundViolation,
  InverseDiverged,
  FlowEscape,
  JacobianIllConditioned,
  NotParallelForm,
  NonTransversalContact,
  GeometricallyEquivalent,
  SeedSearchFailed,
  DimensionTooLow,
  NoIntersectionCurve,
  MonotonicityLost,
  EpsilonExhausted,
  OffsetSelectionFailed,
  BallOverlapUnresolvable,
  NoConvergence,
  FramePropagationFailed,
  ConfigError,
  IoError,
  Precondition,
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::DegenerateMetric: return "DegenerateMetric";
    case ErrorCode::SingularMetric: return "SingularMetric";
    case ErrorCode::NonSmoothAtVector: return "NonSmoothAtVector";
    case ErrorCode::DomainEscape: return "DomainEscape";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::TooFewNodes: return "TooFewNodes";
    case ErrorCode::NormalFieldFlip: return "NormalFieldFlip";
    case ErrorCode::NotOrthonormal: return "NotOrthonormal";
    case ErrorCode::BoundViolation: return "BoundViolation";
    case ErrorCode::InverseDiverged: return "InverseDiverged";
    case ErrorCode::FlowEscape: return "FlowEscape";
    case ErrorCode::JacobianIllConditioned: return "JacobianIllConditioned";
    case ErrorCode::NotParallelForm: return "NotParallelForm";
    case ErrorCode::NonTransversalContact: return "NonTransversalContact";
    case ErrorCode::GeometricallyEquivalent: return "GeometricallyEquivalent";
    case ErrorCode::SeedSearchFailed: return "SeedSearchFailed";
    case ErrorCode::DimensionTooLow: return "DimensionTooLow";
    case ErrorCode::NoIntersectionCurve: return "NoIntersectionCurve";
    case ErrorCode::MonotonicityLost: return "MonotonicityLost";
    case ErrorCode::EpsilonExhausted: return "EpsilonExhausted";
    case ErrorCode::OffsetSelectionFailed: return "OffsetSelectionFailed";
    case ErrorCode::BallOverlapUnresolvable: return "BallOverlapUnresolvable";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::FramePropagationFailed: return "FramePropagationFailed";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::Precondition: return "Precondition";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace geoperturb
