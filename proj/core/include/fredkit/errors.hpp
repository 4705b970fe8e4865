#pragma once

#include <stdexcept>
#include <string>

namespace fredkit {

// Every failure mode of the library maps to one code, so callers (and the
// CLI exit-code logic) can dispatch without parsing messages.
enum class ErrorCode {
  NotPSD,
  RingMismatch,
  RootNearCircle,
  DegreeCapExceeded,
  NotFinite,
  NotProjection,
  EpsilonTooLarge,
  NotAnInverse,
  ShapeViolation,
  PerturbationTooLarge,
  ProjectionsTooFar,
  TooFarApart,
  NotLeftInvertible,
  RankDrop,
  DecompositionInvalid,
  SmallnessFails,
  NotModularInverse,
  SeedFailure,
  NotFredholm,
  ParseError,
  UsageError,
  Internal,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::RootNearCircle: return "RootNearCircle";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::NotProjection: return "NotProjection";
    case ErrorCode::EpsilonTooLarge: return "EpsilonTooLarge";
    case ErrorCode::NotAnInverse: return "NotAnInverse";
    case ErrorCode::ShapeViolation: return "ShapeViolation";
    case ErrorCode::PerturbationTooLarge: return "PerturbationTooLarge";
    case ErrorCode::ProjectionsTooFar: return "ProjectionsTooFar";
    case ErrorCode::TooFarApart: return "TooFarApart";
    case ErrorCode::NotLeftInvertible: return "NotLeftInvertible";
    case ErrorCode::RankDrop: return "RankDrop";
    case ErrorCode::DecompositionInvalid: return "DecompositionInvalid";
    case ErrorCode::SmallnessFails: return "SmallnessFails";
    case ErrorCode::NotModularInverse: return "NotModularInverse";
    case ErrorCode::SeedFailure: return "SeedFailure";
    case ErrorCode::NotFredholm: return "NotFredholm";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UsageError: return "UsageError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace fredkit
