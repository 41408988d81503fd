#pragma once

#include <stdexcept>
#include <string>

namespace lgcrit {

/// Failure categories surfaced by the library. Each maps to one structured
/// diagnostic so callers (and the CLI) can react without string matching.
enum class ErrorCode {
  FanoViolation,       // twist total exceeds base dimension
  NegativeTwist,       // a_j < 0
  Unsorted,            // twist vector not ascending
  SizeMismatch,        // vector length disagrees with the bundle layout
  ZeroCoordinate,      // torus point has a vanishing coordinate
  DegenerateLift,      // reduced root sits on a blown-down locus
  NonGenericParameter, // solver found the wrong number of isolated roots
  NewtonDivergence,    // correction iteration failed to contract
  PathCollision,       // two tracked points merged along the path
  AmbiguousMatch,      // endpoint matching had no clear nearest neighbor
  LabelAmbiguity,      // torus point not close to a unique grid node
  GridDegenerate,      // limit grid has coincident nodes
  InvalidArgument,     // precondition violation not covered above
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::FanoViolation: return "FanoViolation";
    case ErrorCode::NegativeTwist: return "NegativeTwist";
    case ErrorCode::Unsorted: return "Unsorted";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::ZeroCoordinate: return "ZeroCoordinate";
    case ErrorCode::DegenerateLift: return "DegenerateLift";
    case ErrorCode::NonGenericParameter: return "NonGenericParameter";
    case ErrorCode::NewtonDivergence: return "NewtonDivergence";
    case ErrorCode::PathCollision: return "PathCollision";
    case ErrorCode::AmbiguousMatch: return "AmbiguousMatch";
    case ErrorCode::LabelAmbiguity: return "LabelAmbiguity";
    case ErrorCode::GridDegenerate: return "GridDegenerate";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace lgcrit
