#pragma once

#include <stdexcept>
#include <string>

namespace macloops {

// Every failure the library can report, one code per documented condition.
// The CLI maps ParseError to exit code 2 and everything else to exit code 3.
enum class Errc {
  VertexOutOfRange,
  GhostVertex,
  EmptyIndexSet,
  BoundaryOfPoint,
  NotSimplyConnectedAssumptionViolated,
  NotHyperbolic,
  NotElliptic,
  CensusTooLarge,
  ReconstructionMismatch,
  WitnessInvariantViolation,
  InexactDivision,
  InvalidRationalFunction,
  ParameterOutOfRange,
  AssertionRequired,
  BoundaryRootUnresolved,
  ParseError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }
  const char* name() const { return errc_name(code_); }

private:
  Errc code_;
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::GhostVertex: return "GhostVertex";
    case Errc::EmptyIndexSet: return "EmptyIndexSet";
    case Errc::BoundaryOfPoint: return "BoundaryOfPoint";
    case Errc::NotSimplyConnectedAssumptionViolated: return "NotSimplyConnectedAssumptionViolated";
    case Errc::NotHyperbolic: return "NotHyperbolic";
    case Errc::NotElliptic: return "NotElliptic";
    case Errc::CensusTooLarge: return "CensusTooLarge";
    case Errc::ReconstructionMismatch: return "ReconstructionMismatch";
    case Errc::WitnessInvariantViolation: return "WitnessInvariantViolation";
    case Errc::InexactDivision: return "InexactDivision";
    case Errc::InvalidRationalFunction: return "InvalidRationalFunction";
    case Errc::ParameterOutOfRange: return "ParameterOutOfRange";
    case Errc::AssertionRequired: return "AssertionRequired";
    case Errc::BoundaryRootUnresolved: return "BoundaryRootUnresolved";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace macloops
