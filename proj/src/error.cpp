#include "sectorlab/error.hpp"

namespace sectorlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NonpositiveRootPart: return "NonpositiveRootPart";
    case ErrorKind::DegreeZero: return "DegreeZero";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::EmptyDisc: return "EmptyDisc";
    case ErrorKind::NotInRightHalfPlane: return "NotInRightHalfPlane";
    case ErrorKind::OffAxis: return "OffAxis";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::ZeroPolynomialResult: return "ZeroPolynomialResult";
    case ErrorKind::DegenerateSequence: return "DegenerateSequence";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::ZeroOutsideRightHalfPlane: return "ZeroOutsideRightHalfPlane";
    case ErrorKind::ZeroInteriorTerm: return "ZeroInteriorTerm";
    case ErrorKind::DegenerateLeading: return "DegenerateLeading";
    case ErrorKind::SignFlip: return "SignFlip";
  }
  return "Unknown";
}

}  // namespace sectorlab
