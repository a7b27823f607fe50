#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sectorlab {

/// Failure categories raised by the library. The CLI maps these onto exit codes.
enum class ErrorKind {
  InvalidArgument,
  ZeroPolynomial,
  NonpositiveRootPart,
  DegreeZero,
  NonConvergence,
  EmptyDisc,
  NotInRightHalfPlane,
  OffAxis,
  HypothesisViolation,
  ZeroPolynomialResult,
  DegenerateSequence,
  DomainError,
  ZeroOutsideRightHalfPlane,
  ZeroInteriorTerm,
  DegenerateLeading,
  SignFlip,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace sectorlab
