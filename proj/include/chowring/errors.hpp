#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chowring {

enum class ErrorKind {
  EmptyInput,
  DuplicateLabel,
  UnknownLabel,
  CyclicCovers,
  NotALattice,
  NotComparable,
  NotAtomic,
  ContainsBottom,
  BottomElement,
  NotABuildingSet,
  TooLarge,
  NotInBuildingSet,
  NotNested,
  NotGraded,
  NotGeometric,
  InvalidParameters,
  OutOfRange,
  NonHomogeneousGenerator,
  NonMonicBasis,
  ConeNotInFan,
  RayNotInterior,
  OrderNotAdmissible,
  FaceMissing,
  SyntaxError,
  ValidationError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::CyclicCovers: return "CyclicCovers";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::NotAtomic: return "NotAtomic";
    case ErrorKind::ContainsBottom: return "ContainsBottom";
    case ErrorKind::BottomElement: return "BottomElement";
    case ErrorKind::NotABuildingSet: return "NotABuildingSet";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotInBuildingSet: return "NotInBuildingSet";
    case ErrorKind::NotNested: return "NotNested";
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::NotGeometric: return "NotGeometric";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NonHomogeneousGenerator: return "NonHomogeneousGenerator";
    case ErrorKind::NonMonicBasis: return "NonMonicBasis";
    case ErrorKind::ConeNotInFan: return "ConeNotInFan";
    case ErrorKind::RayNotInterior: return "RayNotInterior";
    case ErrorKind::OrderNotAdmissible: return "OrderNotAdmissible";
    case ErrorKind::FaceMissing: return "FaceMissing";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

/// Every failure raised by the library. `kind()` identifies the condition,
/// `what()` carries a readable message naming the offending elements.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace chowring
