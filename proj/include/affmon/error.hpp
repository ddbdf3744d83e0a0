#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace affmon {

enum class Errc {
  ZeroVector,
  NegativeCoordinate,
  BothZero,
  NotUnimodular,
  EmptyMatrix,
  NotPhiMinimal,
  NegativeResult,
  ZeroGenerator,
  DuplicateGenerator,
  DuplicatePhi,
  NormalizationEscapesCone,
  BadDimension,
  NotMinimallyGenerated,
  NotCanonical,
  GcdNotOne,
  RepMismatch,
  FactorizationMismatch,
  StarRequired,
  NotMember,
  ZeroElement,
  PeriodicityViolated,
  WrongBranch,
  SyntaxError,
  InvalidArgument,
  InternalInconsistency,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::NegativeCoordinate: return "NegativeCoordinate";
    case Errc::BothZero: return "BothZero";
    case Errc::NotUnimodular: return "NotUnimodular";
    case Errc::EmptyMatrix: return "EmptyMatrix";
    case Errc::NotPhiMinimal: return "NotPhiMinimal";
    case Errc::NegativeResult: return "NegativeResult";
    case Errc::ZeroGenerator: return "ZeroGenerator";
    case Errc::DuplicateGenerator: return "DuplicateGenerator";
    case Errc::DuplicatePhi: return "DuplicatePhi";
    case Errc::NormalizationEscapesCone: return "NormalizationEscapesCone";
    case Errc::BadDimension: return "BadDimension";
    case Errc::NotMinimallyGenerated: return "NotMinimallyGenerated";
    case Errc::NotCanonical: return "NotCanonical";
    case Errc::GcdNotOne: return "GcdNotOne";
    case Errc::RepMismatch: return "RepMismatch";
    case Errc::FactorizationMismatch: return "FactorizationMismatch";
    case Errc::StarRequired: return "StarRequired";
    case Errc::NotMember: return "NotMember";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::PeriodicityViolated: return "PeriodicityViolated";
    case Errc::WrongBranch: return "WrongBranch";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace affmon
