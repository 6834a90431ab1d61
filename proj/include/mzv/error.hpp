#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mzv {

enum class Errc {
  CompositeP,
  ReducibleModulus,
  DegreeMismatch,
  InvalidArgument,
  Overflow,
  ZeroDenominator,
  NonUnitConstantTerm,
  ExponentOverflow,
  InvalidIndex,
  TooLarge,
  VerificationFailed,
  NoPolynomialSolution,
  NoSolution,
  NonUniqueSolution,
  UndefinedCoefficient,
  NotApplicable,
  NotCovered,
  InvalidFamily,
  ParseError,
};

constexpr std::string_view errc_name(Errc e) {
  switch (e) {
    case Errc::CompositeP: return "CompositeP";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Overflow: return "Overflow";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case Errc::ExponentOverflow: return "ExponentOverflow";
    case Errc::InvalidIndex: return "InvalidIndex";
    case Errc::TooLarge: return "TooLarge";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::NoPolynomialSolution: return "NoPolynomialSolution";
    case Errc::NoSolution: return "NoSolution";
    case Errc::NonUniqueSolution: return "NonUniqueSolution";
    case Errc::UndefinedCoefficient: return "UndefinedCoefficient";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::NotCovered: return "NotCovered";
    case Errc::InvalidFamily: return "InvalidFamily";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the sweep in particular) can classify it without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mzv
