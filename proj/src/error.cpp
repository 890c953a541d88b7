#include "madic/error.hpp"

namespace madic {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NonPrimeModulus: return "NonPrimeModulus";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::NonUnitLeadingCoefficient: return "NonUnitLeadingCoefficient";
    case Errc::BothZero: return "BothZero";
    case Errc::NotADivisor: return "NotADivisor";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::InvalidM: return "InvalidM";
    case Errc::NotPrimitiveRoot: return "NotPrimitiveRoot";
    case Errc::MultiplierNotCyclic: return "MultiplierNotCyclic";
    case Errc::QNotResidue: return "QNotResidue";
    case Errc::IncompatibleS: return "IncompatibleS";
    case Errc::BadSlotIndex: return "BadSlotIndex";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace madic
