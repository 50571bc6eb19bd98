#include "nakajima/error.hpp"

namespace nakajima {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NonPrime: return "NonPrime";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::NonTriangularRelation: return "NonTriangularRelation";
    case Errc::ZeroRelation: return "ZeroRelation";
    case Errc::TowerMismatch: return "TowerMismatch";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::EverywhereUnramifiedInput: return "EverywhereUnramifiedInput";
    case Errc::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::UnverifiedGenerator: return "UnverifiedGenerator";
    case Errc::ImageNotInGroup: return "ImageNotInGroup";
    case Errc::NonIntegralGenus: return "NonIntegralGenus";
    case Errc::NonsensePRank: return "NonsensePRank";
    case Errc::GenusTooSmall: return "GenusTooSmall";
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::NonIntegralCount: return "NonIntegralCount";
    case Errc::UnknownCurve: return "UnknownCurve";
    case Errc::BadParameter: return "BadParameter";
    case Errc::UnknownScenario: return "UnknownScenario";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace nakajima
