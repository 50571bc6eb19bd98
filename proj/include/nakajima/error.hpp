#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nakajima {

enum class Errc {
  NonPrime,
  EvenCharacteristic,
  DegreeOutOfRange,
  DivisionByZero,
  FieldMismatch,
  NonTriangularRelation,
  ZeroRelation,
  TowerMismatch,
  NotInvertible,
  ZeroInput,
  EverywhereUnramifiedInput,
  SearchSpaceTooLarge,
  CapExceeded,
  UnverifiedGenerator,
  ImageNotInGroup,
  NonIntegralGenus,
  NonsensePRank,
  GenusTooSmall,
  OrderTooLarge,
  NonIntegralCount,
  UnknownCurve,
  BadParameter,
  UnknownScenario,
  ParseError,
  InvalidInput,
};

std::string_view errc_name(Errc code);

// Every failure surfaced by the library carries one of the codes above so
// callers (and the CLI exit-code mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace nakajima
