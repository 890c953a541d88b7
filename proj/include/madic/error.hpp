#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace madic {

/// Failure categories surfaced by the library. The C API maps each one onto a
/// stable status code, and the CLI maps them onto exit codes.
enum class Errc {
  NonPrimeModulus,
  DivisionByZero,
  FieldTooLarge,
  NonUnitLeadingCoefficient,
  BothZero,
  NotADivisor,
  NotCoprime,
  InvalidM,
  NotPrimitiveRoot,
  MultiplierNotCyclic,
  QNotResidue,
  IncompatibleS,
  BadSlotIndex,
  TooLarge,
  ParseError,
  InvalidArgument,
  Internal,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace madic
