#pragma once

#include <stdexcept>
#include <string>

namespace babel {

enum class Errc {
  InvalidInput,
  NegativeRadicand,
  UnsupportedType,
  DimensionMismatch,
  NotARoot,
  DatumMismatch,
  NotInApartment,
  DegenerateBasis,
  EmptyOmega,
  PreconditionViolated,
  Disjoint,
  NotASector,
  MixedLevels,
  PrecisionExhausted,
  ZeroDivision,
  ZeroToPrecision,
  NotInScrOF,
  NotMonomial,
  InvalidConfiguration,
  UnknownSuite,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace babel
