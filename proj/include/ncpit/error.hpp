#pragma once

#include <stdexcept>
#include <string>

namespace ncpit {

// Error categories shared across the library. The CLI maps these to exit
// codes, tests match on them directly.
enum class Errc {
  NotPrime,
  DimMismatch,
  SyntaxError,
  CycleError,
  BadReference,
  CapExceeded,
  MixedLengths,
  EmptySet,
  ZeroPolynomial,
  FieldTooSmall,
  BoxDimRefused,
  DegenerateBound,
  DimTooLarge,
  Config,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::DimMismatch: return "DimMismatch";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::CycleError: return "CycleError";
    case Errc::BadReference: return "BadReference";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::MixedLengths: return "MixedLengths";
    case Errc::EmptySet: return "EmptySet";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::FieldTooSmall: return "FieldTooSmall";
    case Errc::BoxDimRefused: return "BoxDimRefused";
    case Errc::DegenerateBound: return "DegenerateBound";
    case Errc::DimTooLarge: return "DimTooLarge";
    case Errc::Config: return "Config";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace ncpit
