#pragma once

#include <stdexcept>
#include <string>

namespace lieext {

enum class Errc {
  AmbientMismatch,
  NotASubspace,
  DimensionMismatch,
  Singular,
  NotSolvable,
  InternalCheckFailed,
  NotFiliform,
  Unrecognized,
  BadParams,
  JacobiFailure,
  InvalidWeight,
  NotACocycle,
  NotInvertible,
  NotAnAutomorphism,
  NotNormalizable,
  ParseError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::NotASubspace: return "NotASubspace";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::Singular: return "Singular";
    case Errc::NotSolvable: return "NotSolvable";
    case Errc::InternalCheckFailed: return "InternalCheckFailed";
    case Errc::NotFiliform: return "NotFiliform";
    case Errc::Unrecognized: return "Unrecognized";
    case Errc::BadParams: return "BadParams";
    case Errc::JacobiFailure: return "JacobiFailure";
    case Errc::InvalidWeight: return "InvalidWeight";
    case Errc::NotACocycle: return "NotACocycle";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::NotAnAutomorphism: return "NotAnAutomorphism";
    case Errc::NotNormalizable: return "NotNormalizable";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace lieext
