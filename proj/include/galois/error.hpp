#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace galois {

enum class ErrorCode {
  InvalidArgument,
  ZeroEndpoint,
  ZeroTuple,
  ZeroScale,
  DegreeTooSmall,
  BadPrime,
  NoUsablePrimes,
  Inconsistent,
  NotSquarefree,
  ZeroDiscriminant,
  PrecisionExhausted,
  DegenerateDelta,
  BerwickInconsistent,
  Reducible,
  OutOfRange,
  IoError,
  MixedDegrees,
  DegreeMismatch,
  DegenerateDataset,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroEndpoint: return "ZeroEndpoint";
    case ErrorCode::ZeroTuple: return "ZeroTuple";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::BadPrime: return "BadPrime";
    case ErrorCode::NoUsablePrimes: return "NoUsablePrimes";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::ZeroDiscriminant: return "ZeroDiscriminant";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::DegenerateDelta: return "DegenerateDelta";
    case ErrorCode::BerwickInconsistent: return "BerwickInconsistent";
    case ErrorCode::Reducible: return "Reducible";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::MixedDegrees: return "MixedDegrees";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::DegenerateDataset: return "DegenerateDataset";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map domain errors to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace galois
