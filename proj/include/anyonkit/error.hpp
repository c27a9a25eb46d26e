#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace anyonkit {

enum class ErrorKind {
  CapExceeded,
  InvalidArgument,
  NotNormalized,
  PentagonViolated,
  NotACocycle,
  NotQuadratic,
  NotBiadditive,
  OddModulus,
  EvenMultiplier,
  EtaMismatch,
  NotModular,
  NotOddPrime,
  BadEpsilon,
  BadMultiplier,
  DecompositionFailed,
  MalformedInput,
  Internal,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::PentagonViolated: return "PentagonViolated";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::NotQuadratic: return "NotQuadratic";
    case ErrorKind::NotBiadditive: return "NotBiadditive";
    case ErrorKind::OddModulus: return "OddModulus";
    case ErrorKind::EvenMultiplier: return "EvenMultiplier";
    case ErrorKind::EtaMismatch: return "EtaMismatch";
    case ErrorKind::NotModular: return "NotModular";
    case ErrorKind::NotOddPrime: return "NotOddPrime";
    case ErrorKind::BadEpsilon: return "BadEpsilon";
    case ErrorKind::BadMultiplier: return "BadMultiplier";
    case ErrorKind::DecompositionFailed: return "DecompositionFailed";
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the ErrorKind tags.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) fail(kind, what);
}

}  // namespace anyonkit
