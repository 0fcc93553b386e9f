#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gradedspec {

enum class ErrorKind {
  InvalidGrading,
  NotARing,
  ZeroRing,
  SizeExceeded,
  NonHomogeneousGenerator,
  RingMismatch,
  ImproperIdeal,
  NotAModule,
  ZeroModule,
  PreconditionFailed,
  ParseError,
  ValidationError,
  IOError,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidGrading: return "InvalidGrading";
    case ErrorKind::NotARing: return "NotARing";
    case ErrorKind::ZeroRing: return "ZeroRing";
    case ErrorKind::SizeExceeded: return "SizeExceeded";
    case ErrorKind::NonHomogeneousGenerator: return "NonHomogeneousGenerator";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::ImproperIdeal: return "ImproperIdeal";
    case ErrorKind::NotAModule: return "NotAModule";
    case ErrorKind::ZeroModule: return "ZeroModule";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::IOError: return "IOError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Configured size bounds. Carriers can never exceed kMaxCarrier.
struct Limits {
  std::size_t max_ring_order = 256;
  std::size_t max_module_order = 256;
  std::size_t max_group_order = 16;
  std::size_t max_lattice = 4096;
};

}  // namespace gradedspec
