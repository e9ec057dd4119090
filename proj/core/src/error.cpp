#include "saftwave/error.hpp"

namespace saftwave {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::NonpositiveB: return "NonpositiveB";
    case ErrorKind::EdgeMassTooLarge: return "EdgeMassTooLarge";
    case ErrorKind::ZeroScale: return "ZeroScale";
    case ErrorKind::PeriodMismatch: return "PeriodMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::ConditionTooLarge: return "ConditionTooLarge";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) +
                         (detail.empty() ? "" : ": " + detail)),
      kind_(kind) {}

}  // namespace saftwave
