#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace saftwave {

enum class ErrorKind {
  NotUnimodular,
  NonpositiveB,
  EdgeMassTooLarge,
  ZeroScale,
  PeriodMismatch,
  IndexOutOfRange,
  SingularSystem,
  ConditionTooLarge,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All library failures are reported through this exception. what() starts
// with the kind name so callers that only print the message stay readable.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace saftwave
