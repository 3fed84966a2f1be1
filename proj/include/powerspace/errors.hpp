#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace powerspace {

enum class ErrorCode {
  NotT0,
  CycleDetected,
  LimitExceeded,
  PowerspaceTooLarge,
  NotContinuous,
  ShapeMismatch,
  NotSaturated,
  NotEmbedding,
  PresentationMismatch,
  PreconditionViolated,
  NoUniquePoint,
  EmptySpace,
  MapUndefined,
  ParseError,
  InvalidInput,
};

std::string_view error_code_name(ErrorCode code);

/// Single exception type for the library; `code()` names the failure class.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// Resource-cap failures map to a distinct CLI exit status.
  bool is_resource_limit() const noexcept {
    return code_ == ErrorCode::PowerspaceTooLarge || code_ == ErrorCode::LimitExceeded;
  }

 private:
  ErrorCode code_;
};

}  // namespace powerspace
