#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace demkit {

enum class ErrorCode {
  OutOfRange,
  SelfLoop,
  EdgeNotPresent,
  Disconnected,
  NotZero,
  IsTree,
  TooLarge,
  BadParameter,
  Overflow,
  Parse,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` distinguishes the cause.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace demkit
