#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace circles {

enum class ErrorCode {
  NotDisjoint,
  DuplicatePoint,
  ParseError,
  LabelError,
  SizeMismatch,
  StrandMismatch,
  PartitionMismatch,
  ShapeMismatch,
  InvalidPath,
  NonGeneric,
  NotALoop,
  BasepointMismatch,
  DifferentComponent,
  TypeMismatch,
  NotIsomorphic,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

// Every library failure is reported through this exception type; the code
// lets callers branch without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace circles
