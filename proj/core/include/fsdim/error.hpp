#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fsdim {

enum class ErrorCode {
  InvalidBase,
  InvalidDigit,
  SpecOutOfRange,
  InsufficientDigits,
  SyntaxError,
  MissingTransition,
  DuplicateTransition,
  StateOutOfRange,
  EmptyPattern,
  InsufficientTraining,
  InvalidPermutation,
  AllRowsFlagged,
  InvalidArgument,
  Io,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every fsdim operation. The code is stable and
/// machine-readable; what() carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fsdim
