#pragma once

#include <stdexcept>
#include <string>

namespace oapt {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  Precondition,
  Exceptional,
  Inconsistent,
  Parse,
};

/// Library-wide exception; the code maps one-to-one onto the C status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace oapt
