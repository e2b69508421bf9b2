#pragma once

#include <stdexcept>
#include <string>

namespace rell {

enum class ErrorCode {
  ZeroVector,
  DimensionMismatch,
  FullDimRequired,
  ZeroGenerator,
  GroupNotFull,
  PointedRequired,
  BadLambda,
  BadRange,
  PreconditionViolated,
  ParseError,
  Internal,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Invariant violations inside the library. These are bugs, not bad input.
#define RELL_ASSERT(cond, msg)                                        \
  do {                                                                \
    if (!(cond))                                                      \
      throw ::rell::Error(::rell::ErrorCode::Internal,                \
                          std::string("internal assertion: ") + msg); \
  } while (0)

}  // namespace rell
