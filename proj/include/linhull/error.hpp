// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace linhull {

enum class ErrorCode {
  NotPrime = 1,
  SizeCapExceeded,
  NotADivisor,
  TowerMismatch,
  DegenerateInput,
  DependentGenerators,
  NotApplicable,
  NotNormalBasis,
  PreconditionFailed,
  ParseError,
  InvalidArgument,
  Mismatch,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying one of the library's error codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace linhull
