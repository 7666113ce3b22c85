// SPDX-License-Identifier: Apache-2.0
#include "linhull/error.hpp"

namespace linhull {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::NotADivisor: return "NotADivisor";
    case ErrorCode::TowerMismatch: return "TowerMismatch";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::DependentGenerators: return "DependentGenerators";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::NotNormalBasis: return "NotNormalBasis";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Mismatch: return "Mismatch";
  }
  return "Unknown";
}

}  // namespace linhull
