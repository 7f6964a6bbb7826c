// Copyright 2026 The idpent Authors
// SPDX-License-Identifier: Apache-2.0

#include "idpent/error.hpp"

namespace idpent {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Norm: return "NORM";
    case ErrorCode::Trace: return "TRACE";
    case ErrorCode::NotPsd: return "NOT_PSD";
    case ErrorCode::Dim: return "DIM";
    case ErrorCode::Weights: return "WEIGHTS";
    case ErrorCode::Cutoff: return "CUTOFF";
    case ErrorCode::Range: return "RANGE";
    case ErrorCode::NonCommuting: return "NONCOMMUTING";
    case ErrorCode::Eta: return "ETA";
    case ErrorCode::NullReduction: return "NULL_REDUCTION";
    case ErrorCode::NullState: return "NULL_STATE";
    case ErrorCode::UnknownCase: return "UNKNOWN_CASE";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace idpent
