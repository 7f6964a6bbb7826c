// Copyright 2026 The idpent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace idpent {

enum class ErrorCode {
  Norm,
  Trace,
  NotPsd,
  Dim,
  Weights,
  Cutoff,
  Range,
  NonCommuting,
  Eta,
  NullReduction,
  NullState,
  UnknownCase,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying a stable error code alongside a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace idpent
