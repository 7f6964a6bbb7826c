// Copyright 2026 The idpent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace idpent {

struct PropertyCheck {
  std::string name;
  double max_deviation = 0.0;
  double threshold = 0.0;
  bool passed = false;
  std::string witness;  // inputs of the worst trial
  int trials = 0;
};

struct VerifyOptions {
  double tolerance = 1e-9;  // checks use min(tolerance, their own bound)
  std::uint64_t seed = 42;
};

std::vector<PropertyCheck> run_property_suites(const VerifyOptions& options = {});

std::string format_checks(const std::vector<PropertyCheck>& checks);

}  // namespace idpent
