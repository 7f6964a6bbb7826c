// Copyright 2026 The idpent Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file cases.hpp
 * @brief Registry of parameter-free case studies with hard-coded reference values.
 *
 * Every quantity carries a provenance string starting with "published:"
 * (value stated in the literature this library reproduces) or "derived:"
 * (value worked out by hand from the definitions).
 */

#pragma once

#include "idpent/algebra.hpp"
#include "idpent/hilbert.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace idpent {

struct Quantity {
  std::string name;
  cplx computed;
  cplx expected;
  std::string provenance;

  double deviation() const { return std::abs(computed - expected); }
};

struct VerdictRecord {
  std::string context;
  Verdict verdict;
  Verdict expected;

  bool matches() const { return verdict == expected; }
};

/// Parameters drawn at run time (random polynomial coefficients).
struct CaseInput {
  std::string name;
  cplx value;
};

struct CaseResult {
  std::string case_id;
  std::vector<Quantity> quantities;
  double max_abs_deviation = 0.0;
  std::vector<VerdictRecord> verdicts;
  std::vector<CaseInput> inputs;

  bool passed(double tolerance) const;
};

struct CaseInfo {
  std::string id;
  std::string description;
  std::string anchor;
};

struct CaseOptions {
  double tolerance = kTolerance;  // threshold for factorization verdicts
  std::uint64_t seed = 42;
};

/// Sorted by id.
const std::vector<CaseInfo>& case_registry();
bool is_registered(std::string_view id);

/// Throws UNKNOWN_CASE for ids not in the registry.
CaseResult run_case(std::string_view id, const CaseOptions& options = {});
std::vector<CaseResult> run_all(const CaseOptions& options = {});

}  // namespace idpent
