// Copyright 2026 The idpent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "idpent/cases.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace idpent {

// Complex numbers are written as [re, im].
void to_json(nlohmann::json& j, const Quantity& q);
void from_json(const nlohmann::json& j, Quantity& q);
void to_json(nlohmann::json& j, const VerdictRecord& v);
void from_json(const nlohmann::json& j, VerdictRecord& v);
void to_json(nlohmann::json& j, const CaseInput& in);
void from_json(const nlohmann::json& j, CaseInput& in);
void to_json(nlohmann::json& j, const CaseResult& r);
void from_json(const nlohmann::json& j, CaseResult& r);

Verdict verdict_from_string(const std::string& s);

/// Fixed-width per-quantity table followed by the verdict lines.
std::string format_text(const CaseResult& result, double tolerance);
std::string format_text(const std::vector<CaseResult>& results, double tolerance);

}  // namespace idpent
