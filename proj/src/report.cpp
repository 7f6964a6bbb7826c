// Copyright 2026 The idpent Authors
// SPDX-License-Identifier: Apache-2.0

#include "idpent/report.hpp"

#include "idpent/error.hpp"

#include <cstdio>
#include <sstream>

namespace idpent {

namespace {

nlohmann::json complex_json(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

cplx complex_from(const nlohmann::json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

std::string fmt_complex(cplx z) {
  char buf[64];
  if (z.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.12g", z.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  }
  return buf;
}

}  // namespace

void to_json(nlohmann::json& j, const Quantity& q) {
  j = {{"name", q.name},
       {"computed", complex_json(q.computed)},
       {"expected", complex_json(q.expected)},
       {"provenance", q.provenance}};
}

void from_json(const nlohmann::json& j, Quantity& q) {
  q.name = j.at("name").get<std::string>();
  q.computed = complex_from(j.at("computed"));
  q.expected = complex_from(j.at("expected"));
  q.provenance = j.at("provenance").get<std::string>();
}

Verdict verdict_from_string(const std::string& s) {
  if (s == to_string(Verdict::SeparableWrt)) return Verdict::SeparableWrt;
  if (s == to_string(Verdict::EntangledWrt)) return Verdict::EntangledWrt;
  throw Error(ErrorCode::Range, "unknown verdict '" + s + "'");
}

void to_json(nlohmann::json& j, const VerdictRecord& v) {
  j = {{"context", v.context}, {"verdict", to_string(v.verdict)}, {"expected", to_string(v.expected)}};
}

void from_json(const nlohmann::json& j, VerdictRecord& v) {
  v.context = j.at("context").get<std::string>();
  v.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  v.expected = j.contains("expected") ? verdict_from_string(j.at("expected").get<std::string>()) : v.verdict;
}

void to_json(nlohmann::json& j, const CaseInput& in) { j = {{"name", in.name}, {"value", complex_json(in.value)}}; }

void from_json(const nlohmann::json& j, CaseInput& in) {
  in.name = j.at("name").get<std::string>();
  in.value = complex_from(j.at("value"));
}

void to_json(nlohmann::json& j, const CaseResult& r) {
  j = {{"case_id", r.case_id},
       {"quantities", r.quantities},
       {"max_abs_deviation", r.max_abs_deviation},
       {"verdicts", r.verdicts}};
  if (!r.inputs.empty()) j["inputs"] = r.inputs;
}

void from_json(const nlohmann::json& j, CaseResult& r) {
  r.case_id = j.at("case_id").get<std::string>();
  r.quantities = j.at("quantities").get<std::vector<Quantity>>();
  r.max_abs_deviation = j.at("max_abs_deviation").get<double>();
  r.verdicts = j.at("verdicts").get<std::vector<VerdictRecord>>();
  r.inputs = j.contains("inputs") ? j.at("inputs").get<std::vector<CaseInput>>() : std::vector<CaseInput>{};
}

std::string format_text(const CaseResult& result, double tolerance) {
  std::ostringstream out;
  out << "== " << result.case_id << "  [" << (result.passed(tolerance) ? "ok" : "FAIL") << "]\n";
  size_t width = 8;
  for (const auto& q : result.quantities) width = std::max(width, q.name.size());
  char line[512];
  std::snprintf(line, sizeof line, "  %-*s  %-22s  %-22s  %-10s\n", static_cast<int>(width), "quantity", "computed",
                "expected", "deviation");
  out << line;
  for (const auto& q : result.quantities) {
    std::snprintf(line, sizeof line, "  %-*s  %-22s  %-22s  %-10.3g%s\n", static_cast<int>(width), q.name.c_str(),
                  fmt_complex(q.computed).c_str(), fmt_complex(q.expected).c_str(), q.deviation(),
                  q.deviation() > tolerance ? "  <-- mismatch" : "");
    out << line;
  }
  for (const auto& v : result.verdicts) {
    out << "  verdict " << v.context << ": " << to_string(v.verdict);
    if (!v.matches()) out << " (expected " << to_string(v.expected) << ")";
    out << "\n";
  }
  out << "  max_abs_deviation " << result.max_abs_deviation << "\n";
  return out.str();
}

std::string format_text(const std::vector<CaseResult>& results, double tolerance) {
  std::string out;
  for (const auto& r : results) out += format_text(r, tolerance);
  return out;
}

}  // namespace idpent
