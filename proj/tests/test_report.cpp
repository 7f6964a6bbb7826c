// Copyright 2026 The idpent Authors
// SPDX-License-Identifier: Apache-2.0

#include "idpent/report.hpp"

#include <doctest.h>

using namespace idpent;
using nlohmann::json;

TEST_SUITE("report") {

TEST_CASE("JSON round trip for every case") {
  for (const auto& r : run_all()) {
    const json j = r;
    const CaseResult back = json::parse(j.dump()).get<CaseResult>();
    CHECK(back.case_id == r.case_id);
    CHECK(back.max_abs_deviation == r.max_abs_deviation);
    REQUIRE(back.quantities.size() == r.quantities.size());
    for (size_t i = 0; i < r.quantities.size(); ++i) {
      CHECK(back.quantities[i].name == r.quantities[i].name);
      CHECK(back.quantities[i].computed == r.quantities[i].computed);
      CHECK(back.quantities[i].expected == r.quantities[i].expected);
      CHECK(back.quantities[i].provenance == r.quantities[i].provenance);
    }
    REQUIRE(back.verdicts.size() == r.verdicts.size());
    for (size_t i = 0; i < r.verdicts.size(); ++i) {
      CHECK(back.verdicts[i].context == r.verdicts[i].context);
      CHECK(back.verdicts[i].verdict == r.verdicts[i].verdict);
      CHECK(back.verdicts[i].expected == r.verdicts[i].expected);
    }
    REQUIRE(back.inputs.size() == r.inputs.size());
    for (size_t i = 0; i < r.inputs.size(); ++i) CHECK(back.inputs[i].value == r.inputs[i].value);
  }
}

TEST_CASE("schema shape") {
  const json j = run_case("nolabel-factor-2");
  CHECK(j.at("case_id").is_string());
  CHECK(j.at("max_abs_deviation").is_number());
  for (const auto& q : j.at("quantities")) {
    CHECK(q.at("name").is_string());
    CHECK(q.at("provenance").is_string());
    for (const char* key : {"computed", "expected"}) {
      REQUIRE(q.at(key).is_array());
      CHECK(q.at(key).size() == 2);
      CHECK(q.at(key)[0].is_number());
      CHECK(q.at(key)[1].is_number());
    }
  }
  for (const auto& v : j.at("verdicts")) {
    CHECK(v.at("context").is_string());
    const std::string s = v.at("verdict").get<std::string>();
    CHECK((s == "separable_wrt" || s == "entangled_wrt"));
  }
  CHECK_FALSE(j.contains("inputs"));
}

TEST_CASE("text table") {
  const CaseResult r = run_case("leftloc-3");
  const std::string text = format_text(r, 1e-9);
  CHECK(text.find("== leftloc-3  [ok]") != std::string::npos);
  CHECK(text.find("E_L |L,0;L,1> eta=+1") != std::string::npos);
  CHECK(text.find("separable_wrt") != std::string::npos);

  CaseResult bad = r;
  bad.quantities[0].computed += 1.0;
  bad.max_abs_deviation = 1.0;
  const std::string failing = format_text(bad, 1e-9);
  CHECK(failing.find("[FAIL]") != std::string::npos);
  CHECK(failing.find("<-- mismatch") != std::string::npos);
}

TEST_CASE("verdict strings") {
  CHECK(verdict_from_string("separable_wrt") == Verdict::SeparableWrt);
  CHECK(verdict_from_string("entangled_wrt") == Verdict::EntangledWrt);
  CHECK_THROWS(verdict_from_string("maybe"));
}

}  // TEST_SUITE
