// Copyright 2026 The idpent Authors
// SPDX-License-Identifier: Apache-2.0

#include "idpent/cases.hpp"
#include "idpent/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace idpent;

TEST_SUITE("cases") {

TEST_CASE("registry is populated and sorted") {
  const auto& reg = case_registry();
  CHECK(reg.size() >= 10);
  CHECK(std::is_sorted(reg.begin(), reg.end(), [](const CaseInfo& a, const CaseInfo& b) { return a.id < b.id; }));
  std::set<std::string> ids;
  for (const auto& info : reg) {
    ids.insert(info.id);
    CHECK_FALSE(info.description.empty());
    CHECK_FALSE(info.anchor.empty());
    CHECK(is_registered(info.id));
  }
  CHECK(ids.size() == reg.size());
  CHECK(ids.count("bell-particle-local") == 1);
  CHECK_FALSE(is_registered("xyz"));
}

TEST_CASE("every case passes at the default tolerance") {
  const auto results = run_all();
  CHECK(results.size() == case_registry().size());
  for (const auto& r : results) {
    INFO(r.case_id);
    CHECK(r.max_abs_deviation <= 1e-9);
    for (const auto& v : r.verdicts) {
      INFO(v.context);
      CHECK(v.matches());
    }
    CHECK(r.passed(1e-9));
    CHECK_FALSE(r.quantities.empty());
  }
}

TEST_CASE("provenance audit") {
  for (const auto& r : run_all()) {
    double worst = 0.0;
    for (const auto& q : r.quantities) {
      INFO(r.case_id << ": " << q.name);
      const bool tagged = q.provenance.rfind("published: ", 0) == 0 || q.provenance.rfind("derived: ", 0) == 0;
      CHECK(tagged);
      CHECK(q.provenance.size() > 12);
      worst = std::max(worst, q.deviation());
    }
    CHECK(r.max_abs_deviation == worst);
  }
}

TEST_CASE("determinism") {
  const auto a = run_all();
  const auto b = run_all();
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].case_id == b[i].case_id);
    REQUIRE(a[i].quantities.size() == b[i].quantities.size());
    for (size_t j = 0; j < a[i].quantities.size(); ++j) CHECK(a[i].quantities[j].computed == b[i].quantities[j].computed);
    REQUIRE(a[i].inputs.size() == b[i].inputs.size());
    for (size_t j = 0; j < a[i].inputs.size(); ++j) CHECK(a[i].inputs[j].value == b[i].inputs[j].value);
  }
}

TEST_CASE("random inputs are recorded and follow the seed") {
  const CaseResult r42 = run_case("doublewell-number-state");
  const CaseResult r7 = run_case("doublewell-number-state", {kTolerance, 7});
  CHECK_FALSE(r42.inputs.empty());
  REQUIRE(r42.inputs.size() == r7.inputs.size());
  bool differs = false;
  for (size_t i = 0; i < r42.inputs.size(); ++i) differs = differs || r42.inputs[i].value != r7.inputs[i].value;
  CHECK(differs);
  CHECK(r7.passed(1e-9));
}

TEST_CASE("leftloc-3: maximal entropy and separable subalgebra verdict together") {
  const CaseResult r = run_case("leftloc-3");
  int entropies = 0;
  for (const auto& q : r.quantities) {
    if (q.name.rfind("E_L", 0) == 0) {
      ++entropies;
      CHECK(std::abs(q.computed - cplx(1.0)) < 1e-9);
    }
  }
  CHECK(entropies == 2);
  REQUIRE_FALSE(r.verdicts.empty());
  for (const auto& v : r.verdicts) CHECK(v.verdict == Verdict::SeparableWrt);
}

TEST_CASE("unknown case") {
  try {
    (void)run_case("xyz");
    FAIL("expected UNKNOWN_CASE");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownCase);
  }
}

}  // TEST_SUITE
