// Copyright 2026 The idpent Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Output {
  int code;
  std::string out;
};

Output run(const std::string& args) {
  const std::string cmd = std::string(IDPENT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool is_complex(const nlohmann::json& j) {
  return j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number();
}

// Returns an empty string when `doc` is an array of case reports, else the first problem found.
std::string validate(const nlohmann::json& doc) {
  if (!doc.is_array()) return "top level is not an array";
  for (const auto& r : doc) {
    if (!r.is_object()) return "report is not an object";
    if (!r.contains("case_id") || !r["case_id"].is_string()) return "case_id";
    if (!r.contains("max_abs_deviation") || !r["max_abs_deviation"].is_number()) return "max_abs_deviation";
    if (!r.contains("quantities") || !r["quantities"].is_array()) return "quantities";
    for (const auto& q : r["quantities"]) {
      if (!q.contains("name") || !q["name"].is_string()) return "quantity name";
      if (!q.contains("provenance") || !q["provenance"].is_string()) return "quantity provenance";
      if (!q.contains("computed") || !is_complex(q["computed"])) return "quantity computed";
      if (!q.contains("expected") || !is_complex(q["expected"])) return "quantity expected";
    }
    if (!r.contains("verdicts") || !r["verdicts"].is_array()) return "verdicts";
    for (const auto& v : r["verdicts"]) {
      if (!v.contains("context") || !v["context"].is_string()) return "verdict context";
      if (!v.contains("verdict") || !v["verdict"].is_string()) return "verdict value";
      const std::string s = v["verdict"];
      if (s != "separable_wrt" && s != "entangled_wrt") return "verdict enum";
    }
  }
  return {};
}

}  // namespace

TEST_CASE("list") {
  const Output a = run("list");
  CHECK(a.code == 0);
  CHECK(a.out.find("bell-particle-local") != std::string::npos);
  int lines = 0;
  std::istringstream in(a.out);
  for (std::string line; std::getline(in, line);) {
    ++lines;
    CHECK(std::count(line.begin(), line.end(), '\t') == 2);
  }
  CHECK(lines >= 10);
  CHECK(run("list").out == a.out);
}

TEST_CASE("run") {
  const Output r = run("run leftloc-3");
  CHECK(r.code == 0);
  CHECK(r.out.find("E_L |L,0;L,1> eta=+1             1                       1") != std::string::npos);

  CHECK(run("run xyz").code == 2);
  CHECK(run("run").code == 2);
  CHECK(run("run leftloc-3 --format yaml").code == 2);
  CHECK(run("run leftloc-3 --tolerance -1").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("run bell-particle-local --tolerance 1e-30").code == 1);
}

TEST_CASE("run --all --format json") {
  const Output r = run("run --all --format json");
  CHECK(r.code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(validate(doc).empty());
  CHECK(doc.size() >= 10);
  const nlohmann::json bad = nlohmann::json::parse(R"([{"case_id": 1}])");
  CHECK_FALSE(validate(bad).empty());
}

TEST_CASE("--output writes the report") {
  const std::string path = "idpent_cli_test_report.json";
  const Output r = run("run leftloc-1 leftloc-2 --format json --output " + path);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  const nlohmann::json doc = nlohmann::json::parse(in);
  CHECK(validate(doc).empty());
  CHECK(doc.size() == 2);
  std::remove(path.c_str());
}

TEST_CASE("verify") {
  const Output a = run("verify");
  CHECK(a.code == 0);
  CHECK(run("verify --tolerance 1e-30").code == 1);

  const nlohmann::json j42 = nlohmann::json::parse(run("verify --format json").out);
  const nlohmann::json j7 = nlohmann::json::parse(run("verify --format json --seed 7").out);
  REQUIRE(j42.size() == j7.size());
  bool witness_changed = false;
  for (size_t i = 0; i < j42.size(); ++i) {
    CHECK(j42[i]["passed"] == j7[i]["passed"]);
    witness_changed = witness_changed || j42[i]["witness"] != j7[i]["witness"];
  }
  CHECK(witness_changed);
}
