// Copyright 2026 The idpent Authors
// SPDX-License-Identifier: Apache-2.0

// idpent: list and run the case studies, run the property suites.

#include "idpent/cases.hpp"
#include "idpent/error.hpp"
#include "idpent/report.hpp"
#include "idpent/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  double tolerance = idpent::kTolerance;
  std::uint64_t seed = 42;
  std::string output_path;
  std::string format = "text";
};

int emit(const RunConfig& config, const std::string& body) {
  if (config.output_path.empty()) {
    std::cout << body;
    return kExitOk;
  }
  std::ofstream out(config.output_path);
  if (!out) {
    std::cerr << "error: cannot write " << config.output_path << "\n";
    return kExitUsage;
  }
  out << body;
  return kExitOk;
}

int cmd_list() {
  for (const auto& info : idpent::case_registry()) {
    std::cout << info.id << "\t" << info.description << "\t" << info.anchor << "\n";
  }
  return kExitOk;
}

int cmd_run(std::vector<std::string> ids, bool all, const RunConfig& config) {
  if (all) {
    ids.clear();
    for (const auto& info : idpent::case_registry()) ids.push_back(info.id);
  }
  if (ids.empty()) {
    std::cerr << "error: give case ids or --all\n";
    return kExitUsage;
  }
  for (const auto& id : ids) {
    if (!idpent::is_registered(id)) {
      std::cerr << "error: unknown case id '" << id << "' (see 'idpent list')\n";
      return kExitUsage;
    }
  }

  idpent::CaseOptions options;
  options.seed = config.seed;
  std::vector<idpent::CaseResult> results;
  for (const auto& id : ids) results.push_back(idpent::run_case(id, options));

  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed(config.tolerance);

  std::string body;
  if (config.format == "json") {
    body = nlohmann::json(results).dump(2) + "\n";
  } else {
    body = idpent::format_text(results, config.tolerance);
  }
  if (const int rc = emit(config, body); rc != kExitOk) return rc;
  if (!ok) {
    if (config.format == "json" || !config.output_path.empty()) {
      for (const auto& r : results)
        if (!r.passed(config.tolerance)) std::cerr << idpent::format_text(r, config.tolerance);
    }
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& config) {
  const auto checks = idpent::run_property_suites({config.tolerance, config.seed});
  bool ok = true;
  for (const auto& c : checks) ok = ok && c.passed;

  std::string body;
  if (config.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : checks) {
      j.push_back({{"name", c.name},
                   {"max_deviation", c.max_deviation},
                   {"threshold", c.threshold},
                   {"passed", c.passed},
                   {"trials", c.trials},
                   {"witness", c.witness}});
    }
    body = j.dump(2) + "\n";
  } else {
    body = idpent::format_checks(checks);
  }
  if (const int rc = emit(config, body); rc != kExitOk) return rc;
  return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separability and entanglement checks for two identical particles"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  app.add_option("--tolerance", config.tolerance, "Pass threshold for deviations")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", config.seed, "Seed for sampled elements and random inputs")->capture_default_str();
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--output", config.output_path, "Write the report to this file");

  auto* list = app.add_subcommand("list", "List the registered cases");
  auto* run = app.add_subcommand("run", "Run cases and compare with reference values");
  std::vector<std::string> ids;
  bool all = false;
  run->add_option("ids", ids, "Case ids");
  run->add_flag("--all", all, "Run every registered case");
  auto* verify = app.add_subcommand("verify", "Run the property suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (list->parsed()) return cmd_list();
    if (run->parsed()) return cmd_run(ids, all, config);
    if (verify->parsed()) return cmd_verify(config);
  } catch (const idpent::Error& e) {
    std::cerr << "error: " << idpent::to_string(e.code()) << ": " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}
