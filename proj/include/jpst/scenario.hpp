#pragma once

#include <string>

#include "json.hpp"
#include "jpst/common.hpp"

namespace jpst {

inline constexpr int kReportSchemaVersion = 1;

enum ExitCode : int { kExitOk = 0, kExitFailures = 1, kExitBudget = 2, kExitConfig = 3 };

struct ScenarioConfig {
  std::string command;       // verify, enumerate, coset
  std::string suite;         // verify
  std::string group;         // enumerate: el, pe
  std::string presentation;  // coset: linear, rect-EJ, jordan-St, stJ
  std::string pair = "full";
  std::string ring = "F2";
  std::string ring_file;     // structure constants JSON; overrides ring
  std::size_t i = 1, j = 1;
  std::size_t n = 3;         // linear size
  Budget budget;
  std::string out;           // report path; stdout when empty
  std::string export_path;   // coset: relators as text

  nlohmann::json to_json() const;
};

struct ScenarioResult {
  int exit_code = kExitOk;
  nlohmann::json report;
};

std::vector<std::string> scenario_suites();

// Never throws: configuration errors and budget exhaustion map to exit codes.
ScenarioResult run_scenario(const ScenarioConfig& config);

}  // namespace jpst
