#pragma once

#include <map>
#include <optional>

#include "conecorr/json_io.hpp"

namespace conecorr {

struct ExperimentConfig {
  ConePtr cone;
  std::optional<SublinearCorrespondence> correspondence;
  std::optional<LinearCorrespondence> linear;  // set when the kind is linear/identity
  std::optional<SemigroupFamily> family;
  NormSpec norm;
  unsigned seed = 0;
  std::string out_dir = "reports";
  nlohmann::json checks = nlohmann::json::array();
  std::optional<int> resolution_override;
  std::optional<double> tol_override;
};

ExperimentConfig parse_config(const nlohmann::json& doc);

struct CheckRecord {
  std::string name;
  nlohmann::ordered_json params;   // inputs echoed
  nlohmann::ordered_json values;   // computed values
  double tolerance = 0.0;
  std::string status;              // PASS | FAIL | EXPECTED-FAIL | INFO
  nlohmann::ordered_json witness;  // concrete witness on FAIL
  double wall_ms = 0.0;
  std::string csv_name;            // empty when the check emits no table
  std::string csv_content;

  bool pass_class() const { return status != "FAIL"; }
};

struct Report {
  std::string config_path;
  std::string timestamp;  // excluded (with wall_ms) from determinism comparisons
  std::vector<CheckRecord> checks;
  std::string overall;

  nlohmann::ordered_json to_json() const;
};

struct RunOptions {
  std::optional<std::string> out_dir;
  std::optional<int> resolution;
  std::optional<double> tol;
};

// Parses, validates and executes the config's checks. ConfigError for
// malformed configs; Error for check execution failures.
Report run_experiment(const std::string& config_path, const RunOptions& opts);

// Writes report.json and the per-check CSV tables under the out dir.
void write_report(const Report& report, const std::string& out_dir);

// Full CLI behaviour: returns 0 when all checks are pass-class, 1 otherwise.
int run_and_write(const std::string& config_path, const RunOptions& opts, std::ostream& out);

std::string list_builtins_text();

namespace checks {

using CheckFn = void (*)(const ExperimentConfig&, const nlohmann::json& params, CheckRecord&);

struct CheckInfo {
  const char* schema;
  bool needs_correspondence;
  bool needs_linear;
  bool needs_family;
  CheckFn fn;
};

const std::map<std::string, CheckInfo>& registry();

}  // namespace checks

}  // namespace conecorr
