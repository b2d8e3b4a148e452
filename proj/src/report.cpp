#include "conecorr/report.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

namespace conecorr {

ExperimentConfig parse_config(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("config: expected a JSON object");
  ExperimentConfig cfg;
  if (!doc.contains("cone")) throw ConfigError("config: missing 'cone'");
  cfg.cone = cone_from_json(doc.at("cone"));

  if (doc.contains("correspondence")) {
    ParsedCorrespondence parsed = correspondence_from_json(doc.at("correspondence"), cfg.cone);
    cfg.correspondence = std::move(parsed.sublinear);
    cfg.linear = std::move(parsed.linear);
  }
  if (doc.contains("family")) cfg.family = family_from_json(doc.at("family"), cfg.cone);

  cfg.norm = norm_from_json(doc.contains("norm") ? doc.at("norm") : nlohmann::json(), cfg.cone);
  if (doc.contains("seed")) {
    if (!doc.at("seed").is_number_unsigned()) throw ConfigError("config: 'seed' must be unsigned");
    cfg.seed = doc.at("seed").get<unsigned>();
  }
  cfg.out_dir = doc.value("out", "reports");

  if (doc.contains("checks")) {
    if (!doc.at("checks").is_array()) throw ConfigError("config: 'checks' must be an array");
    cfg.checks = doc.at("checks");
  }

  const auto& reg = checks::registry();
  for (const auto& check : cfg.checks) {
    if (!check.is_object() || !check.contains("check"))
      throw ConfigError("config: each check needs a 'check' name");
    const std::string name = check.at("check").get<std::string>();
    const auto it = reg.find(name);
    if (it == reg.end()) throw ConfigError("config: unknown check '" + name + "'");
    if (it->second.needs_correspondence && !cfg.correspondence)
      throw ConfigError("config: check '" + name + "' needs a correspondence");
    if (it->second.needs_linear && !cfg.linear)
      throw ConfigError("config: check '" + name + "' needs a linear correspondence");
    if (it->second.needs_family && !cfg.family)
      throw ConfigError("config: check '" + name + "' needs a family");
    if (check.contains("resolution") &&
        (!check.at("resolution").is_number_integer() || check.at("resolution").get<int>() < 2))
      throw ConfigError("config: check '" + name + "' resolution must be an integer >= 2");
  }
  return cfg;
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["config"] = config_path;
  j["timestamp"] = timestamp;
  j["overall"] = overall;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CheckRecord& rec : checks) {
    nlohmann::ordered_json c;
    c["name"] = rec.name;
    c["params"] = rec.params;
    c["values"] = rec.values;
    c["tolerance"] = rec.tolerance;
    c["status"] = rec.status;
    c["witness"] = rec.witness.is_null() ? nlohmann::ordered_json() : rec.witness;
    c["csv"] = rec.csv_name.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(rec.csv_name);
    c["wall_ms"] = rec.wall_ms;
    arr.push_back(std::move(c));
  }
  j["checks"] = std::move(arr);
  return j;
}

namespace {

std::string now_string() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&tt, &tm_utc);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

}  // namespace

Report run_experiment(const std::string& config_path, const RunOptions& opts) {
  std::ifstream in(config_path);
  if (!in) throw ConfigError("config: cannot open '" + config_path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: parse error: ") + e.what());
  }

  ExperimentConfig cfg = parse_config(doc);
  if (opts.out_dir) cfg.out_dir = *opts.out_dir;
  cfg.resolution_override = opts.resolution;
  cfg.tol_override = opts.tol;
  if (cfg.resolution_override && *cfg.resolution_override < 2)
    throw ConfigError("config: resolution override must be >= 2");

  Report report;
  report.config_path = config_path;
  report.timestamp = now_string();
  const auto& reg = checks::registry();

  int index = 0;
  for (const auto& check : cfg.checks) {
    const std::string name = check.at("check").get<std::string>();
    CheckRecord rec;
    rec.name = name;
    rec.params = check;
    const auto start = std::chrono::steady_clock::now();
    reg.at(name).fn(cfg, check, rec);
    const auto stop = std::chrono::steady_clock::now();
    rec.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    if (!rec.csv_content.empty()) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%02d-%s.csv", index, name.c_str());
      rec.csv_name = buf;
    }
    report.checks.push_back(std::move(rec));
    ++index;
  }

  bool all_pass = true;
  for (const CheckRecord& rec : report.checks) all_pass &= rec.pass_class();
  report.overall = all_pass ? "PASS" : "FAIL";
  return report;
}

void write_report(const Report& report, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  {
    std::ofstream out(std::filesystem::path(out_dir) / "report.json", std::ios::binary);
    if (!out) throw Error("report: cannot write to '" + out_dir + "'");
    out << report.to_json().dump(2) << '\n';
  }
  for (const CheckRecord& rec : report.checks) {
    if (rec.csv_name.empty()) continue;
    std::ofstream out(std::filesystem::path(out_dir) / rec.csv_name, std::ios::binary);
    if (!out) throw Error("report: cannot write CSV to '" + out_dir + "'");
    out << rec.csv_content;
  }
}

int run_and_write(const std::string& config_path, const RunOptions& opts, std::ostream& out) {
  Report report = run_experiment(config_path, opts);

  std::string out_dir = "reports";
  if (opts.out_dir) {
    out_dir = *opts.out_dir;
  } else {
    std::ifstream in(config_path);
    nlohmann::json doc;
    in >> doc;
    out_dir = doc.value("out", out_dir);
  }
  write_report(report, out_dir);

  for (const CheckRecord& rec : report.checks)
    out << rec.status << "  " << rec.name << '\n';
  out << "overall: " << report.overall << "  (" << report.checks.size() << " checks, report in "
      << out_dir << ")\n";
  return report.overall == "PASS" ? 0 : 1;
}

std::string list_builtins_text() {
  std::string text;
  text += "correspondences:\n";
  text += "  identity          {}\n";
  text += "  linear            {\"basis_images\": [set, ...]}\n";
  text += "  interval-scalar   {\"a\": real, \"b\": real}        values {c x : a <= c <= b}\n";
  text += "  paper-example     {}                            quadrant counterexample rule\n";
  text += "  table             {\"directions\": [[w,...],...], \"values\": [set, ...]}\n";
  text += "families:\n";
  text += "  interval-scalar   {\"a\": real > 0, \"b\": real >= a}   phi^t = [e^{at}, e^{bt}] x\n";
  text += "  discrete-power    {\"base\": linear correspondence}   integer times only\n";
  text += "  hat-of            {\"base\": family}\n";
  text += "  idempotent        {\"base\": correspondence with psi(psi) = psi}\n";
  text += "norms: euclidean, coord-1, coord-inf, cone-induced\n";
  text += "checks:\n";
  for (const auto& [name, info] : checks::registry()) {
    text += "  ";
    text += name;
    for (std::size_t i = name.size(); i < 22; ++i) text += ' ';
    text += info.schema;
    text += '\n';
  }
  return text;
}

}  // namespace conecorr
