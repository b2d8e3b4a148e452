#include "conecorr/json_io.hpp"

namespace conecorr {

namespace {

const nlohmann::json& require_field(const nlohmann::json& j, const char* key,
                                    const char* context) {
  if (!j.is_object() || !j.contains(key))
    throw ConfigError(std::string(context) + ": missing field '" + key + "'");
  return j.at(key);
}

double require_number(const nlohmann::json& j, const char* key, const char* context) {
  const nlohmann::json& v = require_field(j, key, context);
  if (!v.is_number()) throw ConfigError(std::string(context) + ": '" + key + "' must be a number");
  return v.get<double>();
}

}  // namespace

nlohmann::ordered_json point_to_json(const Point& p) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (int i = 0; i < p.size(); ++i) arr.push_back(p[i]);
  return arr;
}

Point point_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw ConfigError("point: expected a nonempty array of numbers");
  Point p(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw ConfigError("point: expected a nonempty array of numbers");
    p[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  }
  return p;
}

nlohmann::ordered_json set_to_json(const CompactSet& s) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json pts = nlohmann::ordered_json::array();
  for (const Point& p : s.points) pts.push_back(point_to_json(p));
  j["points"] = std::move(pts);
  j["convex"] = s.convex;
  return j;
}

CompactSet set_from_json(const nlohmann::json& j) {
  const nlohmann::json& pts = require_field(j, "points", "set");
  if (!pts.is_array() || pts.empty()) throw ConfigError("set: 'points' must be a nonempty array");
  std::vector<Point> points;
  points.reserve(pts.size());
  for (const auto& p : pts) points.push_back(point_from_json(p));
  const bool convex = j.value("convex", true);
  try {
    return make_set(std::move(points), convex);
  } catch (const Error& e) {
    throw ConfigError(std::string("set: ") + e.what());
  }
}

nlohmann::ordered_json cone_to_json(const Cone& cone) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json basis = nlohmann::ordered_json::array();
  for (const Point& e : cone.basis()) basis.push_back(point_to_json(e));
  j["basis"] = std::move(basis);
  return j;
}

ConePtr cone_from_json(const nlohmann::json& j) {
  const nlohmann::json& basis = require_field(j, "basis", "cone");
  if (!basis.is_array() || basis.empty())
    throw ConfigError("cone: 'basis' must be a nonempty array of points");
  std::vector<Point> vectors;
  vectors.reserve(basis.size());
  for (const auto& e : basis) vectors.push_back(point_from_json(e));
  try {
    return make_cone_ptr(std::move(vectors));
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

NormSpec norm_from_json(const nlohmann::json& j, const ConePtr& cone) {
  std::string name = "euclidean";
  int resolution = 64;
  if (j.is_string()) {
    name = j.get<std::string>();
  } else if (j.is_object()) {
    name = require_field(j, "kind", "norm").get<std::string>();
    resolution = j.value("resolution", 64);
  } else if (!j.is_null()) {
    throw ConfigError("norm: expected a string or object");
  }
  if (name == "euclidean") return NormSpec::euclidean();
  if (name == "coord-1") return NormSpec::coord1();
  if (name == "coord-inf") return NormSpec::coord_inf();
  if (name == "cone-induced") {
    if (!cone) throw ConfigError("norm: cone-induced requires a cone");
    return NormSpec::cone_induced(cone, NormSpec::euclidean(), resolution);
  }
  throw ConfigError("norm: unknown kind '" + name + "'");
}

ParsedCorrespondence correspondence_from_json(const nlohmann::json& j, const ConePtr& fallback) {
  const std::string kind = require_field(j, "kind", "correspondence").get<std::string>();
  // the document may carry its own cone and may nest parameters under
  // "params" or keep them at the top level
  ConePtr cone = j.contains("cone") ? cone_from_json(j.at("cone")) : fallback;
  if (!cone) throw ConfigError("correspondence: no cone given");
  nlohmann::json merged = j;
  if (j.contains("params") && j.at("params").is_object()) {
    for (const auto& [key, value] : j.at("params").items()) merged[key] = value;
  }
  const nlohmann::json& p = merged;
  ParsedCorrespondence parsed;
  try {
    if (kind == "identity") {
      parsed.linear = identity_correspondence(cone);
      parsed.sublinear = wrap_linear(*parsed.linear);
    } else if (kind == "linear") {
      const nlohmann::json& images = require_field(p, "basis_images", "correspondence");
      if (!images.is_array()) throw ConfigError("correspondence: 'basis_images' must be an array");
      std::vector<CompactSet> sets;
      sets.reserve(images.size());
      for (const auto& img : images) sets.push_back(set_from_json(img));
      parsed.linear = make_linear(cone, std::move(sets));
      parsed.sublinear = wrap_linear(*parsed.linear);
    } else if (kind == "interval-scalar") {
      parsed.sublinear = interval_scalar(cone, require_number(p, "a", "interval-scalar"),
                                         require_number(p, "b", "interval-scalar"));
    } else if (kind == "paper-example") {
      parsed.sublinear = paper_example(cone);
    } else if (kind == "table") {
      const nlohmann::json& dirs = require_field(p, "directions", "table");
      const nlohmann::json& vals = require_field(p, "values", "table");
      if (!dirs.is_array() || !vals.is_array())
        throw ConfigError("table: 'directions' and 'values' must be arrays");
      std::vector<std::vector<double>> directions;
      for (const auto& d : dirs) directions.push_back(d.get<std::vector<double>>());
      std::vector<CompactSet> values;
      for (const auto& v : vals) values.push_back(set_from_json(v));
      parsed.sublinear = table_rule(cone, std::move(directions), std::move(values));
    } else {
      throw ConfigError("correspondence: unknown kind '" + kind + "'");
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(std::string("correspondence: ") + e.what());
  }
  return parsed;
}

SemigroupFamily family_from_json(const nlohmann::json& j, const ConePtr& cone) {
  const std::string kind = require_field(j, "family", "family").get<std::string>();
  try {
    if (kind == "interval-scalar") {
      return SemigroupFamily::interval_scalar(cone, require_number(j, "a", "family"),
                                              require_number(j, "b", "family"));
    }
    if (kind == "discrete-power") {
      ParsedCorrespondence base =
          correspondence_from_json(require_field(j, "base", "family"), cone);
      if (!base.linear)
        throw ConfigError("family: discrete-power needs a linear base correspondence");
      return SemigroupFamily::discrete_power(*base.linear);
    }
    if (kind == "hat-of") {
      return SemigroupFamily::hat_of(family_from_json(require_field(j, "base", "family"), cone));
    }
    if (kind == "idempotent") {
      ParsedCorrespondence base =
          correspondence_from_json(require_field(j, "base", "family"), cone);
      return SemigroupFamily::idempotent(std::move(base.sublinear));
    }
    throw ConfigError("family: unknown kind '" + kind + "'");
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(std::string("family: ") + e.what());
  }
}

}  // namespace conecorr
