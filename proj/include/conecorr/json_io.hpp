#pragma once

#include <json.hpp>

#include "conecorr/correspondence.hpp"
#include "conecorr/semigroup.hpp"

namespace conecorr {

// Wire formats:
//   set    {"points": [[...], ...], "convex": bool}
//   cone   {"basis": [[...], ...]}
//   correspondence {"kind": "identity" | "linear" | "interval-scalar" |
//                            "paper-example" | "table", ...params}
//   family {"family": "interval-scalar" | "discrete-power" | "hat-of" |
//                     "idempotent", ...params}

struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error(what) {}
};

nlohmann::ordered_json point_to_json(const Point& p);
Point point_from_json(const nlohmann::json& j);

nlohmann::ordered_json set_to_json(const CompactSet& s);
CompactSet set_from_json(const nlohmann::json& j);

nlohmann::ordered_json cone_to_json(const Cone& cone);
ConePtr cone_from_json(const nlohmann::json& j);

NormSpec norm_from_json(const nlohmann::json& j, const ConePtr& cone);

// Parses either kind of correspondence; `linear` is filled when the kind is
// linear or identity so multimatrix-based checks can run on it.
struct ParsedCorrespondence {
  SublinearCorrespondence sublinear;
  std::optional<LinearCorrespondence> linear;
};
ParsedCorrespondence correspondence_from_json(const nlohmann::json& j, const ConePtr& cone);

SemigroupFamily family_from_json(const nlohmann::json& j, const ConePtr& cone);

}  // namespace conecorr
