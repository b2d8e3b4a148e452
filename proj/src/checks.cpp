#include <cmath>
#include <cstdio>
#include <sstream>

#include "conecorr/radstrom.hpp"
#include "conecorr/random_sets.hpp"
#include "conecorr/report.hpp"

namespace conecorr::checks {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int resolution_param(const ExperimentConfig& cfg, const nlohmann::json& params, int fallback) {
  const int res = params.value("resolution", cfg.resolution_override.value_or(fallback));
  if (res < 2) throw ConfigError("check: resolution must be >= 2");
  return res;
}

double tol_param(const ExperimentConfig& cfg, const nlohmann::json& params, double fallback) {
  return params.value("tol", cfg.tol_override.value_or(fallback));
}

Point point_param(const ExperimentConfig& cfg, const nlohmann::json& params, const char* key) {
  if (params.contains(key)) return point_from_json(params.at(key));
  return cfg.cone->from_coords(ConeCoords::Ones(cfg.cone->n()));
}

std::vector<double> grid_param(const nlohmann::json& params, const char* key,
                               std::vector<double> fallback) {
  if (!params.contains(key)) return fallback;
  const auto& arr = params.at(key);
  if (!arr.is_array() || arr.empty())
    throw ConfigError(std::string("check: '") + key + "' must be a nonempty array");
  std::vector<double> grid;
  for (const auto& v : arr) grid.push_back(v.get<double>());
  return grid;
}

const SublinearCorrespondence& sub(const ExperimentConfig& cfg) { return *cfg.correspondence; }

// linear view for multimatrix work: the configured linear map, or the hull
// extension of a sublinear one
LinearCorrespondence linear_or_hat(const ExperimentConfig& cfg) {
  if (cfg.linear) return *cfg.linear;
  return hat_extension(sub(cfg));
}

void run_check_sublinearity(const ExperimentConfig& cfg, const nlohmann::json& params,
                            CheckRecord& rec) {
  const int samples = params.value("samples", 100);
  const double tol = tol_param(cfg, params, tol_geom);
  const SublinearityReport report = check_sublinearity(sub(cfg), samples, cfg.seed, tol);
  rec.tolerance = tol;
  rec.values["samples"] = samples;
  rec.values["violations"] = report.violations.size();
  rec.status = report.ok() ? "PASS" : "FAIL";
  if (!report.ok()) {
    const auto& v = report.violations.front();
    rec.witness["kind"] = v.kind;
    rec.witness["x"] = point_to_json(v.x);
    if (v.kind == "subadditivity") rec.witness["y"] = point_to_json(v.y);
    if (v.kind == "homogeneity") rec.witness["lambda"] = v.lambda;
    rec.witness["excess"] = v.excess;
    std::ostringstream csv;
    csv << "kind,lambda,excess\n";
    for (const auto& viol : report.violations)
      csv << viol.kind << ',' << fmt(viol.lambda) << ',' << fmt(viol.excess) << '\n';
    rec.csv_content = csv.str();
  }
}

void expectation_status(CheckRecord& rec, const nlohmann::json& params, double value,
                        double tol) {
  if (params.contains("expect")) {
    const double expect = params.at("expect").get<double>();
    rec.values["expect"] = expect;
    rec.status = std::abs(value - expect) <= tol ? "PASS" : "FAIL";
    if (rec.status == "FAIL") rec.witness["deviation"] = value - expect;
  } else {
    rec.status = "INFO";
  }
}

void run_corr_norm(const ExperimentConfig& cfg, const nlohmann::json& params, CheckRecord& rec) {
  const int res = resolution_param(cfg, params, 200);
  const double tol = tol_param(cfg, params, 1e-6);
  const SupResult result = corr_norm(sub(cfg), cfg.norm, res);
  rec.tolerance = tol;
  rec.values["norm"] = result.value;
  rec.values["grid_gap"] = result.grid_gap;
  rec.values["resolution"] = res;
  expectation_status(rec, params, result.value, tol);
}

void run_dist_identity(const ExperimentConfig& cfg, const nlohmann::json& params,
                       CheckRecord& rec) {
  const int res = resolution_param(cfg, params, 200);
  const double tol = tol_param(cfg, params, 1e-6);
  const SupResult result = dist_to_identity(sub(cfg), cfg.norm, res);
  rec.tolerance = tol;
  rec.values["distance"] = result.value;
  rec.values["grid_gap"] = result.grid_gap;
  rec.values["resolution"] = res;
  expectation_status(rec, params, result.value, tol);
}

void run_h1_identity(const ExperimentConfig& cfg, const nlohmann::json& params,
                     CheckRecord& rec) {
  const int res = resolution_param(cfg, params, 200);
  const double tol = tol_param(cfg, params, 1e-6);
  const LinearCorrespondence phi = linear_or_hat(cfg);
  const SupResult result =
      multimatrix_h1_to_identity(multimatrix(phi), *cfg.cone, cfg.norm, res);
  rec.tolerance = tol;
  rec.values["h1"] = result.value;
  rec.values["grid_gap"] = result.grid_gap;
  rec.values["resolution"] = res;
  expectation_status(rec, params, result.value, tol);
}

void run_lemma_equality(const ExperimentConfig& cfg, const nlohmann::json& params,
                        CheckRecord& rec) {
  const int res = resolution_param(cfg, params, 200);
  const double tol = tol_param(cfg, params, 1e-4);
  const LinearCorrespondence& phi = *cfg.linear;
  const SupResult h1 = multimatrix_h1_to_identity(multimatrix(phi), *cfg.cone, cfg.norm, res);
  const SupResult dist = dist_to_identity(phi, cfg.norm, res);
  rec.tolerance = tol;
  rec.values["h1"] = h1.value;
  rec.values["dist"] = dist.value;
  rec.values["difference"] = h1.value - dist.value;
  rec.values["resolution"] = res;
  rec.status = std::abs(h1.value - dist.value) <= tol ? "PASS" : "FAIL";
  if (rec.status == "FAIL") {
    rec.witness["h1_maximizer"] = h1.maximizer;
    rec.witness["dist_maximizer"] = dist.maximizer;
  }
}

void run_corollary1(const ExperimentConfig& cfg, const nlohmann::json& params, CheckRecord& rec) {
  const int res = resolution_param(cfg, params, 200);
  const double tol = tol_param(cfg, params, 1e-6);
  const Corollary1Result result = corollary1_check(sub(cfg), cfg.norm, res, tol);
  rec.tolerance = tol;
  rec.values["lhs"] = result.lhs;
  rec.values["rhs"] = result.rhs;
  rec.status = result.holds ? "PASS" : "FAIL";
  if (!result.holds) rec.witness["violation"] = result.rhs - result.lhs;
}

void run_probe(const ExperimentConfig& cfg, const nlohmann::json& params, CheckRecord& rec,
               bool upper) {
  const Point x = point_param(cfg, params, "x");
  const double eps = params.value("epsilon", 0.5);
  ProbeParams pp;
  pp.delta0 = params.value("delta0", 1.0);
  pp.ladder = params.value("ladder", 21);
  pp.pattern_resolution = params.value("pattern_resolution", 3);
  pp.norm_resolution = resolution_param(cfg, params, 200);
  pp.norm = cfg.norm;

  const ProbeResult result = upper ? usc_probe(sub(cfg), x, eps, pp)
                                   : lsc_probe(sub(cfg), x, eps, pp);
  rec.values["x"] = point_to_json(x);
  rec.values["epsilon"] = eps;
  rec.values["accepted"] = result.accepted;
  rec.values["delta"] = result.delta;
  rec.values["witness_excess"] = result.witness_excess;

  const std::string expect = params.value("expect", "accept");
  if (expect != "accept" && expect != "fail") throw ConfigError("probe: expect must be accept|fail");
  if (expect == "accept") {
    rec.status = result.accepted ? "PASS" : "FAIL";
  } else {
    rec.status = result.accepted ? "FAIL" : "EXPECTED-FAIL";
  }
  if (!result.accepted) {
    rec.witness["z"] = point_to_json(result.witness);
    rec.witness["excess"] = result.witness_excess;
    rec.witness["delta"] = result.delta;
  }
}

void run_usc_probe(const ExperimentConfig& cfg, const nlohmann::json& params, CheckRecord& rec) {
  run_probe(cfg, params, rec, true);
}

void run_lsc_probe(const ExperimentConfig& cfg, const nlohmann::json& params, CheckRecord& rec) {
  run_probe(cfg, params, rec, false);
}

void run_eqform(const ExperimentConfig& cfg, const nlohmann::json& params, CheckRecord& rec) {
  const int trials = params.value("trials", 100);
  const double tol = tol_param(cfg, params, 1e-8);
  const LinearCorrespondence& phi = *cfg.linear;
  const Multimatrix m = multimatrix(phi);
  bool convex = false;
  for (const CompactSet& s : phi.basis_images) convex |= s.convex;

  Rng rng(cfg.seed);
  double worst = 0.0;
  Point worst_x = cfg.cone->from_coords(ConeCoords::Ones(cfg.cone->n()));
  for (int i = 0; i < trials; ++i) {
    const Point x = random_cone_point(rng, *cfg.cone);
    const CompactSet direct = eval_linear(phi, x);
    const CompactSet via = eval_via_multimatrix(m, *cfg.cone, x, convex);
    const double excess = std::max(directed_excess(direct, via, cfg.norm),
                                   directed_excess(via, direct, cfg.norm));
    if (excess > worst) {
      worst = excess;
      worst_x = x;
    }
  }
  rec.tolerance = tol;
  rec.values["trials"] = trials;
  rec.values["max_mutual_excess"] = worst;
  rec.status = worst <= tol ? "PASS" : "FAIL";
  if (rec.status == "FAIL") rec.witness["x"] = point_to_json(worst_x);
}

void run_invertibility(const ExperimentConfig& cfg, const nlohmann::json& params,
                       CheckRecord& rec) {
  const int interior = params.value("interior_samples", 16);
  const LinearCorrespondence phi = linear_or_hat(cfg);
  const InvertReport report =
      invertibility_certificate(multimatrix(phi), *cfg.cone, interior, cfg.seed);

  int certified = 0, at_sample = 0, singular = 0;
  for (const InvertRecord& r : report.records) {
    if (r.status == InvertStatus::certified) ++certified;
    if (r.status == InvertStatus::invertible_at_sample) ++at_sample;
    if (r.status == InvertStatus::singular) ++singular;
  }
  rec.values["matrices"] = report.records.size();
  rec.values["certified"] = certified;
  rec.values["invertible_at_sample"] = at_sample;
  rec.values["singular"] = singular;
  rec.values["all_invertible"] = report.all_invertible;

  std::ostringstream csv;
  csv << "index,kind,det,cond,op_dist_to_identity,status\n";
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const InvertRecord& r = report.records[i];
    csv << i << ',' << (r.is_vertex ? "vertex" : "interior") << ',' << fmt(r.det) << ','
        << fmt(r.cond) << ',' << fmt(r.op_dist_to_identity) << ',' << to_string(r.status) << '\n';
  }
  rec.csv_content = csv.str();

  if (params.contains("expect_all_invertible")) {
    const bool expect = params.at("expect_all_invertible").get<bool>();
    rec.status = report.all_invertible == expect ? "PASS" : "FAIL";
    if (rec.status == "FAIL") {
      for (std::size_t i = 0; i < report.records.size(); ++i) {
        if (report.records[i].status == InvertStatus::singular) {
          rec.witness["matrix_index"] = i;
          rec.witness["det"] = report.records[i].det;
          break;
        }
      }
      rec.witness["all_invertible"] = report.all_invertible;
    }
  } else {
    rec.status = "INFO";
  }
}

void run_radstrom(const ExperimentConfig& cfg, const nlohmann::json& params, CheckRecord& rec) {
  const int trials = params.value("trials", 200);
  const double tol = tol_param(cfg, params, 1e-8);
  const int dim = params.value("dim", std::min(cfg.cone->ambient_dim(), max_dim));
  const int max_vertices = params.value("max_vertices", 5);

  Rng rng(cfg.seed);
  double worst_cancel = 0.0, worst_norm = 0.0, worst_scale = 0.0;
  int worst_trial = -1;
  double worst_value = -1.0;
  std::ostringstream csv;
  csv << "trial,cancellation_gap,norm_invariance_gap,scaling_defect\n";
  for (int i = 0; i < trials; ++i) {
    const CompactSet a = random_compact_set(rng, dim, max_vertices, -1.0, 1.0, true);
    const CompactSet b = random_compact_set(rng, dim, max_vertices, -1.0, 1.0, true);
    const CompactSet c = random_compact_set(rng, dim, max_vertices, -1.0, 1.0, true);

    // cancellation as an isometry gap: h(A+C, B+C) = h(A, B)
    const double cancel_gap =
        std::abs(hausdorff(minkowski_sum(a, c), minkowski_sum(b, c), cfg.norm) -
                 hausdorff(a, b, cfg.norm));

    const RadstromClass p = make_class(a, b);
    const RadstromClass q = class_add(p, make_class(c, c));
    const double norm_gap = std::abs(class_norm(p, cfg.norm) - class_norm(q, cfg.norm));

    const double lambda = rng.uniform(-3.0, -0.1);
    const RadstromClass scaled = class_scale(lambda, p);
    const RadstromClass expected = make_class(scale(-lambda, b), scale(-lambda, a));
    const double scale_defect = hausdorff(minkowski_sum(scaled.rep_a, expected.rep_b),
                                          minkowski_sum(scaled.rep_b, expected.rep_a), cfg.norm);

    worst_cancel = std::max(worst_cancel, cancel_gap);
    worst_norm = std::max(worst_norm, norm_gap);
    worst_scale = std::max(worst_scale, scale_defect);
    const double trial_worst = std::max({cancel_gap, norm_gap, scale_defect});
    if (trial_worst > worst_value) {
      worst_value = trial_worst;
      worst_trial = i;
    }
    csv << i << ',' << fmt(cancel_gap) << ',' << fmt(norm_gap) << ',' << fmt(scale_defect)
        << '\n';
  }
  rec.tolerance = tol;
  rec.values["trials"] = trials;
  rec.values["max_cancellation_gap"] = worst_cancel;
  rec.values["max_norm_invariance_gap"] = worst_norm;
  rec.values["max_scaling_defect"] = worst_scale;
  rec.csv_content = csv.str();
  rec.status =
      (worst_cancel <= tol && worst_norm <= tol && worst_scale <= tol) ? "PASS" : "FAIL";
  if (rec.status == "FAIL") {
    rec.witness["trial"] = worst_trial;
    rec.witness["defect"] = worst_value;
  }
}

void run_semigroup_defect(const ExperimentConfig& cfg, const nlohmann::json& params,
                          CheckRecord& rec) {
  const double tol = tol_param(cfg, params, tol_geom);
  const std::vector<double> t_grid = grid_param(params, "t_grid", {0.0, 0.25, 0.5, 0.75, 1.0});
  std::vector<Point> xs;
  if (params.contains("x_samples")) {
    for (const auto& p : params.at("x_samples")) xs.push_back(point_from_json(p));
  } else {
    xs.push_back(cfg.cone->from_coords(ConeCoords::Ones(cfg.cone->n())));
  }
  const DefectResult result = semigroup_defect(*cfg.family, t_grid, xs, cfg.norm);
  rec.tolerance = tol;
  rec.values["defect"] = result.defect;
  rec.values["s"] = result.s;
  rec.values["t"] = result.t;
  rec.status = result.defect <= tol ? "PASS" : "FAIL";
  if (rec.status == "FAIL") {
    rec.witness["s"] = result.s;
    rec.witness["t"] = result.t;
    rec.witness["x"] = point_to_json(result.x);
  }
}

void run_growth_fit(const ExperimentConfig& cfg, const nlohmann::json& params, CheckRecord& rec) {
  const int res = resolution_param(cfg, params, 200);
  const double tol = tol_param(cfg, params, 1e-6);
  const std::vector<double> t_grid =
      grid_param(params, "t_grid", {0.0, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0});
  const GrowthFit fit = growth_fit(*cfg.family, t_grid, cfg.norm, res);

  double max_resid = 0.0;
  for (double r : fit.residuals) max_resid = std::max(max_resid, r);
  rec.tolerance = tol;
  rec.values["beta0"] = fit.beta0;
  rec.values["gamma"] = fit.gamma;
  rec.values["max_residual"] = max_resid;

  std::ostringstream csv;
  csv << "t,norm,fit_residual\n";
  for (std::size_t i = 0; i < fit.ts.size(); ++i)
    csv << fmt(fit.ts[i]) << ',' << fmt(fit.norms[i]) << ',' << fmt(fit.residuals[i]) << '\n';
  rec.csv_content = csv.str();

  bool ok = max_resid <= 1e-12;
  if (params.contains("expect_gamma")) {
    rec.values["expect_gamma"] = params.at("expect_gamma").get<double>();
    ok = ok && std::abs(fit.gamma - params.at("expect_gamma").get<double>()) <= tol;
  }
  if (params.contains("expect_beta0")) {
    rec.values["expect_beta0"] = params.at("expect_beta0").get<double>();
    ok = ok && std::abs(fit.beta0 - params.at("expect_beta0").get<double>()) <= tol;
  }
  if (params.contains("expect_gamma") || params.contains("expect_beta0"))
    rec.status = ok ? "PASS" : "FAIL";
  else
    rec.status = ok ? "INFO" : "FAIL";
  if (rec.status == "FAIL") {
    rec.witness["gamma"] = fit.gamma;
    rec.witness["beta0"] = fit.beta0;
  }
}

void run_continuity_modulus(const ExperimentConfig& cfg, const nlohmann::json& params,
                            CheckRecord& rec) {
  const double w = params.value("w", 1.0);
  const Point x = point_param(cfg, params, "x");
  std::vector<double> fallback;
  for (int k = 1; k <= 10; ++k) fallback.push_back(std::ldexp(1.0, -k));
  const std::vector<double> delta_grid = grid_param(params, "delta_grid", fallback);
  const int samples = params.value("samples_per_delta", 8);

  const auto table = continuity_modulus(*cfg.family, w, x, delta_grid, samples, cfg.norm);
  std::ostringstream csv;
  csv << "delta,modulus\n";
  for (const auto& [delta, modulus] : table)
    csv << fmt(delta) << ',' << fmt(modulus) << '\n';
  rec.csv_content = csv.str();

  bool monotone = true;
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (table[i].first < table[i - 1].first && table[i].second > table[i - 1].second + 1e-12)
      monotone = false;
    if (table[i].first > table[i - 1].first && table[i].second < table[i - 1].second - 1e-12)
      monotone = false;
  }
  rec.values["w"] = w;
  rec.values["x"] = point_to_json(x);
  rec.values["monotone"] = monotone;
  rec.values["last_delta"] = table.empty() ? 0.0 : table.back().first;
  rec.values["last_modulus"] = table.empty() ? 0.0 : table.back().second;

  bool ok = !params.value("require_monotone", true) || monotone;
  if (params.contains("limit")) {
    const double limit = params.at("limit").get<double>();
    rec.values["limit"] = limit;
    ok = ok && !table.empty() && table.back().second <= limit;
  }
  rec.status = ok ? "PASS" : "FAIL";
  if (!ok) rec.witness["last_modulus"] = table.empty() ? 0.0 : table.back().second;
}

void run_lemma32(const ExperimentConfig& cfg, const nlohmann::json& params, CheckRecord& rec) {
  const int res = resolution_param(cfg, params, 120);
  const double tol = tol_param(cfg, params, 1e-7);
  const std::vector<double> w_grid = grid_param(params, "w_grid", {0.0, 0.25, 0.5, 0.75, 1.0});
  const std::vector<double> s_grid = grid_param(params, "s_grid", {0.0, 0.25, 0.5, 0.75, 1.0});
  const Point x = point_param(cfg, params, "x");

  bool all_hold = true;
  std::ostringstream csv;
  csv << "w,s,lhs,rhs,m_est,holds\n";
  for (double w : w_grid) {
    for (double s : s_grid) {
      const Lemma32Result r = lemma32_check(*cfg.family, w, s, x, cfg.norm, res, tol);
      csv << fmt(w) << ',' << fmt(s) << ',' << fmt(r.lhs) << ',' << fmt(r.rhs) << ','
          << fmt(r.m_est) << ',' << (r.holds ? 1 : 0) << '\n';
      if (!r.holds) {
        all_hold = false;
        if (rec.witness.is_null()) {
          rec.witness["w"] = w;
          rec.witness["s"] = s;
          rec.witness["lhs"] = r.lhs;
          rec.witness["rhs"] = r.rhs;
        }
      }
    }
  }
  rec.tolerance = tol;
  rec.values["cells"] = w_grid.size() * s_grid.size();
  rec.values["x"] = point_to_json(x);
  rec.csv_content = csv.str();
  rec.status = all_hold ? "PASS" : "FAIL";
}

void run_lemma_linuni(const ExperimentConfig& cfg, const nlohmann::json& params,
                      CheckRecord& rec) {
  const int pairs = params.value("pairs", 64);
  const int res = resolution_param(cfg, params, 200);
  const LinearCorrespondence phi = linear_or_hat(cfg);
  const LinUniEstimate est = lemma_linuni_constant(phi, pairs, cfg.norm, res, cfg.seed);
  rec.values["m_est"] = est.m_est;
  rec.values["ratio_unclamped"] = est.ratio_unclamped;
  if (est.x_star.size() > 0) {
    rec.values["x_star"] = point_to_json(est.x_star);
    rec.values["y_star"] = point_to_json(est.y_star);
  }
  rec.status = "INFO";
}

}  // namespace

const std::map<std::string, CheckInfo>& registry() {
  static const std::map<std::string, CheckInfo> reg = {
      {"check-sublinearity",
       {"{samples, tol}", true, false, false, run_check_sublinearity}},
      {"corr-norm", {"{resolution, expect?, tol}", true, false, false, run_corr_norm}},
      {"dist-identity", {"{resolution, expect?, tol}", true, false, false, run_dist_identity}},
      {"h1-identity", {"{resolution, expect?, tol}", true, false, false, run_h1_identity}},
      {"lemma-equality", {"{resolution, tol}", true, true, false, run_lemma_equality}},
      {"corollary1", {"{resolution, tol}", true, false, false, run_corollary1}},
      {"usc-probe",
       {"{x, epsilon, expect: accept|fail, delta0, ladder, pattern_resolution, resolution}", true,
        false, false, run_usc_probe}},
      {"lsc-probe",
       {"{x, epsilon, expect: accept|fail, delta0, ladder, pattern_resolution, resolution}", true,
        false, false, run_lsc_probe}},
      {"eqform", {"{trials, tol}", true, true, false, run_eqform}},
      {"invertibility",
       {"{interior_samples, expect_all_invertible?}", true, false, false, run_invertibility}},
      {"radstrom", {"{trials, dim, max_vertices, tol}", false, false, false, run_radstrom}},
      {"semigroup-defect",
       {"{t_grid, x_samples, tol}", false, false, true, run_semigroup_defect}},
      {"growth-fit",
       {"{t_grid, resolution, expect_gamma?, expect_beta0?, tol}", false, false, true,
        run_growth_fit}},
      {"continuity-modulus",
       {"{w, x, delta_grid, samples_per_delta, require_monotone, limit?}", false, false, true,
        run_continuity_modulus}},
      {"lemma32",
       {"{w_grid, s_grid, x, resolution, tol}", false, false, true, run_lemma32}},
      {"lemma-linuni", {"{pairs, resolution}", true, false, false, run_lemma_linuni}},
  };
  return reg;
}

}  // namespace conecorr::checks
