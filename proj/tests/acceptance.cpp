// Acceptance gate: runs every criterion end to end and prints one line per
// criterion. Exits with the number of failing criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "conecorr/radstrom.hpp"
#include "conecorr/random_sets.hpp"
#include "conecorr/report.hpp"
#include "conecorr/semigroup.hpp"

using namespace conecorr;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void verdict(int id, bool pass, const std::string& detail) {
  std::printf("criterion %2d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  if (!pass) ++failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

const NormSpec euclid = NormSpec::euclidean();

Point pt1(double x) {
  Point p(1);
  p[0] = x;
  return p;
}

Point pt2(double x, double y) {
  Point p(2);
  p << x, y;
  return p;
}

// 1: the multimatrix evaluation formula agrees with direct evaluation
void criterion_eqform() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(101);
  const double tol = 1e-8;
  double worst = 0.0;
  const int instances = 100;
  for (int i = 0; i < instances; ++i) {
    const int n = 1 + static_cast<int>(rng.index(3));
    const ConePtr cone = random_cone(rng, n);
    const bool convex = i % 2 == 0;
    const LinearCorrespondence phi = random_linear_endo(rng, cone, 4, convex);
    const Multimatrix m = multimatrix(phi);
    for (int k = 0; k < 3; ++k) {
      const Point x = random_cone_point(rng, *cone);
      const CompactSet direct = eval_linear(phi, x);
      const CompactSet via = eval_via_multimatrix(m, *cone, x, convex);
      worst = std::max({worst, directed_excess(direct, via, euclid),
                        directed_excess(via, direct, euclid)});
    }
  }
  const double elapsed = seconds_since(start);
  verdict(1, worst <= tol && elapsed <= 30.0,
          fmt("multimatrix evaluation on %d random endomorphisms: max mutual excess %.2e "
              "(tol %.0e), %.1f s (limit 30)",
              instances, worst, tol, elapsed));
}

// 2: vertex-selection distance to the identity equals the pointwise one
void criterion_lemma_equality() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(102);
  const double tol = 1e-4;
  const int resolution = 200;
  double worst = 0.0;
  const int instances = 50;
  for (int i = 0; i < instances; ++i) {
    const int n = 1 + static_cast<int>(rng.index(2));
    const ConePtr cone = random_cone(rng, n);
    const LinearCorrespondence phi = random_linear_endo(rng, cone, 4, true);
    const double h1 =
        multimatrix_h1_to_identity(multimatrix(phi), *cone, euclid, resolution).value;
    const double dist = dist_to_identity(phi, euclid, resolution).value;
    worst = std::max(worst, std::abs(h1 - dist));
  }
  const double elapsed = seconds_since(start);
  verdict(2, worst <= tol && elapsed <= 60.0,
          fmt("h1-vs-pointwise identity distance on %d random instances: max gap %.2e "
              "(tol %.0e) at resolution %d, %.1f s (limit 60)",
              instances, worst, tol, resolution, elapsed));
}

// 3: the hull extension dominates the pointwise identity distance
void criterion_corollary1() {
  Rng rng(103);
  const double tol = 1e-6;
  double worst_violation = -std::numeric_limits<double>::infinity();
  int count = 0;

  std::vector<SublinearCorrespondence> instances;
  instances.push_back(paper_example(standard_cone(2)));
  for (int i = 0; i < 34; ++i) {
    const int n = 1 + static_cast<int>(rng.index(2));
    const ConePtr cone = random_cone(rng, n);
    const double a = rng.uniform(0.2, 1.2);
    instances.push_back(interval_scalar(cone, a, a + rng.uniform(0.0, 1.0)));
  }
  for (int i = 0; i < 12; ++i) {
    const ConePtr cone = random_cone(rng, 2);
    instances.push_back(wrap_linear(random_linear_endo(rng, cone, 3, true)));
  }
  for (int i = 0; i < 3; ++i) {
    // single-direction tables with convex entries are genuinely sublinear
    const ConePtr quadrant = standard_cone(2);
    std::vector<std::vector<double>> dirs = {{0.5, 0.5}};
    std::vector<CompactSet> values = {random_compact_set(rng, 2, 3, 0.0, 1.5, true)};
    instances.push_back(table_rule(quadrant, std::move(dirs), std::move(values)));
  }

  for (const SublinearCorrespondence& phi : instances) {
    const Corollary1Result r = corollary1_check(phi, euclid, 200, tol);
    worst_violation = std::max(worst_violation, r.rhs - r.lhs);
    ++count;
  }
  verdict(3, worst_violation <= tol,
          fmt("hull-extension inequality on %d sublinear instances: worst rhs-lhs %.2e "
              "(tol %.0e)",
              count, worst_violation, tol));
}

// 4: the constructive delta eps/|phi| is accepted at zero
void criterion_constructive_usc() {
  const ConePtr quadrant = standard_cone(2);
  std::vector<SublinearCorrespondence> builtins;
  builtins.push_back(wrap_linear(identity_correspondence(quadrant)));
  builtins.push_back(wrap_linear(make_linear(
      quadrant, {make_set({pt2(1, 0), pt2(2, 0)}, true), singleton(pt2(0, 1))})));
  builtins.push_back(interval_scalar(quadrant, 0.5, 2.0));
  builtins.push_back(paper_example(quadrant));
  builtins.push_back(table_rule(quadrant, {{1.0, 0.0}, {0.0, 1.0}},
                                {make_set({pt2(1, 0), pt2(1, 1)}, true), singleton(pt2(0, 2))}));

  bool all_ok = true;
  std::string first_fail;
  for (const SublinearCorrespondence& phi : builtins) {
    const double norm_phi = corr_norm(phi, euclid, 200).value;
    for (double eps : {1.0, 0.1, 0.01}) {
      const ProbeResult r = usc_probe(phi, pt2(0, 0), eps);
      const double expected = eps / norm_phi;
      const bool ok = r.accepted && std::abs(r.delta - expected) <= 1e-12 * expected;
      if (!ok && all_ok) {
        all_ok = false;
        first_fail = fmt(" first failure: rule %s eps %.2f", phi.rule_name.c_str(), eps);
      }
    }
  }
  verdict(4, all_ok,
          fmt("constructive delta accepted at zero for %zu built-ins x 3 epsilons%s",
              builtins.size(), first_fail.c_str()));
}

// 5: the counterexample is usc but not lsc on the boundary ray
void criterion_counterexample() {
  const SublinearCorrespondence phi = paper_example(standard_cone(2));
  const ProbeResult lsc = lsc_probe(phi, pt2(1, 0), 0.5);
  const ProbeResult usc_axis = usc_probe(phi, pt2(1, 0), 0.5);
  const ProbeResult usc_interior = usc_probe(phi, pt2(1, 1), 0.5);
  const bool pass = !lsc.accepted && lsc.witness_excess >= 0.9 && usc_axis.accepted &&
                    usc_interior.accepted;
  verdict(5, pass,
          fmt("lsc fails at (1,0) with witness excess %.3f (needs >= 0.9); usc accepted at "
              "(1,0) and (1,1): %s/%s",
              lsc.witness_excess, usc_axis.accepted ? "yes" : "no",
              usc_interior.accepted ? "yes" : "no"));
}

// 6: cancellation, norm invariance and the negative-scaling rule
void criterion_radstrom() {
  Rng rng(106);
  const double tol = 1e-8;
  const int trials = 200;
  double worst = 0.0;
  for (int i = 0; i < trials; ++i) {
    const CompactSet a = random_compact_set(rng, 2, 4, -1, 1, true);
    const CompactSet b = random_compact_set(rng, 2, 4, -1, 1, true);
    const CompactSet c = random_compact_set(rng, 2, 4, -1, 1, true);

    const double cancel = std::abs(hausdorff(minkowski_sum(a, c), minkowski_sum(b, c), euclid) -
                                   hausdorff(a, b, euclid));

    const RadstromClass p = make_class(a, b);
    const RadstromClass q = class_add(p, make_class(c, c));
    const double invariance = std::abs(class_norm(p, euclid) - class_norm(q, euclid));

    const double lambda = rng.uniform(-3.0, -0.1);
    const RadstromClass scaled = class_scale(lambda, p);
    const RadstromClass expected = make_class(scale(-lambda, b), scale(-lambda, a));
    const double scaling = hausdorff(minkowski_sum(scaled.rep_a, expected.rep_b),
                                     minkowski_sum(scaled.rep_b, expected.rep_a), euclid);

    worst = std::max({worst, cancel, invariance, scaling});
  }
  verdict(6, worst <= tol,
          fmt("quotient-space suite on %d random convex triples: worst defect %.2e (tol %.0e)",
              trials, worst, tol));
}

// 7: the closing 1-D exponential-interval family
void criterion_closing_example() {
  const auto start = std::chrono::steady_clock::now();
  const ConePtr ray = standard_cone(1);
  const SemigroupFamily family = SemigroupFamily::interval_scalar(ray, 0.5, 1.0);

  std::vector<double> t_grid;
  for (int i = 0; i <= 8; ++i) t_grid.push_back(0.25 * i);

  double worst_norm_gap = 0.0;
  for (double t : t_grid) {
    const double norm_t = corr_norm(family.member(t), euclid, 200).value;
    worst_norm_gap = std::max(worst_norm_gap, std::abs(norm_t - std::exp(t)));
  }
  const bool norms_ok = worst_norm_gap <= 1e-9;

  const GrowthFit fit = growth_fit(family, t_grid, euclid, 200);
  const bool fit_ok = std::abs(fit.gamma - 1.0) <= 1e-6 && std::abs(fit.beta0 - 1.0) <= 1e-6;

  const DefectResult defect = semigroup_defect(family, t_grid, {pt1(1.0), pt1(2.0)});
  const bool defect_ok = defect.defect <= 1e-9;

  std::vector<double> deltas;
  for (int k = 1; k <= 10; ++k) deltas.push_back(std::ldexp(1.0, -k));
  const auto modulus = continuity_modulus(family, 1.0, pt1(1.0), deltas, 8);
  bool monotone = true;
  for (std::size_t i = 1; i < modulus.size(); ++i)
    if (modulus[i].second > modulus[i - 1].second + 1e-15) monotone = false;
  const double final_modulus = modulus.back().second;
  const bool modulus_ok = monotone && final_modulus <= 1e-6;

  const double elapsed = seconds_since(start);
  verdict(7, norms_ok && fit_ok && defect_ok && modulus_ok && elapsed <= 10.0,
          fmt("norm gap %.1e (tol 1e-09); gamma %.9f beta0 %.9f (tol 1e-06); defect %.1e "
              "(tol 1e-09); modulus monotone=%s, at delta=2^-10 %.4e (tol 1e-06); %.1f s "
              "(limit 10)",
              worst_norm_gap, fit.gamma, fit.beta0, defect.defect, monotone ? "yes" : "no",
              final_modulus, elapsed));
}

// 8: the composition-gap inequality over a (w, s) grid
void criterion_lemma32_grid() {
  const std::vector<double> grid = {0.0, 0.25, 0.5, 0.75, 1.0};

  const SemigroupFamily interval = SemigroupFamily::interval_scalar(standard_cone(1), 0.5, 1.0);
  const SemigroupFamily collapse = SemigroupFamily::idempotent(
      wrap_linear(hat_extension(paper_example(standard_cone(2)))));

  bool all_hold = true;
  double worst = -std::numeric_limits<double>::infinity();
  for (double w : grid) {
    for (double s : grid) {
      const Lemma32Result a = lemma32_check(interval, w, s, pt1(1.0), euclid, 60);
      const Lemma32Result b = lemma32_check(collapse, w, s, pt2(1.0, 1.0), euclid, 60);
      all_hold = all_hold && a.holds && b.holds;
      worst = std::max({worst, a.lhs - a.rhs, b.lhs - b.rhs});
    }
  }
  verdict(8, all_hold,
          fmt("composition-gap bound on a 5x5 (w,s) grid for both families: worst lhs-rhs "
              "%.2e (slack 1e-07)",
              worst));
}

// 9: norms are submultiplicative under composition
void criterion_submultiplicative() {
  Rng rng(109);
  const double tol = 1e-6;
  const int pairs = 100;
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < pairs; ++i) {
    const int n = 1 + static_cast<int>(rng.index(2));
    const ConePtr cone = random_cone(rng, n);
    const LinearCorrespondence outer = random_linear_endo(rng, cone, 3, true);
    const LinearCorrespondence inner = random_linear_endo(rng, cone, 3, true);
    const double no = corr_norm(outer, euclid, 200).value;
    const double ni = corr_norm(inner, euclid, 200).value;
    const double nc = corr_norm(compose(outer, inner), euclid, 200).value;
    worst = std::max(worst, nc - no * ni);
  }
  verdict(9, worst <= tol,
          fmt("submultiplicativity on %d random linear pairs: worst composite excess %.2e "
              "(tol %.0e)",
              pairs, worst, tol));
}

// 10: byte-identical reports modulo the volatile fields
void criterion_determinism() {
  const fs::path base = fs::temp_directory_path() / "conecorr-acceptance";
  bool all_ok = true;
  std::string detail;
  for (const char* name : {"paper-example.json", "interval-semigroup.json"}) {
    const std::string config = std::string(CONECORR_SOURCE_DIR) + "/configs/" + name;
    const fs::path out_a = base / "a" / name;
    const fs::path out_b = base / "b" / name;
    std::ostringstream sink;
    const int rc_a = run_and_write(config, RunOptions{out_a.string(), {}, {}}, sink);
    const int rc_b = run_and_write(config, RunOptions{out_b.string(), {}, {}}, sink);

    nlohmann::ordered_json ja, jb;
    std::ifstream(out_a / "report.json") >> ja;
    std::ifstream(out_b / "report.json") >> jb;
    ja.erase("timestamp");
    jb.erase("timestamp");
    for (auto& c : ja.at("checks")) c.erase("wall_ms");
    for (auto& c : jb.at("checks")) c.erase("wall_ms");
    bool same = ja.dump() == jb.dump() && rc_a == 0 && rc_b == 0;

    for (const auto& entry : fs::directory_iterator(out_a)) {
      if (entry.path().extension() != ".csv") continue;
      std::ifstream fa(entry.path(), std::ios::binary);
      std::ifstream fb(out_b / entry.path().filename(), std::ios::binary);
      std::stringstream sa, sb;
      sa << fa.rdbuf();
      sb << fb.rdbuf();
      same = same && sa.str() == sb.str();
    }
    all_ok = all_ok && same;
    detail += fmt("%s: %s (exit %d)  ", name, same ? "identical" : "DIFFERS", rc_a);
  }
  verdict(10, all_ok, "bundled configs run twice: " + detail);
}

}  // namespace

int main() {
  struct Criterion {
    void (*run)();
    const char* label;
    int id;
  };
  const Criterion criteria[] = {
      {criterion_eqform, "eqform", 1},
      {criterion_lemma_equality, "lemma equality", 2},
      {criterion_corollary1, "corollary1", 3},
      {criterion_constructive_usc, "constructive usc", 4},
      {criterion_counterexample, "counterexample", 5},
      {criterion_radstrom, "quotient suite", 6},
      {criterion_closing_example, "closing example", 7},
      {criterion_lemma32_grid, "composition gap", 8},
      {criterion_submultiplicative, "submultiplicativity", 9},
      {criterion_determinism, "determinism", 10},
  };
  for (const Criterion& c : criteria) {
    try {
      c.run();
    } catch (const std::exception& e) {
      verdict(c.id, false, fmt("%s threw: %s", c.label, e.what()));
    }
  }
  std::printf("%d of 10 criteria failed\n", failures);
  return failures;
}
