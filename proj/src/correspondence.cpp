#include "conecorr/correspondence.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "conecorr/matrix_norm.hpp"
#include "conecorr/parallel.hpp"
#include "conecorr/rng.hpp"

namespace conecorr {

namespace {

constexpr double overflow_guard = 1e100;
constexpr double overflow_marker = 1e300;

void validate_images(const std::vector<CompactSet>& images, std::size_t n) {
  if (images.size() != n) throw Error("correspondence: one basis image per basis vector required");
  const int dim = images.front().dim();
  for (const CompactSet& s : images) {
    if (s.points.empty()) throw Error("correspondence: empty basis image");
    if (s.dim() != dim) throw Error("correspondence: basis images have mixed dimensions");
  }
}

bool images_in_cone(const Cone& cone, const std::vector<CompactSet>& images) {
  if (images.front().dim() != cone.ambient_dim()) return false;
  for (const CompactSet& s : images)
    for (const Point& p : s.points)
      if (!cone.contains(p)) return false;
  return true;
}

// hausdorff(A, {x}) for nonempty A: the sup side always dominates the
// point-to-set side, so this is the max vertex distance.
double set_to_point_hausdorff(const CompactSet& a, const Point& x, const NormSpec& norm) {
  double worst = 0.0;
  for (const Point& p : a.points) worst = std::max(worst, norm_value(norm, p - x));
  return worst;
}

// Objectives run inside parallel sweeps, where exceptions must not escape;
// failures map to -inf and the first message is rethrown afterwards.
struct GuardedObjective {
  const SimplexObjective& inner;
  mutable std::mutex mu;
  mutable std::string error;

  double operator()(const std::vector<double>& w) const {
    try {
      return inner(w);
    } catch (const std::exception& e) {
      std::lock_guard<std::mutex> lock(mu);
      if (error.empty()) error = e.what();
      return -std::numeric_limits<double>::infinity();
    }
  }
};

SupResult guarded_sup(int n, int resolution, const SimplexObjective& objective) {
  GuardedObjective guard{objective, {}, {}};
  SupResult result =
      sup_over_simplex(n, resolution, [&](const std::vector<double>& w) { return guard(w); });
  if (!guard.error.empty()) throw Error(guard.error);
  return result;
}

}  // namespace

LinearCorrespondence make_linear(ConePtr cone, std::vector<CompactSet> basis_images) {
  if (!cone) throw Error("correspondence: null cone");
  validate_images(basis_images, static_cast<std::size_t>(cone->n()));
  std::vector<CompactSet> normalized;
  normalized.reserve(basis_images.size());
  for (CompactSet& s : basis_images) normalized.push_back(make_set(std::move(s.points), s.convex));

  LinearCorrespondence phi;
  phi.target_dim = normalized.front().dim();
  phi.endomorphism =
      phi.target_dim == cone->ambient_dim() && images_in_cone(*cone, normalized);
  phi.cone = std::move(cone);
  phi.basis_images = std::move(normalized);
  return phi;
}

LinearCorrespondence identity_correspondence(const ConePtr& cone) {
  std::vector<CompactSet> images;
  images.reserve(static_cast<std::size_t>(cone->n()));
  for (const Point& e : cone->basis()) images.push_back(singleton(e));
  return make_linear(cone, std::move(images));
}

CompactSet eval_linear(const LinearCorrespondence& phi, const Point& x) {
  const ConeCoords lambdas = phi.cone->coords(x);
  CompactSet result = scale(lambdas[0], phi.basis_images[0]);
  for (int j = 1; j < phi.cone->n(); ++j)
    result = minkowski_sum(result, scale(lambdas[j], phi.basis_images[j]));
  return result;
}

namespace {

SublinearCorrespondence finish_sublinear(ConePtr cone, std::string name,
                                         std::function<CompactSet(const Point&)> rule) {
  SublinearCorrespondence phi;
  phi.cone = std::move(cone);
  phi.rule_name = std::move(name);
  phi.rule = std::move(rule);
  phi.basis_images.reserve(static_cast<std::size_t>(phi.cone->n()));
  for (const Point& e : phi.cone->basis()) phi.basis_images.push_back(phi.rule(e));
  validate_images(phi.basis_images, static_cast<std::size_t>(phi.cone->n()));
  phi.target_dim = phi.basis_images.front().dim();
  phi.endomorphism = phi.target_dim == phi.cone->ambient_dim() &&
                     images_in_cone(*phi.cone, phi.basis_images);
  return phi;
}

}  // namespace

SublinearCorrespondence wrap_linear(LinearCorrespondence phi) {
  auto shared = std::make_shared<LinearCorrespondence>(std::move(phi));
  ConePtr cone = shared->cone;
  return finish_sublinear(std::move(cone), "linear",
                          [shared](const Point& x) { return eval_linear(*shared, x); });
}

SublinearCorrespondence interval_scalar(ConePtr cone, double lo, double hi) {
  if (!cone) throw Error("interval-scalar: null cone");
  if (!(lo <= hi)) throw Error("interval-scalar: requires lo <= hi");
  ConePtr held = cone;
  return finish_sublinear(std::move(cone), "interval-scalar", [held, lo, hi](const Point& x) {
    held->coords(x);  // domain check
    return make_set({lo * x, hi * x}, true);
  });
}

SublinearCorrespondence paper_example(ConePtr cone) {
  if (!cone) throw Error("paper-example: null cone");
  if (cone->n() != 2 || cone->ambient_dim() != 2 ||
      (cone->basis_matrix() - Eigen::MatrixXd::Identity(2, 2)).norm() > tol_geom)
    throw Error("paper-example: requires the standard quadrant cone in R^2");
  return finish_sublinear(std::move(cone), "paper-example", [](const Point& p) {
    if (p[0] < -tol_geom || p[1] < -tol_geom) throw Error("paper-example: point outside cone");
    if (p[1] > tol_geom) return origin_set(2);
    Point end(2);
    end << std::max(p[0], 0.0), 0.0;
    return make_set({Point::Zero(2), end}, true);
  });
}

SublinearCorrespondence table_rule(ConePtr cone, std::vector<std::vector<double>> directions,
                                   std::vector<CompactSet> values) {
  if (!cone) throw Error("table: null cone");
  if (directions.empty() || directions.size() != values.size())
    throw Error("table: directions and values must be nonempty and match");
  const int n = cone->n();
  std::vector<Eigen::VectorXd> dirs;
  dirs.reserve(directions.size());
  for (const auto& d : directions) {
    if (static_cast<int>(d.size()) != n) throw Error("table: direction length != basis size");
    Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(d.data(), n);
    const double s = v.sum();
    if (v.minCoeff() < 0.0 || s <= 0.0) throw Error("table: directions must be nonnegative weights");
    dirs.push_back(v / s);
  }
  std::vector<CompactSet> vals;
  vals.reserve(values.size());
  for (CompactSet& v : values) vals.push_back(make_set(std::move(v.points), v.convex));
  const int target = vals.front().dim();
  for (const CompactSet& v : vals)
    if (v.dim() != target) throw Error("table: values have mixed dimensions");

  ConePtr held = cone;
  auto rule = [held, dirs = std::move(dirs), vals = std::move(vals), target](const Point& x) {
    const ConeCoords lambdas = held->coords(x);
    const double total = lambdas.sum();
    if (total <= tol_geom) return origin_set(target);
    const Eigen::VectorXd w = lambdas / total;
    std::size_t best = 0;
    double best_dist = (w - dirs[0]).norm();
    for (std::size_t i = 1; i < dirs.size(); ++i) {
      const double d = (w - dirs[i]).norm();
      if (d < best_dist) {
        best_dist = d;
        best = i;
      }
    }
    return scale(total, vals[best]);
  };
  return finish_sublinear(std::move(cone), "table", std::move(rule));
}

SublinearCorrespondence custom_rule(ConePtr cone, std::string name,
                                    std::function<CompactSet(const Point&)> rule) {
  if (!cone) throw Error("custom rule: null cone");
  return finish_sublinear(std::move(cone), std::move(name), std::move(rule));
}

CompactSet eval_sublinear(const SublinearCorrespondence& phi, const Point& x) {
  phi.cone->coords(x);  // domain check: throws off-cone
  return phi.rule(x);
}

Multimatrix multimatrix(const LinearCorrespondence& phi) {
  if (!phi.endomorphism)
    throw Error("multimatrix: correspondence is not an endomorphism of its cone");
  Multimatrix m;
  m.coord_sets.reserve(phi.basis_images.size());
  for (const CompactSet& image : phi.basis_images) {
    std::vector<Point> coords;
    coords.reserve(image.size());
    for (const Point& p : image.points) coords.push_back(phi.cone->coords(p));
    m.coord_sets.push_back(make_set(std::move(coords), image.convex));
  }
  return m;
}

std::size_t selection_count(const Multimatrix& m) {
  std::size_t count = 1;
  for (const CompactSet& s : m.coord_sets) {
    count *= s.size();
    if (count > selection_cap) throw Error("multimatrix: selection enumeration cap exceeded");
  }
  return count;
}

SelectionMatrix selection_at(const Multimatrix& m, std::size_t index) {
  const int n = m.n();
  SelectionMatrix sel;
  sel.entries.resize(n, n);
  sel.provenance.resize(static_cast<std::size_t>(n));
  std::size_t rest = index;
  for (int j = 0; j < n; ++j) {
    const auto& column_set = m.coord_sets[static_cast<std::size_t>(j)];
    const std::size_t pick = rest % column_set.size();
    rest /= column_set.size();
    sel.provenance[static_cast<std::size_t>(j)] = static_cast<int>(pick);
    sel.entries.col(j) = column_set.points[pick];
  }
  return sel;
}

CompactSet eval_via_multimatrix(const Multimatrix& m, const Cone& cone, const Point& x,
                                bool convex) {
  const ConeCoords lambdas = cone.coords(x);
  if (lambdas.norm() <= tol_geom) return origin_set(cone.ambient_dim());
  const std::size_t count = selection_count(m);
  std::vector<Point> points;
  points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const SelectionMatrix sel = selection_at(m, i);
    points.push_back(cone.from_coords(sel.entries * lambdas));
  }
  return make_set(std::move(points), convex);
}

LinearCorrespondence hat_extension(const SublinearCorrespondence& phi) {
  std::vector<CompactSet> hulls;
  hulls.reserve(phi.basis_images.size());
  for (const CompactSet& image : phi.basis_images) hulls.push_back(convex_hull(image.points));
  return make_linear(phi.cone, std::move(hulls));
}

LinearCorrespondence compose(const LinearCorrespondence& outer, const LinearCorrespondence& inner) {
  if (inner.target_dim != outer.cone->ambient_dim())
    throw Error("compose: inner target does not match outer domain");
  bool convex_outer = false;
  for (const CompactSet& s : outer.basis_images) convex_outer |= s.convex;

  std::vector<CompactSet> images;
  images.reserve(inner.basis_images.size());
  for (const CompactSet& inner_image : inner.basis_images) {
    std::vector<Point> pts;
    for (const Point& v : inner_image.points) {
      const CompactSet image = eval_linear(outer, v);
      pts.insert(pts.end(), image.points.begin(), image.points.end());
    }
    images.push_back(make_set(std::move(pts), inner_image.convex || convex_outer));
  }
  return make_linear(inner.cone, std::move(images));
}

namespace detail {

CorrView view(const LinearCorrespondence& phi) {
  return CorrView{phi.cone.get(), phi.target_dim, phi.endomorphism,
                  [&phi](const Point& x) { return eval_linear(phi, x); }};
}

CorrView view(const SublinearCorrespondence& phi) {
  return CorrView{phi.cone.get(), phi.target_dim, phi.endomorphism,
                  [&phi](const Point& x) { return eval_sublinear(phi, x); }};
}

SupResult corr_norm_impl(const CorrView& v, const NormSpec& norm, int resolution) {
  const Eigen::MatrixXd& basis = v.cone->basis_matrix();
  const int n = v.cone->n();
  const auto objective = [&](const std::vector<double>& w) {
    Point x = basis * Eigen::Map<const Eigen::VectorXd>(w.data(), n);
    x /= norm_value(norm, x);
    const double value = set_norm(v.eval(x), norm);
    if (!std::isfinite(value) || value > overflow_guard) return overflow_marker;
    return value;
  };
  SupResult result = guarded_sup(n, resolution, objective);
  if (result.value >= overflow_guard)
    throw Error("corr_norm: unbounded rule (value above overflow guard)");
  return result;
}

SupResult dist_to_identity_impl(const CorrView& v, const NormSpec& norm, int resolution) {
  if (!v.endomorphism) throw Error("dist_to_identity: correspondence is not an endomorphism");
  const Eigen::MatrixXd& basis = v.cone->basis_matrix();
  const int n = v.cone->n();
  const auto objective = [&](const std::vector<double>& w) {
    Point x = basis * Eigen::Map<const Eigen::VectorXd>(w.data(), n);
    x /= norm_value(norm, x);
    return set_to_point_hausdorff(v.eval(x), x, norm);
  };
  return guarded_sup(n, resolution, objective);
}

}  // namespace detail

SupResult corr_norm(const LinearCorrespondence& phi, const NormSpec& norm, int resolution) {
  return detail::corr_norm_impl(detail::view(phi), norm, resolution);
}

SupResult corr_norm(const SublinearCorrespondence& phi, const NormSpec& norm, int resolution) {
  return detail::corr_norm_impl(detail::view(phi), norm, resolution);
}

SupResult dist_to_identity(const LinearCorrespondence& phi, const NormSpec& norm, int resolution) {
  return detail::dist_to_identity_impl(detail::view(phi), norm, resolution);
}

SupResult dist_to_identity(const SublinearCorrespondence& phi, const NormSpec& norm,
                           int resolution) {
  return detail::dist_to_identity_impl(detail::view(phi), norm, resolution);
}

SupResult multimatrix_h1_to_identity(const Multimatrix& m, const Cone& cone,
                                     const NormSpec& ambient, int resolution) {
  Multimatrix hulled;
  hulled.coord_sets.reserve(m.coord_sets.size());
  for (const CompactSet& s : m.coord_sets)
    hulled.coord_sets.push_back(s.convex ? s : convex_hull(s.points));

  const std::size_t count = selection_count(hulled);
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(cone.n(), cone.n());

  std::vector<SupResult> per_selection(count);
  std::mutex error_mu;
  std::string error;
  par::for_index(count, [&](std::size_t i) {
    try {
      const SelectionMatrix sel = selection_at(hulled, i);
      per_selection[i] = matrix_cone_norm(sel.entries - id, cone, ambient, resolution, false);
    } catch (const std::exception& e) {
      std::lock_guard<std::mutex> lock(error_mu);
      if (error.empty()) error = e.what();
    }
  });
  if (!error.empty()) throw Error(error);

  std::size_t best = 0;
  for (std::size_t i = 1; i < count; ++i)
    if (per_selection[i].value > per_selection[best].value) best = i;
  return per_selection[best];
}

Corollary1Result corollary1_check(const SublinearCorrespondence& phi, const NormSpec& ambient,
                                  int resolution, double tol) {
  if (!phi.endomorphism) throw Error("corollary1_check: not an endomorphism");
  const LinearCorrespondence hat = hat_extension(phi);
  Corollary1Result result;
  result.lhs = multimatrix_h1_to_identity(multimatrix(hat), *phi.cone, ambient, resolution).value;
  result.rhs = dist_to_identity(phi, ambient, resolution).value;
  result.tol = tol;
  result.holds = result.lhs >= result.rhs - tol;
  return result;
}

const char* to_string(InvertStatus s) {
  switch (s) {
    case InvertStatus::certified: return "CERTIFIED";
    case InvertStatus::invertible_at_sample: return "INVERTIBLE-AT-SAMPLE";
    case InvertStatus::singular: return "SINGULAR";
  }
  return "?";
}

namespace {

InvertRecord classify_matrix(const Eigen::MatrixXd& a, bool is_vertex,
                             std::vector<int> provenance) {
  const int n = static_cast<int>(a.rows());
  InvertRecord rec;
  rec.is_vertex = is_vertex;
  rec.provenance = std::move(provenance);
  rec.det = a.determinant();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const double smax = svd.singularValues()(0);
  const double smin = svd.singularValues()(n - 1);
  rec.cond = smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd_dist(a - Eigen::MatrixXd::Identity(n, n));
  rec.op_dist_to_identity = svd_dist.singularValues()(0);

  if (rec.op_dist_to_identity < 1.0 - 1e-9)
    rec.status = InvertStatus::certified;
  else if (smin <= 1e-12 * std::max(1.0, smax))
    rec.status = InvertStatus::singular;
  else
    rec.status = InvertStatus::invertible_at_sample;
  return rec;
}

}  // namespace

InvertReport invertibility_certificate(const Multimatrix& m, const Cone& cone,
                                       int interior_samples, unsigned seed) {
  const int n = m.n();
  if (n != cone.n()) throw Error("invertibility_certificate: multimatrix size != cone basis size");
  const std::size_t count = selection_count(m);

  InvertReport report;
  report.records.reserve(count + static_cast<std::size_t>(interior_samples) + 1);
  for (std::size_t i = 0; i < count; ++i) {
    const SelectionMatrix sel = selection_at(m, i);
    report.records.push_back(classify_matrix(sel.entries, true, sel.provenance));
  }

  // centroid of each coordinate set, then seeded convex combinations
  Eigen::MatrixXd centroid(n, n);
  for (int j = 0; j < n; ++j) {
    Point c = Point::Zero(n);
    for (const Point& p : m.coord_sets[static_cast<std::size_t>(j)].points) c += p;
    centroid.col(j) = c / static_cast<double>(m.coord_sets[static_cast<std::size_t>(j)].size());
  }
  report.records.push_back(classify_matrix(centroid, false, std::vector<int>(n, -1)));

  Rng rng(seed);
  for (int s = 0; s < interior_samples; ++s) {
    Eigen::MatrixXd a(n, n);
    for (int j = 0; j < n; ++j) {
      const auto& pts = m.coord_sets[static_cast<std::size_t>(j)].points;
      Eigen::VectorXd w(pts.size());
      for (Eigen::Index i = 0; i < w.size(); ++i) w[i] = rng.uniform01() + 1e-3;
      w /= w.sum();
      Point col = Point::Zero(n);
      for (std::size_t i = 0; i < pts.size(); ++i) col += w[static_cast<Eigen::Index>(i)] * pts[i];
      a.col(j) = col;
    }
    report.records.push_back(classify_matrix(a, false, std::vector<int>(n, -1)));
  }

  for (const InvertRecord& rec : report.records)
    if (rec.status == InvertStatus::singular) report.all_invertible = false;
  return report;
}

SublinearityReport check_sublinearity(const SublinearCorrespondence& phi, int samples,
                                      unsigned seed, double tol) {
  if (samples < 1) throw Error("check_sublinearity: samples must be >= 1");
  SublinearityReport report;
  report.samples = samples;
  Rng rng(seed);
  const NormSpec norm = NormSpec::euclidean();
  const int n = phi.cone->n();

  for (int s = 0; s < samples; ++s) {
    ConeCoords wx(n), wy(n);
    for (int i = 0; i < n; ++i) wx[i] = rng.uniform(0.0, 1.5);
    for (int i = 0; i < n; ++i) wy[i] = rng.uniform(0.0, 1.5);
    if (s % 4 == 3) {
      // exercise facet boundaries
      wx[static_cast<int>(rng.index(static_cast<std::size_t>(n)))] = 0.0;
      wy[static_cast<int>(rng.index(static_cast<std::size_t>(n)))] = 0.0;
    }
    const double lambda = rng.uniform(0.1, 3.0);
    const Point x = phi.cone->from_coords(wx);
    const Point y = phi.cone->from_coords(wy);

    const CompactSet fx = eval_sublinear(phi, x);
    const CompactSet fy = eval_sublinear(phi, y);
    const double sub_excess = directed_excess(eval_sublinear(phi, x + y), minkowski_sum(fx, fy), norm);
    if (sub_excess > tol)
      report.violations.push_back({"subadditivity", x, y, 0.0, sub_excess});

    const double hom_defect = hausdorff(eval_sublinear(phi, lambda * x), scale(lambda, fx), norm);
    if (hom_defect > tol)
      report.violations.push_back({"homogeneity", x, Point{}, lambda, hom_defect});
  }
  return report;
}

}  // namespace conecorr
