#include "conecorr/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "conecorr/parallel.hpp"
#include "conecorr/rng.hpp"

namespace conecorr {

namespace {

void require_nonnegative(double t) {
  if (t < 0.0) throw Error("semigroup: time must be nonnegative");
}

long long integer_time(double t) {
  const double r = std::round(t);
  if (std::abs(t - r) > tol_geom || r < 0.0)
    throw Error("discrete-power family: time must be a nonnegative integer");
  return static_cast<long long>(r);
}

}  // namespace

SemigroupFamily SemigroupFamily::interval_scalar(ConePtr cone, double a, double b) {
  if (!cone) throw Error("interval-scalar family: null cone");
  if (!(a > 0.0 && a <= b)) throw Error("interval-scalar family: requires 0 < a <= b");
  SemigroupFamily f;
  f.cone_ = cone;
  f.name_ = "interval-scalar";
  f.member_ = [cone, a, b](double t) {
    require_nonnegative(t);
    return conecorr::interval_scalar(cone, std::exp(a * t), std::exp(b * t));
  };
  return f;
}

SemigroupFamily SemigroupFamily::discrete_power(LinearCorrespondence psi) {
  if (!psi.endomorphism) throw Error("discrete-power family: base must be an endomorphism");
  auto base = std::make_shared<LinearCorrespondence>(std::move(psi));
  SemigroupFamily f;
  f.cone_ = base->cone;
  f.name_ = "discrete-power";
  f.real_time_ = false;
  f.member_ = [base](double t) {
    const long long steps = integer_time(t);
    LinearCorrespondence power = identity_correspondence(base->cone);
    for (long long i = 0; i < steps; ++i) power = compose(*base, power);
    return wrap_linear(std::move(power));
  };
  return f;
}

SemigroupFamily SemigroupFamily::hat_of(SemigroupFamily b) {
  auto base = std::make_shared<SemigroupFamily>(std::move(b));
  SemigroupFamily f;
  f.cone_ = base->cone();
  f.name_ = "hat-of(" + base->name() + ")";
  f.real_time_ = base->real_time();
  f.member_ = [base](double t) { return wrap_linear(hat_extension(base->member(t))); };
  return f;
}

SemigroupFamily SemigroupFamily::idempotent(SublinearCorrespondence psi) {
  auto base = std::make_shared<SublinearCorrespondence>(std::move(psi));
  // the closed form is exact only when psi(psi(e_j)) = psi(e_j)
  const NormSpec norm = NormSpec::euclidean();
  for (const CompactSet& image : base->basis_images) {
    std::vector<Point> pts;
    for (const Point& v : image.points) {
      const CompactSet iv = eval_sublinear(*base, v);
      pts.insert(pts.end(), iv.points.begin(), iv.points.end());
    }
    if (hausdorff(make_set(std::move(pts), image.convex), image, norm) > 10 * tol_geom)
      throw Error("idempotent family: base correspondence is not idempotent");
  }
  SemigroupFamily f;
  f.cone_ = base->cone;
  f.name_ = "idempotent(" + base->rule_name + ")";
  f.member_ = [base](double t) {
    require_nonnegative(t);
    if (t == 0.0) return wrap_linear(identity_correspondence(base->cone));
    return *base;
  };
  return f;
}

SemigroupFamily SemigroupFamily::custom(ConePtr cone, std::string name,
                                        std::function<SublinearCorrespondence(double)> member) {
  SemigroupFamily f;
  f.cone_ = std::move(cone);
  f.name_ = std::move(name);
  f.member_ = std::move(member);
  return f;
}

SublinearCorrespondence SemigroupFamily::member(double t) const {
  require_nonnegative(t);
  return member_(t);
}

CompactSet SemigroupFamily::eval(double t, const Point& x) const {
  const SublinearCorrespondence phi = member(t);
  return eval_sublinear(phi, x);
}

CompactSet compose_eval(const SemigroupFamily& f, double t, double s, const Point& x) {
  const SublinearCorrespondence outer = f.member(t);
  const CompactSet inner_value = f.eval(s, x);
  std::vector<Point> pts;
  bool convex = inner_value.convex;
  for (const Point& v : inner_value.points) {
    const CompactSet image = eval_sublinear(outer, v);
    convex |= image.convex;
    pts.insert(pts.end(), image.points.begin(), image.points.end());
  }
  return make_set(std::move(pts), convex);
}

DefectResult semigroup_defect(const SemigroupFamily& f, const std::vector<double>& t_grid,
                              const std::vector<Point>& x_samples, const NormSpec& norm) {
  if (t_grid.empty() || x_samples.empty())
    throw Error("semigroup_defect: empty grid or sample list");
  for (double t : t_grid) require_nonnegative(t);

  const std::size_t nt = t_grid.size();
  const std::size_t nx = x_samples.size();
  const std::size_t total = nt * nt * nx;

  std::mutex error_mu;
  std::string error;
  const auto defect_at = [&](std::size_t idx) -> double {
    const std::size_t xi = idx % nx;
    const std::size_t ti = (idx / nx) % nt;
    const std::size_t si = idx / (nx * nt);
    try {
      const double s = t_grid[si], t = t_grid[ti];
      return hausdorff(f.eval(t + s, x_samples[xi]), compose_eval(f, t, s, x_samples[xi]), norm);
    } catch (const std::exception& e) {
      std::lock_guard<std::mutex> lock(error_mu);
      if (error.empty()) error = e.what();
      return std::numeric_limits<double>::infinity();
    }
  };
  const par::MaxResult worst = par::max_index(total, defect_at);
  if (!error.empty()) throw Error(error);

  DefectResult result;
  result.defect = worst.value;
  result.x = x_samples[worst.index % nx];
  result.t = t_grid[(worst.index / nx) % nt];
  result.s = t_grid[worst.index / (nx * nt)];
  return result;
}

namespace {

LinearCorrespondence hat_member(const SemigroupFamily& f, double t) {
  return hat_extension(f.member(t));
}

}  // namespace

GrowthFit growth_fit(const SemigroupFamily& f, const std::vector<double>& t_grid,
                     const NormSpec& norm, int resolution) {
  if (t_grid.empty()) throw Error("growth_fit: empty time grid");
  for (double t : t_grid) require_nonnegative(t);

  GrowthFit fit;
  fit.ts = t_grid;
  fit.norms.resize(t_grid.size());

  std::mutex error_mu;
  std::string error;
  par::for_index(t_grid.size(), [&](std::size_t i) {
    try {
      fit.norms[i] = corr_norm(f.member(t_grid[i]), norm, resolution).value;
    } catch (const std::exception& e) {
      std::lock_guard<std::mutex> lock(error_mu);
      if (error.empty()) error = e.what();
    }
  });
  if (!error.empty()) throw Error(error);

  std::vector<double> logs(t_grid.size());
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(fit.norms[i] > 0.0) || !std::isfinite(fit.norms[i]))
      throw Error("growth_fit: nonpositive or overflowing norm");
    logs[i] = std::log(fit.norms[i]);
  }

  const double n = static_cast<double>(t_grid.size());
  double st = 0, sl = 0, stt = 0, stl = 0;
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    st += t_grid[i];
    sl += logs[i];
    stt += t_grid[i] * t_grid[i];
    stl += t_grid[i] * logs[i];
  }
  const double denom = n * stt - st * st;
  double slope = 0.0, intercept = sl / n;
  if (std::abs(denom) > 1e-30) {
    slope = (n * stl - st * sl) / denom;
    intercept = (sl - slope * st) / n;
  }

  // shift the line up to an envelope
  double max_resid = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < t_grid.size(); ++i)
    max_resid = std::max(max_resid, logs[i] - (intercept + slope * t_grid[i]));
  intercept += max_resid;

  fit.gamma = slope;
  fit.beta0 = std::exp(intercept);
  fit.residuals.resize(t_grid.size());
  for (std::size_t i = 0; i < t_grid.size(); ++i)
    fit.residuals[i] = logs[i] - (intercept + slope * t_grid[i]);
  return fit;
}

std::vector<std::pair<double, double>> continuity_modulus(const SemigroupFamily& f, double w,
                                                          const Point& x,
                                                          const std::vector<double>& delta_grid,
                                                          int samples_per_delta,
                                                          const NormSpec& norm) {
  require_nonnegative(w);
  if (samples_per_delta < 1) throw Error("continuity_modulus: samples_per_delta must be >= 1");
  const CompactSet value_w = eval_linear(hat_member(f, w), x);

  std::vector<std::pair<double, double>> table;
  table.reserve(delta_grid.size());
  for (double delta : delta_grid) {
    if (delta < 0.0) throw Error("continuity_modulus: delta must be nonnegative");
    double sup = 0.0;
    if (delta > 0.0) {
      std::vector<double> ss;
      for (int j = -samples_per_delta; j <= samples_per_delta; ++j) {
        if (j == 0) continue;
        const double s = w + delta * static_cast<double>(j) / samples_per_delta;
        if (s >= 0.0) ss.push_back(s);
      }
      std::mutex error_mu;
      std::string error;
      const auto value_at = [&](std::size_t i) -> double {
        try {
          return hausdorff(eval_linear(hat_member(f, ss[i]), x), value_w, norm);
        } catch (const std::exception& e) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (error.empty()) error = e.what();
          return std::numeric_limits<double>::infinity();
        }
      };
      if (!ss.empty()) {
        sup = par::max_index(ss.size(), value_at).value;
        if (!error.empty()) throw Error(error);
      }
    }
    table.emplace_back(delta, sup);
  }
  return table;
}

double deviation_from_identity(const SemigroupFamily& f, double s, const NormSpec& norm,
                               int resolution) {
  return dist_to_identity(hat_member(f, s), norm, resolution).value;
}

LinUniEstimate lemma_linuni_constant(const LinearCorrespondence& phi, int sample_pairs,
                                     const NormSpec& norm, int resolution, unsigned seed) {
  if (sample_pairs < 1) throw Error("lemma_linuni_constant: need at least one pair");
  const double norm_phi = corr_norm(phi, norm, resolution).value;

  LinUniEstimate est;
  if (norm_phi <= 0.0) return est;  // |phi(x)| = 0 everywhere; any M works

  Rng rng(seed);
  const int n = phi.cone->n();
  for (int k = 0; k < sample_pairs; ++k) {
    ConeCoords wx(n), wy(n);
    for (int i = 0; i < n; ++i) wx[i] = rng.uniform(0.0, 2.0);
    for (int i = 0; i < n; ++i) wy[i] = rng.uniform(0.0, 2.0);
    const Point x = phi.cone->from_coords(wx);
    const Point y = phi.cone->from_coords(wy);
    const double gap = norm_value(norm, x - y);
    if (gap <= tol_geom) continue;  // degenerate pair
    const double ratio =
        hausdorff(eval_linear(phi, x), eval_linear(phi, y), norm) / (norm_phi * gap);
    if (ratio > est.ratio_unclamped) {
      est.ratio_unclamped = ratio;
      est.x_star = x;
      est.y_star = y;
    }
  }
  est.m_est = std::max(1.0, est.ratio_unclamped);
  return est;
}

Lemma32Result lemma32_check(const SemigroupFamily& f, double w, double s, const Point& x,
                            const NormSpec& norm, int resolution, double tol, int m_est_pairs) {
  require_nonnegative(w);
  require_nonnegative(s);

  const LinearCorrespondence hat_w = hat_member(f, w);
  Lemma32Result result;
  result.lhs = hausdorff(eval_linear(hat_member(f, w + s), x), eval_linear(hat_w, x), norm);
  result.m_est = lemma_linuni_constant(hat_w, m_est_pairs, norm, resolution).m_est;
  result.norm_w = corr_norm(hat_w, norm, resolution).value;
  result.deviation_s = deviation_from_identity(f, s, norm, resolution);
  result.rhs = result.m_est * result.norm_w * result.deviation_s * norm_value(norm, x);
  result.tol = tol;
  result.holds = result.lhs <= result.rhs + tol;
  return result;
}

}  // namespace conecorr
