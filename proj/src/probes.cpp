#include <algorithm>
#include <cmath>
#include <mutex>

#include "conecorr/correspondence.hpp"
#include "conecorr/parallel.hpp"

namespace conecorr {

namespace detail {

namespace {

// Deterministic sample pattern near x inside the cone: weight-space offsets
// over the {-1,0,1}^n box (scaled to the pattern resolution), each rescaled
// so the ambient distance hits eta, with negative weights clamped back to
// the cone. Every returned z satisfies z in C and 0 < |z - x| < delta.
std::vector<Point> sample_near(const Cone& cone, const ConeCoords& at, const Point& x,
                               double delta, const ProbeParams& params) {
  static const double eta_scales[] = {0.99, 0.5, 0.25, 0.125};
  const int n = cone.n();
  const int res = std::max(2, params.pattern_resolution);

  std::vector<ConeCoords> offsets;
  {
    ConeCoords g = ConeCoords::Constant(n, -1.0);
    const double step = 2.0 / static_cast<double>(res - 1);
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    while (true) {
      for (int i = 0; i < n; ++i) g[i] = -1.0 + step * idx[static_cast<std::size_t>(i)];
      if (g.cwiseAbs().maxCoeff() > 1e-15) offsets.push_back(g);
      int k = 0;
      while (k < n && ++idx[static_cast<std::size_t>(k)] == res) {
        idx[static_cast<std::size_t>(k)] = 0;
        ++k;
      }
      if (k == n) break;
    }
  }

  std::vector<Point> samples;
  samples.reserve(offsets.size() * 4);
  for (double scale : eta_scales) {
    const double eta = scale * delta;
    for (const ConeCoords& g : offsets) {
      const double len = (cone.basis_matrix() * g).norm();
      if (len <= 1e-15) continue;
      ConeCoords lam = (at + (eta / len) * g).cwiseMax(0.0);
      Point z = cone.from_coords(lam);
      double dist = norm_value(params.norm, z - x);
      if (dist <= 1e-15) continue;
      if (dist >= eta) {
        // clamping can overshoot; pull back along the clamped direction
        lam = (at + (eta / dist) * (lam - at)).cwiseMax(0.0);
        z = cone.from_coords(lam);
        dist = norm_value(params.norm, z - x);
      }
      if (dist <= 1e-15 || dist >= delta) continue;
      samples.push_back(std::move(z));
    }
  }
  return samples;
}

}  // namespace

ProbeResult probe_impl(const CorrView& v, const Point& x, double eps, const ProbeParams& params,
                       bool upper) {
  if (!(eps > 0.0)) throw Error("probe: eps must be positive");
  const ConeCoords at = v.cone->coords(x);
  const CompactSet value_at_x = v.eval(x);

  std::vector<double> ladder;
  ladder.reserve(static_cast<std::size_t>(params.ladder) + 1);
  const bool at_zero = x.norm() <= tol_geom;
  if (at_zero && upper) {
    const double norm_phi = corr_norm_impl(v, params.norm, params.norm_resolution).value;
    if (norm_phi > 0.0) ladder.push_back(eps / norm_phi);
  }
  for (int k = 0; k < params.ladder; ++k)
    ladder.push_back(params.delta0 / static_cast<double>(1ull << k));

  ProbeResult result;
  for (double delta : ladder) {
    const std::vector<Point> samples = sample_near(*v.cone, at, x, delta, params);
    if (samples.empty()) throw Error("probe: empty sample pattern");

    std::mutex error_mu;
    std::string error;
    const auto excess_at = [&](std::size_t i) -> double {
      try {
        const CompactSet fz = v.eval(samples[i]);
        return upper ? directed_excess(fz, value_at_x, params.norm)
                     : directed_excess(value_at_x, fz, params.norm);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (error.empty()) error = e.what();
        return std::numeric_limits<double>::infinity();
      }
    };
    const par::MaxResult worst = par::max_index(samples.size(), excess_at);
    if (!error.empty()) throw Error(error);

    result.delta = delta;
    result.witness = samples[worst.index];
    result.witness_excess = worst.value;
    if (worst.value <= eps) {
      result.accepted = true;
      return result;
    }
  }
  result.accepted = false;
  return result;
}

}  // namespace detail

ProbeResult usc_probe(const SublinearCorrespondence& phi, const Point& x, double eps,
                      const ProbeParams& params) {
  return detail::probe_impl(detail::view(phi), x, eps, params, true);
}

ProbeResult usc_probe(const LinearCorrespondence& phi, const Point& x, double eps,
                      const ProbeParams& params) {
  return detail::probe_impl(detail::view(phi), x, eps, params, true);
}

ProbeResult lsc_probe(const SublinearCorrespondence& phi, const Point& x, double eps,
                      const ProbeParams& params) {
  return detail::probe_impl(detail::view(phi), x, eps, params, false);
}

ProbeResult lsc_probe(const LinearCorrespondence& phi, const Point& x, double eps,
                      const ProbeParams& params) {
  return detail::probe_impl(detail::view(phi), x, eps, params, false);
}

}  // namespace conecorr
