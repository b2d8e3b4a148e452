#include "conecorr/sweep.hpp"

#include <algorithm>
#include <cmath>

#include "conecorr/parallel.hpp"

namespace conecorr {

namespace {

constexpr std::size_t grid_cap = 20'000'000;
constexpr int refine_halvings = 20;
constexpr int refine_moves_per_level = 64;

void append_compositions(int remaining_parts, long long remaining, std::vector<long long>& prefix,
                         double inv, std::vector<std::vector<double>>& out) {
  if (remaining_parts == 1) {
    std::vector<double> w(prefix.size() + 1);
    for (std::size_t i = 0; i < prefix.size(); ++i) w[i] = static_cast<double>(prefix[i]) * inv;
    w.back() = static_cast<double>(remaining) * inv;
    out.push_back(std::move(w));
    return;
  }
  for (long long k = remaining; k >= 0; --k) {
    prefix.push_back(k);
    append_compositions(remaining_parts - 1, remaining - k, prefix, inv, out);
    prefix.pop_back();
  }
}

}  // namespace

std::size_t simplex_grid_size(int n, int resolution) {
  if (n < 1) throw Error("simplex_grid: dimension must be >= 1");
  if (resolution < 2) throw Error("simplex_grid: resolution must be >= 2");
  if (n == 1) return 1;
  const long long s = resolution - 1;
  // C(s + n - 1, n - 1), guarded against overflow past the cap
  double count = 1.0;
  long long result = 1;
  for (long long i = 1; i <= n - 1; ++i) {
    count *= static_cast<double>(s + i) / static_cast<double>(i);
    if (count > static_cast<double>(grid_cap) * 2.0)
      throw Error("simplex_grid: grid too large for this dimension/resolution");
    result = result * (s + i) / i;
  }
  if (result > static_cast<long long>(grid_cap))
    throw Error("simplex_grid: grid too large for this dimension/resolution");
  return static_cast<std::size_t>(result);
}

std::vector<std::vector<double>> simplex_grid(int n, int resolution) {
  const std::size_t count = simplex_grid_size(n, resolution);
  std::vector<std::vector<double>> out;
  out.reserve(count);
  if (n == 1) {
    out.push_back({1.0});
    return out;
  }
  const long long s = resolution - 1;
  std::vector<long long> prefix;
  append_compositions(n, s, prefix, 1.0 / static_cast<double>(s), out);
  return out;
}

namespace {

// One hill-climb step: best feasible transfer of `step` mass between a
// coordinate pair. Returns false when no transfer improves.
bool transfer_step(int n, double step, const SimplexObjective& objective,
                   std::vector<double>& lam, double& value) {
  double best_value = value;
  int best_from = -1, best_to = -1;
  std::vector<double> cand(lam);
  for (int to = 0; to < n; ++to) {
    for (int from = 0; from < n; ++from) {
      if (from == to || lam[from] < step) continue;
      cand = lam;
      cand[from] -= step;
      cand[to] += step;
      const double v = objective(cand);
      if (v > best_value) {
        best_value = v;
        best_from = from;
        best_to = to;
      }
    }
  }
  if (best_from < 0) return false;
  lam[best_from] -= step;
  lam[best_to] += step;
  value = best_value;
  return true;
}

}  // namespace

SupResult sup_over_simplex(int n, int resolution, const SimplexObjective& objective,
                           bool allow_parallel) {
  const auto grid = simplex_grid(n, resolution);
  const auto eval = [&](std::size_t i) { return objective(grid[i]); };
  const par::MaxResult coarse = allow_parallel ? par::max_index(grid.size(), eval)
                                               : par::max_index_serial(grid.size(), eval);

  SupResult result;
  result.maximizer = grid[coarse.index];
  result.value = coarse.value;
  if (n == 1) return result;

  const double step0 = 1.0 / static_cast<double>(resolution - 1);

  // cell variation around the coarse maximizer
  double variation = 0.0;
  {
    std::vector<double> cand(result.maximizer);
    for (int to = 0; to < n; ++to) {
      for (int from = 0; from < n; ++from) {
        if (from == to || result.maximizer[from] < step0 * (1.0 - 1e-12)) continue;
        cand = result.maximizer;
        cand[from] = std::max(0.0, cand[from] - step0);
        cand[to] += step0;
        variation = std::max(variation, std::abs(coarse.value - objective(cand)));
      }
    }
  }

  double step = step0;
  for (int level = 0; level < refine_halvings; ++level) {
    int moves = 0;
    while (moves < refine_moves_per_level &&
           transfer_step(n, step, objective, result.maximizer, result.value))
      ++moves;
    step *= 0.5;
  }

  result.grid_gap = std::max(result.value - coarse.value, variation);
  return result;
}

}  // namespace conecorr
