// Times the OpenMP grid sweeps against the serial reference on the heavy
// kernels and verifies both paths return identical results.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "conecorr/matrix_norm.hpp"
#include "conecorr/parallel.hpp"
#include "conecorr/random_sets.hpp"
#include "conecorr/semigroup.hpp"

using namespace conecorr;

namespace {

struct KernelResult {
  double value = 0.0;
  double ms = 0.0;
};

KernelResult timed(const std::function<double()>& kernel) {
  const auto start = std::chrono::steady_clock::now();
  const double value = kernel();
  const auto stop = std::chrono::steady_clock::now();
  return {value, std::chrono::duration<double, std::milli>(stop - start).count()};
}

void compare(const std::string& name, const std::function<double()>& kernel) {
  par::set_enabled(false);
  const KernelResult serial = timed(kernel);
  par::set_enabled(true);
  const KernelResult parallel = timed(kernel);
  const bool identical = serial.value == parallel.value;
  std::printf("%-28s serial %9.1f ms   openmp %9.1f ms   speedup %5.2fx   %s\n", name.c_str(),
              serial.ms, parallel.ms, serial.ms / std::max(parallel.ms, 1e-9),
              identical ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("threads: %d (openmp %s)\n", par::thread_count(),
              par::openmp_available() ? "on" : "off");

  Rng rng(7);
  const ConePtr cone3 = random_cone(rng, 3);
  const NormSpec norm = NormSpec::euclidean();

  Eigen::MatrixXd a(3, 3);
  a << 1.2, 0.3, 0.0, 0.1, 0.8, 0.2, 0.0, 0.4, 1.5;
  compare("matrix_cone_norm n=3", [&] { return matrix_cone_norm(a, *cone3, norm, 700).value; });

  const LinearCorrespondence phi = random_linear_endo(rng, cone3, 4, true);
  compare("corr_norm n=3", [&] { return corr_norm(phi, norm, 220).value; });

  compare("h1_to_identity n=3", [&] {
    return multimatrix_h1_to_identity(multimatrix(phi), *cone3, norm, 260).value;
  });

  const ConePtr ray = standard_cone(1);
  const SemigroupFamily family = SemigroupFamily::interval_scalar(ray, 0.5, 1.0);
  std::vector<double> t_grid;
  for (int i = 0; i <= 24; ++i) t_grid.push_back(0.05 * i);
  std::vector<Point> xs;
  for (int i = 1; i <= 12; ++i) xs.push_back(Point::Constant(1, 0.25 * i));
  compare("semigroup_defect 25x25x12",
          [&] { return semigroup_defect(family, t_grid, xs, norm).defect; });

  return 0;
}
