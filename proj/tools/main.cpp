#include <CLI11.hpp>

#include <iostream>

#include "conecorr/report.hpp"

namespace {
constexpr const char* version_string = "conecorr 1.0.0";
}

int main(int argc, char** argv) {
  CLI::App app{"set-valued correspondences on finitely generated cones"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  int resolution = 0;
  double tol = 0.0;

  CLI::App* run = app.add_subcommand("run", "run the checks of a JSON config");
  run->add_option("config", config_path, "config file")->required();
  CLI::Option* out_opt = run->add_option("--out", out_dir, "output directory for report files");
  CLI::Option* res_opt = run->add_option("--resolution", resolution, "grid resolution override");
  CLI::Option* tol_opt = run->add_option("--tol", tol, "tolerance override");

  CLI::App* list = app.add_subcommand("list-builtins", "print built-in rules, families and checks");
  CLI::App* ver = app.add_subcommand("version", "print the version");

  CLI11_PARSE(app, argc, argv);

  if (list->parsed()) {
    std::cout << conecorr::list_builtins_text();
    return 0;
  }
  if (ver->parsed()) {
    std::cout << version_string << '\n';
    return 0;
  }

  conecorr::RunOptions opts;
  if (*out_opt) opts.out_dir = out_dir;
  if (*res_opt) opts.resolution = resolution;
  if (*tol_opt) opts.tol = tol;

  try {
    return conecorr::run_and_write(config_path, opts, std::cout);
  } catch (const conecorr::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
