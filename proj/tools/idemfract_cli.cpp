// Command-line front end: attractor, hfd, oracle-check, dtheta.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "idemfract/config.hpp"
#include "idemfract/emit.hpp"
#include "idemfract/error.hpp"
#include "idemfract/fuzzy.hpp"
#include "idemfract/pipeline.hpp"

namespace {

using namespace idemfract;

unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("THREADS")) {
    const long v = std::strtol(cap, nullptr, 10);
    if (v >= 1) n = std::min(n, static_cast<unsigned>(v));
  }
  return n;
}

RunConfig load(const std::string& path) {
  RunConfig cfg = load_config(path);
  cfg.iteration.threads = worker_count();
  return cfg;
}

bool looks_like_config(const std::string& path) {
  std::ifstream in(path);
  char c = 0;
  while (in.get(c) && std::isspace(static_cast<unsigned char>(c))) {
  }
  return c == '{';
}

LoadedDensity load_density(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  return read_density_csv(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Idempotent attractors of countable max-plus IFS and their Higuchi dimension"};
  app.require_subcommand(1);

  std::string attractor_config;
  auto* attractor = app.add_subcommand("attractor", "Iterate S_n on the grid and write density/fuzzy/image files");
  attractor->add_option("config", attractor_config, "JSON run config")->required();

  std::string hfd_input, fit_path;
  std::optional<std::size_t> kmax;
  auto* hfd = app.add_subcommand("hfd", "Higuchi fractal dimension of a fuzzified attractor or a series file");
  hfd->add_option("input", hfd_input, "JSON run config, series CSV, or PGM image")->required();
  hfd->add_option("--kmax", kmax, "largest scale k (overrides higuchi.k_max)");
  hfd->add_option("--fit", fit_path, "write fit rows here (series input; configs use outputs.fit_path)");

  std::string oracle_config;
  auto* oracle = app.add_subcommand("oracle-check", "Compare K iterations against exhaustive word enumeration");
  oracle->add_option("config", oracle_config, "JSON run config with an oracle.depth entry")->required();

  std::string density_a, density_b;
  auto* dtheta = app.add_subcommand("dtheta", "Level-set Hausdorff distance between two density CSVs");
  dtheta->add_option("densityA", density_a)->required();
  dtheta->add_option("densityB", density_b)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (attractor->parsed()) {
      run_attractor(load(attractor_config), std::cout);
    } else if (hfd->parsed()) {
      if (looks_like_config(hfd_input)) {
        RunConfig cfg = load(hfd_input);
        if (!fit_path.empty()) cfg.outputs.fit_path = fit_path;
        run_hfd(cfg, kmax, std::cout);
      } else {
        if (!kmax) throw Error(ErrorCode::ConfigInvalid, "--kmax: required for series files");
        run_hfd_file(hfd_input, *kmax, fit_path, std::cout);
      }
    } else if (oracle->parsed()) {
      const OracleReport report = run_oracle_check(load(oracle_config), std::cout);
      return report.passed ? 0 : 3;
    } else if (dtheta->parsed()) {
      const LoadedDensity a = load_density(density_a);
      const LoadedDensity b = load_density(density_b);
      if (!(a.grid.shape() == b.grid.shape())) throw Error(ErrorCode::ShapeMismatch, "densities on different grids");
      std::cout << "dtheta=" << format_real(discrete_dtheta(a.density, b.density, a.grid)) << '\n';
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
