#include "idemfract/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "idemfract/emit.hpp"
#include "idemfract/error.hpp"
#include "idemfract/fuzzy.hpp"

namespace idemfract {

namespace {

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
  return out;
}

Series2D as_surface(const FuzzyField& field) { return Series2D{field.shape.side, field.values}; }

HiguchiResult hfd_of(const FuzzyField& field, std::size_t k_max) {
  if (field.shape.dimension == 1) return higuchi_1d(field.values, k_max);
  return higuchi_2d(as_surface(field), k_max);
}

}  // namespace

AttractorRun compute_attractor(const RunConfig& config) {
  const UniformGrid grid = config.grid();
  const CountableSystem countable = config.system.build();
  if (countable.dimension() != grid.dimension()) {
    throw Error(ErrorCode::ConfigInvalid, "system: dimension does not match space.dimension");
  }
  PartialSystem partial = build_partial(countable, config.system.n);
  auto [density, report] = iterate(partial, grid, config.iteration);
  const double gamma = countable.gamma();
  return AttractorRun{std::move(partial), grid, std::move(density), std::move(report), gamma,
                      resolution_delta(gamma, grid.epsilon())};
}

AttractorRun run_attractor(const RunConfig& config, std::ostream& log) {
  AttractorRun run = compute_attractor(config);
  const FuzzyField field = fuzzify(run.density);
  const OutputPaths& out = config.outputs;
  if (!out.density_path.empty()) {
    auto f = open_output(out.density_path);
    write_density_csv(f, run.density, run.grid);
  }
  if (!out.fuzzy_path.empty()) {
    auto f = open_output(out.fuzzy_path);
    write_fuzzy_csv(f, field, run.grid);
  }
  if (!out.image_path.empty() && run.grid.dimension() == 2) {
    auto f = open_output(out.image_path);
    write_pgm(f, field, out.binary_image);
  }
  log << "n=" << run.system.n << '\n'
      << "alpha_n=" << format_real(run.system.alpha) << '\n'
      << "gamma=" << format_real(run.gamma) << '\n'
      << "epsilon=" << format_real(run.grid.epsilon()) << '\n'
      << "delta=" << format_real(run.delta) << '\n'
      << "iterations=" << run.report.iterations_run << '\n'
      << "converged=" << (run.report.converged ? "true" : "false") << '\n'
      << "support=" << run.density.support_size() << '\n';
  return run;
}

std::vector<HiguchiResult> run_hfd(const RunConfig& config, std::optional<std::size_t> k_max_override,
                                   std::ostream& log) {
  std::vector<std::size_t> ks = k_max_override ? std::vector<std::size_t>{*k_max_override} : config.k_max;
  if (ks.empty()) throw Error(ErrorCode::ConfigInvalid, "higuchi.k_max: missing (or pass --kmax)");
  const AttractorRun run = compute_attractor(config);
  const FuzzyField field = fuzzify(run.density);
  const bool surface = run.grid.dimension() == 2;

  std::vector<HiguchiResult> results;
  for (std::size_t k : ks) {
    results.push_back(hfd_of(field, k));
    log << "k_max=" << k << " dimension=" << format_real(results.back().dimension)
        << (results.back().fit.degenerate ? " degenerate" : "") << '\n';
  }
  if (!config.outputs.fit_path.empty()) {
    const auto widest = std::max_element(results.begin(), results.end(), [](const auto& a, const auto& b) {
      return a.measure.size() < b.measure.size();
    });
    auto f = open_output(config.outputs.fit_path);
    write_fit_csv(f, *widest, surface);
  }
  return results;
}

HiguchiResult run_hfd_file(const std::string& path, std::size_t k_max, const std::string& fit_path,
                           std::ostream& log) {
  const LoadedSeries data = read_series_file(path);
  const bool surface = data.dimension == 2;
  HiguchiResult result = surface ? higuchi_2d(data.surface, k_max) : higuchi_1d(data.series, k_max);
  log << "k_max=" << k_max << " dimension=" << format_real(result.dimension)
      << (result.fit.degenerate ? " degenerate" : "") << '\n';
  if (!fit_path.empty()) {
    auto f = open_output(fit_path);
    write_fit_csv(f, result, surface);
  }
  return result;
}

double max_discrepancy(const DiscreteDensity& a, const DiscreteDensity& b) { return sup_change(a, b); }

OracleReport run_oracle_check(const RunConfig& config, std::ostream& log) {
  OracleReport report;
  report.depth = config.oracle_depth;
  const UniformGrid grid = config.grid();
  const PartialSystem partial = build_partial(config.system.build(), config.system.n);
  const DiscreteDensity start = initial_density(grid, config.iteration.initial_support);
  const DiscreteDensity oracle =
      word_oracle(partial, grid, report.depth, config.iteration.initial_support, config.oracle_budget);

  DiscreteDensity iterated = start;
  if (report.depth > 0) {
    IterationConfig exact = config.iteration;
    exact.max_iterations = report.depth;
    exact.tolerance = 0.0;
    auto [density, it] = iterate_from(start, DiscreteSystem(partial, grid), exact);
    iterated = std::move(density);
    report.iterations_run = it.iterations_run;
  }
  report.max_discrepancy = max_discrepancy(iterated, oracle);
  report.passed = report.max_discrepancy == 0.0;
  log << "depth=" << report.depth << '\n'
      << "iterations=" << report.iterations_run << '\n'
      << "max_discrepancy=" << format_real(report.max_discrepancy) << '\n'
      << "result=" << (report.passed ? "pass" : "fail") << '\n';
  return report;
}

}  // namespace idemfract
