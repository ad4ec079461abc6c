#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "idemfract/config.hpp"
#include "idemfract/engine.hpp"
#include "idemfract/higuchi.hpp"

namespace idemfract {

struct AttractorRun {
  PartialSystem system;
  UniformGrid grid;
  DiscreteDensity density;
  IterationReport report;
  double gamma = 0.0;
  double delta = 0.0;  // 2 eps / (1 - gamma)
};

/// Builds S_n and the grid from the config and iterates to the discrete
/// fixed point. Writes nothing.
AttractorRun compute_attractor(const RunConfig& config);

/// compute_attractor plus every configured output file, with a key=value
/// summary on `log`.
AttractorRun run_attractor(const RunConfig& config, std::ostream& log);

/// HFD of the fuzzified attractor for each configured k_max (or the
/// override). The fit file, if configured, is written for the largest k_max.
std::vector<HiguchiResult> run_hfd(const RunConfig& config, std::optional<std::size_t> k_max_override,
                                   std::ostream& log);

/// HFD of a series or surface read from disk.
HiguchiResult run_hfd_file(const std::string& path, std::size_t k_max, const std::string& fit_path,
                           std::ostream& log);

struct OracleReport {
  std::size_t depth = 0;
  std::size_t iterations_run = 0;
  double max_discrepancy = 0.0;
  bool passed = false;
};

/// Runs `depth` steps at tolerance 0 and compares bit-exactly against the
/// word enumeration.
OracleReport run_oracle_check(const RunConfig& config, std::ostream& log);

/// Largest pointwise difference, bottom vs bottom counting as 0 and bottom
/// vs finite as +inf.
double max_discrepancy(const DiscreteDensity& a, const DiscreteDensity& b);

}  // namespace idemfract
