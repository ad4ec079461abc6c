#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idemfract/engine.hpp"
#include "idemfract/ifs.hpp"

namespace idemfract {

/// Which countable system to truncate. `map_family` is a builtin family
/// name or "explicit"; weights come from `weight_family` or `weights`.
struct SystemSpec {
  std::string map_family;
  std::optional<std::string> weight_family;
  std::vector<double> weights;
  std::vector<AffineMap> maps;
  bool clamp = false;
  std::size_t n = 1;

  CountableSystem build() const;
};

struct OutputPaths {
  std::string density_path;
  std::string fuzzy_path;
  std::string image_path;
  std::string fit_path;
  bool binary_image = false;
};

struct RunConfig {
  int dimension = 1;
  std::size_t subdivisions = 0;  // M
  SystemSpec system;
  IterationConfig iteration;
  std::vector<std::size_t> k_max;
  OutputPaths outputs;
  std::size_t oracle_depth = 0;
  std::size_t oracle_budget = kDefaultOracleBudget;

  UniformGrid grid() const { return UniformGrid(dimension, subdivisions); }
};

/// Parses one JSON run object. Violations raise Error(ConfigInvalid) whose
/// message starts with the offending field path, e.g. "space.M: ...".
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);

}  // namespace idemfract
