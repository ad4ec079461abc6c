#include "idemfract/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "idemfract/error.hpp"

namespace idemfract {

namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& field, const std::string& why) {
  throw Error(ErrorCode::ConfigInvalid, field + ": " + why);
}

const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) invalid(path + "." + key, "missing");
  return obj.at(key);
}

std::size_t positive_integer(const json& v, const std::string& path, std::size_t min) {
  if (!v.is_number_integer()) invalid(path, "expected an integer");
  const auto value = v.get<long long>();
  if (value < static_cast<long long>(min)) invalid(path, "must be >= " + std::to_string(min));
  return static_cast<std::size_t>(value);
}

double number(const json& v, const std::string& path) {
  if (!v.is_number()) invalid(path, "expected a number");
  return v.get<double>();
}

AffineMap parse_map(const json& m, int dimension, const std::string& path) {
  if (!m.is_object()) invalid(path, "expected an object");
  if (dimension == 1) {
    return AffineMap::line(number(require(m, "slope", path), path + ".slope"),
                           number(require(m, "offset", path), path + ".offset"));
  }
  const json& a = require(m, "matrix", path);
  const json& b = require(m, "offset", path);
  if (!a.is_array() || a.size() != 2 || !a[0].is_array() || a[0].size() != 2 || !a[1].is_array() ||
      a[1].size() != 2) {
    invalid(path + ".matrix", "expected [[a11, a12], [a21, a22]]");
  }
  if (!b.is_array() || b.size() != 2) invalid(path + ".offset", "expected [b1, b2]");
  const std::string mp = path + ".matrix";
  return AffineMap::plane(number(a[0][0], mp), number(a[0][1], mp), number(a[1][0], mp), number(a[1][1], mp),
                          number(b[0], path + ".offset"), number(b[1], path + ".offset"));
}

double parse_weight(const json& w, const std::string& path) {
  if (w.is_string() && w.get<std::string>() == "-inf") return kBottom;
  return number(w, path);
}

SystemSpec parse_system(const json& s, int dimension) {
  SystemSpec spec;
  const json& family = require(s, "family", "system");
  if (!family.is_string()) invalid("system.family", "expected a string");
  spec.map_family = family.get<std::string>();
  spec.n = positive_integer(require(s, "n", "system"), "system.n", 1);
  if (s.contains("clamp")) {
    if (!s.at("clamp").is_boolean()) invalid("system.clamp", "expected true or false");
    spec.clamp = s.at("clamp").get<bool>();
  }

  if (spec.map_family == "explicit") {
    const json& maps = require(s, "maps", "system");
    if (!maps.is_array() || maps.empty()) invalid("system.maps", "expected a non-empty array");
    for (std::size_t i = 0; i < maps.size(); ++i) {
      spec.maps.push_back(parse_map(maps[i], dimension, "system.maps[" + std::to_string(i) + "]"));
    }
  } else {
    const auto fam = parse_map_family(spec.map_family);
    if (!fam) invalid("system.family", "unknown family '" + spec.map_family + "'");
    const int fam_dim = *fam == MapFamily::DyadicShift1D ? 1 : 2;
    if (fam_dim != dimension) invalid("system.family", "family is " + std::to_string(fam_dim) + "D but space is " +
                                                           std::to_string(dimension) + "D");
  }

  const json& weights = require(s, "weights", "system");
  if (weights.is_string()) {
    if (spec.map_family == "explicit") invalid("system.weights", "explicit maps need an explicit weight list");
    spec.weight_family = weights.get<std::string>();
    if (!parse_weight_family(*spec.weight_family)) {
      invalid("system.weights", "unknown weight family '" + *spec.weight_family + "'");
    }
  } else if (weights.is_array()) {
    for (std::size_t i = 0; i < weights.size(); ++i) {
      spec.weights.push_back(parse_weight(weights[i], "system.weights[" + std::to_string(i) + "]"));
    }
  } else {
    invalid("system.weights", "expected a family name or a list of numbers");
  }
  try {
    const CountableSystem system = spec.build();
    if (const auto bound = system.max_order(); bound && spec.n > *bound) {
      invalid("system.n", "exceeds the explicit list length " + std::to_string(*bound));
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ConfigInvalid || e.code() == ErrorCode::NotContractive) throw;
    invalid("system", e.what());
  }
  return spec;
}

}  // namespace

CountableSystem SystemSpec::build() const {
  if (map_family == "explicit") return CountableSystem::explicit_list(maps, weights, clamp);
  if (weight_family) return builtin_family(map_family, *weight_family);
  return builtin_family(map_family, weights);
}

RunConfig parse_config(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    invalid("<root>", std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) invalid("<root>", "expected an object");

  RunConfig cfg;
  const json& space = require(root, "space", "<root>");
  const std::size_t dim = positive_integer(require(space, "dimension", "space"), "space.dimension", 1);
  if (dim != 1 && dim != 2) invalid("space.dimension", "must be 1 or 2");
  cfg.dimension = static_cast<int>(dim);
  cfg.subdivisions = positive_integer(require(space, "M", "space"), "space.M", 2);
  const std::size_t side = cfg.subdivisions + 1;

  cfg.system = parse_system(require(root, "system", "<root>"), cfg.dimension);

  if (root.contains("iteration")) {
    const json& it = root.at("iteration");
    if (it.contains("N")) cfg.iteration.max_iterations = positive_integer(it.at("N"), "iteration.N", 1);
    if (it.contains("tolerance")) {
      cfg.iteration.tolerance = number(it.at("tolerance"), "iteration.tolerance");
      if (!(cfg.iteration.tolerance >= 0.0)) invalid("iteration.tolerance", "must be >= 0");
    }
    if (it.contains("initial_support")) {
      const json& sup = it.at("initial_support");
      if (sup.is_string()) {
        if (sup.get<std::string>() != "full") invalid("iteration.initial_support", "expected \"full\" or a list");
      } else if (sup.is_array()) {
        if (sup.empty()) invalid("iteration.initial_support", "must not be empty");
        const std::size_t size = cfg.dimension == 1 ? side : side * side;
        for (std::size_t i = 0; i < sup.size(); ++i) {
          const std::string path = "iteration.initial_support[" + std::to_string(i) + "]";
          const std::size_t idx = positive_integer(sup[i], path, 0);
          if (idx >= size) invalid(path, "index outside the grid");
          cfg.iteration.initial_support.push_back(idx);
        }
      } else {
        invalid("iteration.initial_support", "expected \"full\" or a list");
      }
    }
  }

  if (root.contains("higuchi")) {
    const json& h = root.at("higuchi");
    const json& k = require(h, "k_max", "higuchi");
    std::vector<json> ks = k.is_array() ? k.get<std::vector<json>>() : std::vector<json>{k};
    for (std::size_t i = 0; i < ks.size(); ++i) {
      const std::string path = k.is_array() ? "higuchi.k_max[" + std::to_string(i) + "]" : "higuchi.k_max";
      const std::size_t value = positive_integer(ks[i], path, 2);
      if (value > (side + 1) / 2) invalid(path, "must be <= ceil(side/2) = " + std::to_string((side + 1) / 2));
      cfg.k_max.push_back(value);
    }
  }

  if (root.contains("outputs")) {
    const json& o = root.at("outputs");
    auto path_of = [&o](const char* key) {
      if (!o.contains(key)) return std::string{};
      if (!o.at(key).is_string()) invalid(std::string("outputs.") + key, "expected a path string");
      return o.at(key).get<std::string>();
    };
    cfg.outputs.density_path = path_of("density_path");
    cfg.outputs.fuzzy_path = path_of("fuzzy_path");
    cfg.outputs.image_path = path_of("image_path");
    cfg.outputs.fit_path = path_of("fit_path");
    const std::string fmt = o.contains("image_format") && o.at("image_format").is_string()
                                ? o.at("image_format").get<std::string>()
                                : (o.contains("image_format") ? std::string("?") : std::string("P2"));
    if (fmt != "P2" && fmt != "P5") invalid("outputs.image_format", "must be \"P2\" or \"P5\"");
    cfg.outputs.binary_image = fmt == "P5";
  }

  if (root.contains("oracle")) {
    const json& o = root.at("oracle");
    cfg.oracle_depth = positive_integer(require(o, "depth", "oracle"), "oracle.depth", 0);
    if (o.contains("budget")) cfg.oracle_budget = positive_integer(o.at("budget"), "oracle.budget", 1);
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open config '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace idemfract
