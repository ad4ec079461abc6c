#include "idemfract/ifs.hpp"

#include <algorithm>
#include <cmath>

#include "idemfract/error.hpp"

namespace idemfract {

namespace {

// Named families have Lipschitz constants that are constant or decreasing
// beyond the first few indices, so a short prefix attains the supremum.
constexpr std::size_t kLipschitzProbe = 64;

AffineMap dyadic_shift(std::size_t j) {
  const double s = std::ldexp(1.0, -static_cast<int>(j));
  return AffineMap::line(s, s);
}

AffineMap checker(std::size_t j) {
  switch (j % 4) {
    case 0: return AffineMap::plane(0.5, 0.0, 0.0, 0.5, 0.0, 0.0);
    case 1: return AffineMap::plane(0.5, 0.0, 0.0, 0.5, 0.5, 0.0);
    case 2: return AffineMap::plane(0.5, 0.0, 0.0, 0.5, 0.0, 0.5);
    default: return AffineMap::plane(0.5, 0.0, 0.0, 0.5, 0.5, 0.5);
  }
}

AffineMap maple_leaf(std::size_t j) {
  switch (j) {
    case 1: return AffineMap::plane(0.008, 0.0, 0.0, 0.008, 0.1, 0.04);
    case 2: return AffineMap::plane(0.5, 0.0, 0.0, 0.5, 0.25, 0.4);
    case 3: return AffineMap::plane(0.355, -0.355, 0.355, 0.355, 0.266, 0.078);
    default: {
      const double drift = 1.0 - 1.0 / static_cast<double>(j);
      return AffineMap::plane(0.355, 0.355, -0.355, 0.355, 0.378 * drift, 0.434 * drift);
    }
  }
}

}  // namespace

AffineMap AffineMap::line(double slope, double intercept) {
  AffineMap m;
  m.dimension = 1;
  m.linear = {{{slope, 0.0}, {0.0, 0.0}}};
  m.offset = {intercept, 0.0};
  return m;
}

AffineMap AffineMap::plane(double a11, double a12, double a21, double a22, double b1, double b2) {
  AffineMap m;
  m.dimension = 2;
  m.linear = {{{a11, a12}, {a21, a22}}};
  m.offset = {b1, b2};
  return m;
}

Point AffineMap::operator()(const Point& x) const noexcept {
  if (dimension == 1) return {linear[0][0] * x[0] + offset[0], 0.0};
  return {linear[0][0] * x[0] + linear[0][1] * x[1] + offset[0],
          linear[1][0] * x[0] + linear[1][1] * x[1] + offset[1]};
}

double AffineMap::lipschitz() const noexcept {
  if (dimension == 1) return std::abs(linear[0][0]);
  const double a = linear[0][0], b = linear[0][1], c = linear[1][0], d = linear[1][1];
  // Largest eigenvalue of A^T A.
  const double p = a * a + c * c;
  const double q = a * b + c * d;
  const double r = b * b + d * d;
  const double half_trace = 0.5 * (p + r);
  const double disc = std::sqrt(0.25 * (p - r) * (p - r) + q * q);
  return std::sqrt(half_trace + disc);
}

bool AffineMap::maps_unit_cube_into_itself(double tol) const noexcept {
  auto inside = [tol](double v) { return v >= -tol && v <= 1.0 + tol; };
  const int corners = dimension == 1 ? 2 : 4;
  for (int c = 0; c < corners; ++c) {
    const Point y = (*this)({static_cast<double>(c & 1), static_cast<double>((c >> 1) & 1)});
    if (!inside(y[0])) return false;
    if (dimension == 2 && !inside(y[1])) return false;
  }
  return true;
}

std::optional<MapFamily> parse_map_family(std::string_view name) noexcept {
  if (name == "dyadic-shift-1d") return MapFamily::DyadicShift1D;
  if (name == "checker-2d") return MapFamily::Checker2D;
  if (name == "maple-leaf-2d") return MapFamily::MapleLeaf2D;
  return std::nullopt;
}

std::optional<WeightFamily> parse_weight_family(std::string_view name) noexcept {
  if (name == "neg-square") return WeightFamily::NegSquare;
  if (name == "neg-geometric") return WeightFamily::NegGeometric;
  return std::nullopt;
}

std::string_view to_string(MapFamily f) noexcept {
  switch (f) {
    case MapFamily::DyadicShift1D: return "dyadic-shift-1d";
    case MapFamily::Checker2D: return "checker-2d";
    case MapFamily::MapleLeaf2D: return "maple-leaf-2d";
    case MapFamily::Explicit: break;
  }
  return "explicit";
}

std::string_view to_string(WeightFamily f) noexcept {
  switch (f) {
    case WeightFamily::NegSquare: return "neg-square";
    case WeightFamily::NegGeometric: return "neg-geometric";
    case WeightFamily::Explicit: break;
  }
  return "explicit";
}

CountableSystem CountableSystem::explicit_list(std::vector<AffineMap> maps, std::vector<double> weights,
                                               bool clamp_to_domain) {
  if (maps.empty()) throw Error(ErrorCode::InvalidTruncation, "explicit system has no maps");
  if (maps.size() != weights.size()) {
    throw Error(ErrorCode::InvalidWeights, "explicit system needs one weight per map");
  }
  CountableSystem s;
  s.dimension_ = maps.front().dimension;
  s.maps_ = std::move(maps);
  s.weights_ = std::move(weights);
  s.clamp_ = clamp_to_domain;
  s.validate();
  return s;
}

CountableSystem CountableSystem::builtin(MapFamily maps, WeightFamily weights) {
  if (maps == MapFamily::Explicit || weights == WeightFamily::Explicit) {
    throw Error(ErrorCode::UnknownFamily, "explicit lists need explicit_list()");
  }
  CountableSystem s;
  s.map_family_ = maps;
  s.weight_family_ = weights;
  s.dimension_ = maps == MapFamily::DyadicShift1D ? 1 : 2;
  s.clamp_ = maps == MapFamily::MapleLeaf2D;
  s.validate();
  return s;
}

CountableSystem CountableSystem::builtin(MapFamily maps, std::vector<double> weights) {
  if (maps == MapFamily::Explicit) throw Error(ErrorCode::UnknownFamily, "explicit lists need explicit_list()");
  if (weights.empty()) throw Error(ErrorCode::InvalidWeights, "empty weight list");
  CountableSystem s;
  s.map_family_ = maps;
  s.weights_ = std::move(weights);
  s.dimension_ = maps == MapFamily::DyadicShift1D ? 1 : 2;
  s.clamp_ = maps == MapFamily::MapleLeaf2D;
  s.validate();
  return s;
}

void CountableSystem::validate() {
  for (const AffineMap& m : maps_) {
    if (m.dimension != dimension_) throw Error(ErrorCode::ShapeMismatch, "maps of mixed dimension");
  }
  if (weight_family_ == WeightFamily::Explicit) {
    for (double q : weights_) {
      if (std::isnan(q) || q > 0.0) throw Error(ErrorCode::InvalidWeights, "weights must lie in [-inf, 0]");
    }
    if (*std::max_element(weights_.begin(), weights_.end()) != 0.0) {
      throw Error(ErrorCode::InvalidWeights, "explicit weight list must have maximum 0");
    }
  }
  gamma_ = contraction_rate(*this);
}

std::optional<std::size_t> CountableSystem::max_order() const noexcept {
  std::optional<std::size_t> bound;
  if (map_family_ == MapFamily::Explicit) bound = maps_.size();
  if (weight_family_ == WeightFamily::Explicit) {
    bound = bound ? std::min(*bound, weights_.size()) : weights_.size();
  }
  return bound;
}

AffineMap CountableSystem::map(std::size_t j) const {
  if (j < 1) throw Error(ErrorCode::InvalidTruncation, "map indices start at 1");
  switch (map_family_) {
    case MapFamily::DyadicShift1D: return dyadic_shift(j);
    case MapFamily::Checker2D: return checker(j);
    case MapFamily::MapleLeaf2D: return maple_leaf(j);
    case MapFamily::Explicit: break;
  }
  if (j > maps_.size()) throw Error(ErrorCode::InvalidTruncation, "map index beyond explicit list");
  return maps_[j - 1];
}

double CountableSystem::weight(std::size_t j) const {
  if (j < 1) throw Error(ErrorCode::InvalidTruncation, "weight indices start at 1");
  switch (weight_family_) {
    case WeightFamily::NegSquare: {
      const double k = static_cast<double>(j - 1);
      return 0.0 - k * k;
    }
    case WeightFamily::NegGeometric: return -std::ldexp(1.0, -static_cast<int>(j));
    case WeightFamily::Explicit: break;
  }
  if (j > weights_.size()) throw Error(ErrorCode::InvalidTruncation, "weight index beyond explicit list");
  return weights_[j - 1];
}

CountableSystem builtin_family(std::string_view map_family, std::string_view weight_family) {
  const auto maps = parse_map_family(map_family);
  if (!maps) throw Error(ErrorCode::UnknownFamily, "unknown map family '" + std::string(map_family) + "'");
  const auto weights = parse_weight_family(weight_family);
  if (!weights) throw Error(ErrorCode::UnknownFamily, "unknown weight family '" + std::string(weight_family) + "'");
  return CountableSystem::builtin(*maps, *weights);
}

CountableSystem builtin_family(std::string_view map_family, std::vector<double> weights) {
  const auto maps = parse_map_family(map_family);
  if (!maps) throw Error(ErrorCode::UnknownFamily, "unknown map family '" + std::string(map_family) + "'");
  return CountableSystem::builtin(*maps, std::move(weights));
}

double contraction_rate(std::span<const AffineMap> maps) {
  double gamma = 0.0;
  for (const AffineMap& m : maps) {
    const double lip = m.lipschitz();
    if (!(lip < 1.0)) throw Error(ErrorCode::NotContractive, "map with Lipschitz constant " + std::to_string(lip));
    gamma = std::max(gamma, lip);
  }
  return gamma;
}

double contraction_rate(const CountableSystem& system) {
  const std::size_t count = system.map_family() == MapFamily::Explicit
                                ? *system.max_order()
                                : kLipschitzProbe;
  std::vector<AffineMap> maps;
  maps.reserve(count);
  for (std::size_t j = 1; j <= count; ++j) maps.push_back(system.map(j));
  return contraction_rate(maps);
}

PartialSystem PartialSystem::from_lists(std::vector<AffineMap> maps, std::vector<ExtendedReal> raw_weights,
                                        bool clamp_to_domain) {
  if (maps.empty()) throw Error(ErrorCode::InvalidTruncation, "partial system needs at least one map");
  if (maps.size() != raw_weights.size()) throw Error(ErrorCode::InvalidWeights, "one weight per map required");
  PartialSystem s;
  s.n = maps.size();
  s.dimension = maps.front().dimension;
  s.clamp_to_domain = clamp_to_domain;
  s.alpha = kBottom;
  for (ExtendedReal q : raw_weights) {
    if (std::isnan(q) || q > 0.0) throw Error(ErrorCode::InvalidWeights, "weights must lie in [-inf, 0]");
    s.alpha = oplus(s.alpha, q);
  }
  if (is_bottom(s.alpha)) throw Error(ErrorCode::InvalidWeights, "no finite weight among the first n");
  s.weights.reserve(raw_weights.size());
  for (ExtendedReal q : raw_weights) s.weights.push_back(is_bottom(q) ? kBottom : q - s.alpha);
  s.maps = std::move(maps);
  s.raw_weights = std::move(raw_weights);
  return s;
}

PartialSystem build_partial(const CountableSystem& system, std::size_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidTruncation, "truncation order must be >= 1");
  if (const auto bound = system.max_order(); bound && n > *bound) {
    throw Error(ErrorCode::InvalidTruncation,
                "truncation order " + std::to_string(n) + " exceeds explicit list length " + std::to_string(*bound));
  }
  std::vector<AffineMap> maps;
  std::vector<ExtendedReal> weights;
  maps.reserve(n);
  weights.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) {
    maps.push_back(system.map(j));
    weights.push_back(system.weight(j));
  }
  return PartialSystem::from_lists(std::move(maps), std::move(weights), system.clamp_to_domain());
}

double resolution_delta(double gamma, double epsilon) {
  if (!(gamma < 1.0)) throw Error(ErrorCode::NotContractive, "gamma must be < 1");
  if (gamma < 0.0) throw Error(ErrorCode::InvalidScale, "gamma must be >= 0");
  if (!(epsilon > 0.0)) throw Error(ErrorCode::InvalidScale, "epsilon must be > 0");
  return 2.0 * epsilon / (1.0 - gamma);
}

}  // namespace idemfract
