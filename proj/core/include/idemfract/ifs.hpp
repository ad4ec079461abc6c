#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idemfract/maxplus.hpp"

namespace idemfract {

using Point = std::array<double, 2>;

/// x -> A x + b on [0,1] or [0,1]^2. In 1D only linear[0][0] and offset[0]
/// are used.
struct AffineMap {
  int dimension = 1;
  std::array<std::array<double, 2>, 2> linear{};
  Point offset{};

  static AffineMap line(double slope, double intercept);
  static AffineMap plane(double a11, double a12, double a21, double a22, double b1, double b2);

  Point operator()(const Point& x) const noexcept;

  /// |a| in 1D, spectral norm of A in 2D.
  double lipschitz() const noexcept;

  /// Checks the images of the corners of [0,1]^d against [-tol, 1+tol]^d.
  bool maps_unit_cube_into_itself(double tol = 1e-9) const noexcept;
};

enum class MapFamily { Explicit, DyadicShift1D, Checker2D, MapleLeaf2D };
enum class WeightFamily { Explicit, NegSquare, NegGeometric };

std::optional<MapFamily> parse_map_family(std::string_view name) noexcept;
std::optional<WeightFamily> parse_weight_family(std::string_view name) noexcept;
std::string_view to_string(MapFamily f) noexcept;
std::string_view to_string(WeightFamily f) noexcept;

/// Countable max-plus IFS: maps phi_j and constant weights q_j <= 0 for
/// j = 1, 2, ... Named families generate every index; explicit lists are
/// finite and stop at their length.
class CountableSystem {
 public:
  /// Finite system from explicit lists. Weights must be <= 0 with maximum 0.
  static CountableSystem explicit_list(std::vector<AffineMap> maps, std::vector<double> weights,
                                       bool clamp_to_domain = false);
  static CountableSystem builtin(MapFamily maps, WeightFamily weights);
  static CountableSystem builtin(MapFamily maps, std::vector<double> weights);

  int dimension() const noexcept { return dimension_; }
  MapFamily map_family() const noexcept { return map_family_; }
  WeightFamily weight_family() const noexcept { return weight_family_; }

  /// Map images that leave the unit cube are projected back onto it when
  /// discretizing. Only the maple-leaf family needs this.
  bool clamp_to_domain() const noexcept { return clamp_; }

  /// Largest admissible truncation order, if the family is finite.
  std::optional<std::size_t> max_order() const noexcept;

  AffineMap map(std::size_t j) const;  // 1-based
  double weight(std::size_t j) const;  // 1-based

  /// Uniform contraction rate sup_j Lip(phi_j), computed at construction.
  double gamma() const noexcept { return gamma_; }

 private:
  CountableSystem() = default;
  void validate();

  int dimension_ = 1;
  MapFamily map_family_ = MapFamily::Explicit;
  WeightFamily weight_family_ = WeightFamily::Explicit;
  std::vector<AffineMap> maps_;
  std::vector<double> weights_;
  bool clamp_ = false;
  double gamma_ = 0.0;
};

/// Builds a named system; throws Error(UnknownFamily) for unknown names.
CountableSystem builtin_family(std::string_view map_family, std::string_view weight_family);
CountableSystem builtin_family(std::string_view map_family, std::vector<double> weights);

/// sup_j Lip(phi_j). Throws Error(NotContractive) when some map has Lip >= 1.
double contraction_rate(const CountableSystem& system);
double contraction_rate(std::span<const AffineMap> maps);

/// Finite normalized truncation S_n: maps 1..n with weights q_j - alpha_n,
/// alpha_n = max_{j<=n} q_j.
struct PartialSystem {
  std::size_t n = 0;
  int dimension = 1;
  bool clamp_to_domain = false;
  std::vector<AffineMap> maps;
  std::vector<ExtendedReal> raw_weights;
  ExtendedReal alpha = kBottom;
  std::vector<ExtendedReal> weights;

  /// Builds a partial system directly from finite lists, normalizing the
  /// weights by their maximum.
  static PartialSystem from_lists(std::vector<AffineMap> maps, std::vector<ExtendedReal> raw_weights,
                                  bool clamp_to_domain = false);
};

PartialSystem build_partial(const CountableSystem& system, std::size_t n);

/// Grid resolution 2 eps / (1 - gamma) of the discretized attractor.
double resolution_delta(double gamma, double epsilon);

}  // namespace idemfract
