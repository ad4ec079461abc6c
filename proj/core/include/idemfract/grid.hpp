#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "idemfract/ifs.hpp"
#include "idemfract/maxplus.hpp"

namespace idemfract {

// Coordinates outside [0,1] by at most this much are snapped onto the cube.
inline constexpr double kDomainTolerance = 1e-9;

/// Uniform net {i/M : 0 <= i <= M} on [0,1]^d, d in {1, 2}.
class UniformGrid {
 public:
  UniformGrid(int dimension, std::size_t subdivisions);

  int dimension() const noexcept { return dimension_; }
  std::size_t subdivisions() const noexcept { return m_; }
  std::size_t side() const noexcept { return m_ + 1; }
  std::size_t size() const noexcept { return shape().size(); }
  GridShape shape() const noexcept { return {dimension_, m_ + 1}; }

  /// Mesh radius 1/(2M) in the max metric.
  double epsilon() const noexcept { return 0.5 / static_cast<double>(m_); }

  Point value(std::size_t index) const noexcept;

  /// Nearest grid point per axis, ties rounded toward the larger index.
  /// Throws Error(OutOfDomain) when a coordinate leaves [0,1] by more than
  /// kDomainTolerance, unless `clamp` is set.
  std::size_t project(const Point& x, bool clamp = false) const;
  std::size_t project_axis(double coordinate, bool clamp = false) const;

 private:
  int dimension_;
  std::size_t m_;
};

/// phi_hat = r o phi tabulated over every grid index.
using MapTable = std::vector<std::uint32_t>;

MapTable discretize_map(const AffineMap& map, const UniformGrid& grid, bool clamp = false);

}  // namespace idemfract
