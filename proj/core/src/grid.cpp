#include "idemfract/grid.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "idemfract/error.hpp"

namespace idemfract {

UniformGrid::UniformGrid(int dimension, std::size_t subdivisions) : dimension_(dimension), m_(subdivisions) {
  if (dimension != 1 && dimension != 2) throw Error(ErrorCode::ShapeMismatch, "grid dimension must be 1 or 2");
  if (subdivisions < 2) throw Error(ErrorCode::InvalidScale, "grid needs M >= 2");
  if (shape().size() > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::InvalidScale, "grid too large");
  }
}

Point UniformGrid::value(std::size_t index) const noexcept {
  const double m = static_cast<double>(m_);
  if (dimension_ == 1) return {static_cast<double>(index) / m, 0.0};
  const std::size_t s = side();
  return {static_cast<double>(index % s) / m, static_cast<double>(index / s) / m};
}

std::size_t UniformGrid::project_axis(double coordinate, bool clamp) const {
  if (std::isnan(coordinate)) throw Error(ErrorCode::OutOfDomain, "coordinate is NaN");
  if (coordinate < 0.0 || coordinate > 1.0) {
    const bool near = coordinate >= -kDomainTolerance && coordinate <= 1.0 + kDomainTolerance;
    if (!near && !clamp) {
      throw Error(ErrorCode::OutOfDomain, "coordinate " + std::to_string(coordinate) + " outside [0,1]");
    }
    coordinate = coordinate < 0.0 ? 0.0 : 1.0;
  }
  return static_cast<std::size_t>(std::floor(coordinate * static_cast<double>(m_) + 0.5));
}

std::size_t UniformGrid::project(const Point& x, bool clamp) const {
  const std::size_t i1 = project_axis(x[0], clamp);
  if (dimension_ == 1) return i1;
  return project_axis(x[1], clamp) * side() + i1;
}

MapTable discretize_map(const AffineMap& map, const UniformGrid& grid, bool clamp) {
  if (map.dimension != grid.dimension()) throw Error(ErrorCode::ShapeMismatch, "map and grid dimension differ");
  MapTable table(grid.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    table[i] = static_cast<std::uint32_t>(grid.project(map(grid.value(i)), clamp));
  }
  return table;
}

}  // namespace idemfract
