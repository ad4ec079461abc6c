#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "idemfract/grid.hpp"
#include "idemfract/maxplus.hpp"

namespace idemfract {

/// Grey levels u = exp(lambda) in [0, 1] on the density's grid.
struct FuzzyField {
  GridShape shape;
  std::vector<double> values;
};

FuzzyField fuzzify(const DiscreteDensity& density);

/// Indices whose value is >= beta. Works in either scale.
std::vector<std::size_t> superlevel_set(std::span<const double> values, double beta);

/// Euclidean Hausdorff distance between two non-empty sets of grid indices.
double hausdorff_distance(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                          const UniformGrid& grid);

/// Discrete d_theta: max over thresholds beta drawn from the finite values of
/// both densities of the Hausdorff distance between their superlevel sets.
/// A level where exactly one set is empty contributes the grid diameter.
double discrete_dtheta(const DiscreteDensity& a, const DiscreteDensity& b, const UniformGrid& grid);

}  // namespace idemfract
