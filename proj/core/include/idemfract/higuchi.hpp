#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace idemfract {

/// Square N x N surface, row-major.
struct Series2D {
  std::size_t side = 0;
  std::vector<double> values;

  double at(std::size_t row, std::size_t col) const noexcept { return values[row * side + col]; }
};

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  std::vector<std::pair<double, double>> points;
  std::vector<std::size_t> used_k;
  /// Fewer than two usable scales; slope is then meaningless.
  bool degenerate = false;
};

struct HiguchiResult {
  double dimension = 0.0;
  FitResult fit;
  /// L(k) or A(k) for k = 1..k_max (index k-1).
  std::vector<double> measure;
};

/// Ordinary least squares. Throws Error(DegenerateFit) unless at least two
/// distinct abscissae are present.
FitResult least_squares_fit(std::span<const std::pair<double, double>> points);

/// Mean normalized curve length L(k), k = 1..k_max, with the classical
/// Higuchi normalization (N-1)/(floor((N-m)/k) k) and outer factor 1/k.
std::vector<double> curve_lengths_1d(std::span<const double> series, std::size_t k_max);

/// Mean surface measure A(k), k = 1..k_max, from absolute increments along
/// the four edges of every cell of each k-subsampled lattice.
std::vector<double> surface_areas_2d(const Series2D& surface, std::size_t k_max);

/// Slope of ln L(k) against ln(1/k); 1 when fewer than two scales are usable.
HiguchiResult higuchi_1d(std::span<const double> series, std::size_t k_max);
double hfd_1d(std::span<const double> series, std::size_t k_max);

/// 1 + slope of ln A(k) against ln(1/k^2); 2 when fewer than two scales are
/// usable.
HiguchiResult higuchi_2d(const Series2D& surface, std::size_t k_max);
double hfd_2d(const Series2D& surface, std::size_t k_max);

/// Dimension obtained by fitting only scales 1..K, for K = 1..measure.size().
/// `surface` selects the 2D abscissa and offset.
std::vector<double> cumulative_dimensions(std::span<const double> measure, bool surface);

}  // namespace idemfract
