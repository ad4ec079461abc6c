#pragma once

#include <iosfwd>
#include <string>

#include "idemfract/fuzzy.hpp"
#include "idemfract/grid.hpp"
#include "idemfract/higuchi.hpp"
#include "idemfract/maxplus.hpp"

namespace idemfract {

/// Shortest round-trip text for a value: "-inf" for bottom, otherwise 17
/// significant digits.
std::string format_real(double value);
double parse_real(std::string_view text);

/// Columns `index,x,lambda,u` (1D) or `i,j,x1,x2,lambda,u` (2D), one row per
/// grid point in flat-index order.
void write_density_csv(std::ostream& out, const DiscreteDensity& density, const UniformGrid& grid);
/// Columns `index,x,u` (1D) or `i,j,x1,x2,u` (2D).
void write_fuzzy_csv(std::ostream& out, const FuzzyField& field, const UniformGrid& grid);

/// Reads a density CSV written by write_density_csv. The grid is recovered
/// from the row count.
struct LoadedDensity {
  UniformGrid grid;
  DiscreteDensity density;
};
LoadedDensity read_density_csv(std::istream& in);

/// Grey image with pixel = round(255 u). The top row is x2 = 1 so the image
/// appears upright.
void write_pgm(std::ostream& out, const FuzzyField& field, bool binary = false);

/// Reads P2 or P5 images as a surface of pixel/maxval values, rows in file
/// order. Non-square images are rejected.
Series2D read_pgm(std::istream& in);

/// Series for HFD: a PGM image, a CSV with a `u` column (2D when it also has
/// `i,j` columns), or one number per line.
struct LoadedSeries {
  int dimension = 1;
  std::vector<double> series;
  Series2D surface;
};
LoadedSeries read_series_file(const std::string& path);

/// Rows `k,measure,abscissa,ordinate,used,cumulative_dimension` preceded by
/// a `# dimension=...` line.
void write_fit_csv(std::ostream& out, const HiguchiResult& result, bool surface);

}  // namespace idemfract
