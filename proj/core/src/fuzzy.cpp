#include "idemfract/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "idemfract/error.hpp"

namespace idemfract {

FuzzyField fuzzify(const DiscreteDensity& density) {
  FuzzyField field{density.shape(), {}};
  field.values.reserve(density.size());
  for (ExtendedReal v : density.values()) field.values.push_back(std::exp(v));
  return field;
}

std::vector<std::size_t> superlevel_set(std::span<const double> values, double beta) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= beta) out.push_back(i);
  }
  return out;
}

namespace {

double directed(const std::vector<Point>& from, const std::vector<Point>& to) {
  double worst = 0.0;
  for (const Point& p : from) {
    double best = std::numeric_limits<double>::infinity();
    for (const Point& q : to) {
      const double dx = p[0] - q[0], dy = p[1] - q[1];
      best = std::min(best, dx * dx + dy * dy);
      if (best <= worst) break;  // p cannot raise the maximum
    }
    worst = std::max(worst, best);
  }
  return worst;
}

std::vector<Point> coordinates(const std::vector<std::size_t>& idx, const UniformGrid& grid) {
  std::vector<Point> pts;
  pts.reserve(idx.size());
  for (std::size_t i : idx) pts.push_back(grid.value(i));
  return pts;
}

}  // namespace

double hausdorff_distance(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                          const UniformGrid& grid) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::EmptySupport, "Hausdorff distance of an empty set");
  const auto pa = coordinates(a, grid);
  const auto pb = coordinates(b, grid);
  return std::sqrt(std::max(directed(pa, pb), directed(pb, pa)));
}

double discrete_dtheta(const DiscreteDensity& a, const DiscreteDensity& b, const UniformGrid& grid) {
  if (!(a.shape() == grid.shape()) || !(b.shape() == grid.shape())) {
    throw Error(ErrorCode::ShapeMismatch, "densities must live on the given grid");
  }
  if (a.support_size() == 0 || b.support_size() == 0) {
    throw Error(ErrorCode::EmptySupport, "d_theta needs non-empty supports");
  }
  std::vector<double> levels;
  for (const auto* d : {&a, &b}) {
    for (ExtendedReal v : d->values()) {
      if (!is_bottom(v)) levels.push_back(v);
    }
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  const double diameter = grid.dimension() == 1 ? 1.0 : std::sqrt(2.0);
  double result = 0.0;
  for (double beta : levels) {
    const auto sa = superlevel_set(a.values(), beta);
    const auto sb = superlevel_set(b.values(), beta);
    if (sa.empty() && sb.empty()) continue;
    const double h = (sa.empty() || sb.empty()) ? diameter : hausdorff_distance(sa, sb, grid);
    result = std::max(result, h);
  }
  return result;
}

}  // namespace idemfract
