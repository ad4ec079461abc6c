#include "idemfract/higuchi.hpp"

#include <cmath>
#include <set>
#include <string>

#include "idemfract/error.hpp"

namespace idemfract {

namespace {

void check_finite(std::span<const double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteInput, "series contains a non-finite value");
  }
}

void check_scale(std::size_t n, std::size_t k_max) {
  if (n < 2) throw Error(ErrorCode::InvalidScale, "series needs at least 2 samples");
  const std::size_t limit = (n + 1) / 2;
  if (k_max < 2 || k_max > limit) {
    throw Error(ErrorCode::InvalidScale,
                "k_max=" + std::to_string(k_max) + " outside [2, " + std::to_string(limit) + "]");
  }
}

HiguchiResult fit_measure(std::vector<double> measure, bool surface) {
  HiguchiResult out;
  std::vector<std::pair<double, double>> pts;
  std::vector<std::size_t> used;
  for (std::size_t i = 0; i < measure.size(); ++i) {
    if (measure[i] == 0.0) continue;
    const double k = static_cast<double>(i + 1);
    pts.emplace_back(std::log(1.0 / (surface ? k * k : k)), std::log(measure[i]));
    used.push_back(i + 1);
  }
  if (pts.size() < 2) {
    out.fit.points = std::move(pts);
    out.fit.used_k = std::move(used);
    out.fit.degenerate = true;
    out.dimension = surface ? 2.0 : 1.0;
  } else {
    out.fit = least_squares_fit(pts);
    out.fit.used_k = std::move(used);
    out.dimension = surface ? 1.0 + out.fit.slope : out.fit.slope;
  }
  out.measure = std::move(measure);
  return out;
}

}  // namespace

FitResult least_squares_fit(std::span<const std::pair<double, double>> points) {
  std::set<double> distinct;
  for (const auto& p : points) distinct.insert(p.first);
  if (distinct.size() < 2) throw Error(ErrorCode::DegenerateFit, "need two distinct abscissae");

  const double count = static_cast<double>(points.size());
  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : points) {
    mx += x;
    my += y;
  }
  mx /= count;
  my /= count;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [x, y] : points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  FitResult fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.points.assign(points.begin(), points.end());
  return fit;
}

std::vector<double> curve_lengths_1d(std::span<const double> series, std::size_t k_max) {
  const std::size_t n = series.size();
  check_scale(n, k_max);
  check_finite(series);
  const double span = static_cast<double>(n - 1);
  std::vector<double> lengths(k_max, 0.0);
  for (std::size_t k = 1; k <= k_max; ++k) {
    const double kd = static_cast<double>(k);
    double total = 0.0;
    for (std::size_t m = 1; m <= k; ++m) {
      const std::size_t steps = (n - m) / k;
      if (steps == 0) continue;
      double v = 0.0;
      for (std::size_t i = 1; i <= steps; ++i) {
        v += std::abs(series[m - 1 + i * k] - series[m - 1 + (i - 1) * k]);
      }
      total += v * span / (static_cast<double>(steps) * kd) / kd;
    }
    lengths[k - 1] = total / kd;
  }
  return lengths;
}

std::vector<double> surface_areas_2d(const Series2D& surface, std::size_t k_max) {
  const std::size_t n = surface.side;
  if (surface.values.size() != n * n) throw Error(ErrorCode::ShapeMismatch, "surface is not square");
  check_scale(n, k_max);
  check_finite(surface.values);
  const double span = static_cast<double>(n - 1);
  std::vector<double> areas(k_max, 0.0);
  for (std::size_t k = 1; k <= k_max; ++k) {
    const double kd = static_cast<double>(k);
    double total = 0.0;
    for (std::size_t r0 = 0; r0 < k; ++r0) {
      const std::size_t rows = (n - 1 - r0) / k;
      if (rows == 0) continue;
      for (std::size_t c0 = 0; c0 < k; ++c0) {
        const std::size_t cols = (n - 1 - c0) / k;
        if (cols == 0) continue;
        double v = 0.0;
        for (std::size_t i = 1; i <= rows; ++i) {
          const std::size_t lo = r0 + (i - 1) * k, hi = r0 + i * k;
          for (std::size_t j = 1; j <= cols; ++j) {
            const std::size_t left = c0 + (j - 1) * k, right = c0 + j * k;
            const double p00 = surface.at(lo, left), p01 = surface.at(lo, right);
            const double p10 = surface.at(hi, left), p11 = surface.at(hi, right);
            v += std::abs(p01 - p00) + std::abs(p11 - p01) + std::abs(p11 - p10) + std::abs(p10 - p00);
          }
        }
        const double norm = span * span / (static_cast<double>(rows) * kd * static_cast<double>(cols) * kd);
        total += v * norm / kd;
      }
    }
    areas[k - 1] = total / (2.0 * kd * kd);
  }
  return areas;
}

HiguchiResult higuchi_1d(std::span<const double> series, std::size_t k_max) {
  return fit_measure(curve_lengths_1d(series, k_max), false);
}

double hfd_1d(std::span<const double> series, std::size_t k_max) { return higuchi_1d(series, k_max).dimension; }

HiguchiResult higuchi_2d(const Series2D& surface, std::size_t k_max) {
  return fit_measure(surface_areas_2d(surface, k_max), true);
}

double hfd_2d(const Series2D& surface, std::size_t k_max) { return higuchi_2d(surface, k_max).dimension; }

std::vector<double> cumulative_dimensions(std::span<const double> measure, bool surface) {
  std::vector<double> out;
  out.reserve(measure.size());
  for (std::size_t k = 1; k <= measure.size(); ++k) {
    out.push_back(fit_measure({measure.begin(), measure.begin() + static_cast<std::ptrdiff_t>(k)}, surface).dimension);
  }
  return out;
}

}  // namespace idemfract
