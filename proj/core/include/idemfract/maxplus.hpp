#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace idemfract {

// Max-plus scalar. The bottom element is the IEEE negative infinity, so the
// absorption laws hold natively under max and +.
using ExtendedReal = double;

inline constexpr ExtendedReal kBottom = -std::numeric_limits<double>::infinity();
inline constexpr ExtendedReal kUnit = 0.0;

constexpr ExtendedReal oplus(ExtendedReal a, ExtendedReal b) noexcept { return a < b ? b : a; }
constexpr ExtendedReal odot(ExtendedReal a, ExtendedReal b) noexcept { return a + b; }
constexpr bool is_bottom(ExtendedReal a) noexcept { return a == kBottom; }

// Shape of a square grid: `side` points per axis in `dimension` axes.
struct GridShape {
  int dimension = 1;
  std::size_t side = 0;

  std::size_t size() const noexcept { return dimension == 1 ? side : side * side; }
  friend bool operator==(const GridShape&, const GridShape&) = default;
};

/// Grid-indexed max-plus density with values in [-inf, 0].
///
/// 2D densities are stored row-major with the second coordinate as the row:
/// flat index = i2 * side + i1.
class DiscreteDensity {
 public:
  DiscreteDensity() = default;
  explicit DiscreteDensity(GridShape shape, ExtendedReal fill = kBottom);
  DiscreteDensity(GridShape shape, std::vector<ExtendedReal> values);

  const GridShape& shape() const noexcept { return shape_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const ExtendedReal> values() const noexcept { return values_; }
  std::span<ExtendedReal> values() noexcept { return values_; }
  ExtendedReal operator[](std::size_t i) const { return values_[i]; }
  ExtendedReal& operator[](std::size_t i) { return values_[i]; }

  std::size_t support_size() const noexcept;
  bool is_normalized() const noexcept;

  friend bool operator==(const DiscreteDensity&, const DiscreteDensity&) = default;

 private:
  GridShape shape_{};
  std::vector<ExtendedReal> values_;
};

ExtendedReal sup_of(std::span<const ExtendedReal> values) noexcept;
inline ExtendedReal sup_of(const DiscreteDensity& d) noexcept { return sup_of(d.values()); }

// Shifts every finite value so the maximum becomes exactly 0.
// Throws Error(EmptySupport) when every value is bottom.
DiscreteDensity renormalize(const DiscreteDensity& density);

}  // namespace idemfract
