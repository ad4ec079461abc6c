#include "idemfract/maxplus.hpp"

#include <algorithm>

#include "idemfract/error.hpp"

namespace idemfract {

DiscreteDensity::DiscreteDensity(GridShape shape, ExtendedReal fill)
    : shape_(shape), values_(shape.size(), fill) {}

DiscreteDensity::DiscreteDensity(GridShape shape, std::vector<ExtendedReal> values)
    : shape_(shape), values_(std::move(values)) {
  if (values_.size() != shape_.size()) {
    throw Error(ErrorCode::ShapeMismatch, "value count does not match grid shape");
  }
}

std::size_t DiscreteDensity::support_size() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(values_.begin(), values_.end(), [](ExtendedReal v) { return !is_bottom(v); }));
}

bool DiscreteDensity::is_normalized() const noexcept {
  return !values_.empty() && sup_of(values_) == 0.0 &&
         std::all_of(values_.begin(), values_.end(), [](ExtendedReal v) { return v <= 0.0; });
}

ExtendedReal sup_of(std::span<const ExtendedReal> values) noexcept {
  ExtendedReal acc = kBottom;
  for (ExtendedReal v : values) acc = oplus(acc, v);
  return acc;
}

DiscreteDensity renormalize(const DiscreteDensity& density) {
  const ExtendedReal top = sup_of(density);
  if (is_bottom(top)) throw Error(ErrorCode::EmptySupport, "cannot renormalize an all-bottom density");
  DiscreteDensity out = density;
  if (top == 0.0) return out;
  for (ExtendedReal& v : out.values()) {
    if (!is_bottom(v)) v -= top;
  }
  return out;
}

}  // namespace idemfract
