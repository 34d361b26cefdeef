#include "sspart/exponent_vector.hpp"

#include <algorithm>
#include <numeric>

namespace sspart {

std::uint64_t ExponentVector::degree() const noexcept {
  return std::accumulate(coords_.begin(), coords_.end(), std::uint64_t{0});
}

exponent_t ExponentVector::max_coord() const noexcept {
  return coords_.empty() ? 0 : *std::max_element(coords_.begin(), coords_.end());
}

bool ExponentVector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](exponent_t a) { return a == 0; });
}

bool ExponentVector::is_weakly_increasing() const noexcept {
  return std::is_sorted(coords_.begin(), coords_.end());
}

int ExponentVector::pure_power_axis() const noexcept {
  int axis = -1;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    if (axis >= 0) return -1;
    axis = static_cast<int>(i);
  }
  return axis;
}

ExponentVector ExponentVector::sorted() const {
  ExponentVector out = *this;
  std::sort(out.coords_.begin(), out.coords_.end());
  return out;
}

std::string to_string(const ExponentVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::size_t ExponentVectorHash::operator()(
    const ExponentVector& v) const noexcept {
  // FNV-1a over the coordinates
  std::size_t h = 1469598103934665603ULL;
  for (exponent_t a : v) {
    h ^= a;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace sspart
