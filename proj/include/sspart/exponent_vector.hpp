#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sspart {

using exponent_t = std::uint32_t;

// A point of N^d. Serves both as a partition cell and as the multi-exponent
// of a monomial x_1^a_1 * ... * x_d^a_d. Axes are 0-based.
class ExponentVector {
public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t dim) : coords_(dim, 0) {}
  explicit ExponentVector(std::vector<exponent_t> coords)
      : coords_(std::move(coords)) {}
  ExponentVector(std::initializer_list<exponent_t> coords) : coords_(coords) {}

  static ExponentVector unit(std::size_t dim, std::size_t axis,
                             exponent_t power = 1) {
    ExponentVector v(dim);
    v.coords_[axis] = power;
    return v;
  }

  std::size_t dim() const noexcept { return coords_.size(); }
  exponent_t operator[](std::size_t i) const { return coords_[i]; }
  exponent_t& operator[](std::size_t i) { return coords_[i]; }
  std::span<const exponent_t> coords() const noexcept { return coords_; }

  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }
  auto begin() noexcept { return coords_.begin(); }
  auto end() noexcept { return coords_.end(); }

  std::uint64_t degree() const noexcept;
  exponent_t max_coord() const noexcept;
  bool is_zero() const noexcept;
  bool is_weakly_increasing() const noexcept;

  /// Index of the only nonzero coordinate, or -1 if there is not exactly one.
  int pure_power_axis() const noexcept;

  /// Coordinates sorted ascending: the canonical representative of the
  /// orbit under coordinate permutation.
  ExponentVector sorted() const;

  friend auto operator<=>(const ExponentVector&,
                          const ExponentVector&) = default;
  friend bool operator==(const ExponentVector&,
                         const ExponentVector&) = default;

private:
  std::vector<exponent_t> coords_;
};

using Cell = ExponentVector;
using Monomial = ExponentVector;

std::string to_string(const ExponentVector& v);

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& v) const noexcept;
};

}  // namespace sspart
