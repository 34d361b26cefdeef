#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sspart/exponent_vector.hpp"

namespace sspart {

/// A finite downward-closed subset of N^d.
///
/// Cells are kept deduplicated and in lexicographic order, so two partitions
/// compare equal iff they have the same dimension and the same cells. The
/// dimension is carried explicitly, including for the empty partition.
class Partition {
public:
  /// Validates and canonicalizes. Throws dimension_mismatch if a cell has the
  /// wrong length and closure_violation naming the first cell whose
  /// predecessor along some axis is missing.
  static Partition from_cells(std::size_t dim, std::vector<Cell> cells);

  static Partition empty(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return cells_.size(); }
  bool is_empty() const noexcept { return cells_.empty(); }
  std::span<const Cell> cells() const noexcept { return cells_; }

  bool contains(const Cell& c) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  Partition(std::size_t dim, std::vector<Cell> cells)
      : dim_(dim), cells_(std::move(cells)) {}

  std::size_t dim_ = 1;
  std::vector<Cell> cells_;
};

/// Per-axis arm lengths of a cell: arms[j] is the largest h with
/// alpha + h*e_j in P.
struct HookVector {
  std::vector<exponent_t> arms;

  friend bool operator==(const HookVector&, const HookVector&) = default;
};

Partition validate_partition(std::size_t dim, std::vector<Cell> cells);

HookVector hook_vector(const Partition& p, const Cell& alpha);

/// Every cell's hook vector is weakly increasing.
bool is_strongly_stable_partition(const Partition& p);

/// Closed under coordinate permutations. Checks the d-1 adjacent
/// transpositions, which generate S_d.
bool is_totally_symmetric_partition(const Partition& p);

/// 0 for the empty partition, else 1 + the largest coordinate of any cell.
exponent_t bounding_side(const Partition& p);

/// Number of S_d-orbits of cells.
std::size_t orbit_count(const Partition& p);

}  // namespace sspart
