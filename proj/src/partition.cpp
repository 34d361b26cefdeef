#include "sspart/partition.hpp"

#include <algorithm>

#include "sspart/error.hpp"

namespace sspart {

Partition Partition::from_cells(std::size_t dim, std::vector<Cell> cells) {
  if (dim == 0) {
    throw Error(ErrorKind::invalid_argument, "dimension must be positive");
  }
  for (const Cell& c : cells) {
    if (c.dim() != dim) {
      throw Error(ErrorKind::dimension_mismatch,
                  "cell " + to_string(c) + " has length " +
                      std::to_string(c.dim()) + ", expected " +
                      std::to_string(dim));
    }
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

  for (const Cell& c : cells) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (c[j] == 0) continue;
      Cell pred = c;
      --pred[j];
      if (!std::binary_search(cells.begin(), cells.end(), pred)) {
        throw Error(ErrorKind::closure_violation,
                    "cell " + to_string(c) + " is missing its predecessor " +
                        to_string(pred) + " along axis " +
                        std::to_string(j + 1));
      }
    }
  }
  return Partition(dim, std::move(cells));
}

Partition Partition::empty(std::size_t dim) { return from_cells(dim, {}); }

bool Partition::contains(const Cell& c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

Partition validate_partition(std::size_t dim, std::vector<Cell> cells) {
  return Partition::from_cells(dim, std::move(cells));
}

HookVector hook_vector(const Partition& p, const Cell& alpha) {
  if (alpha.dim() != p.dim()) {
    throw Error(ErrorKind::dimension_mismatch,
                "cell " + to_string(alpha) + " in a partition of dimension " +
                    std::to_string(p.dim()));
  }
  if (!p.contains(alpha)) {
    throw Error(ErrorKind::cell_not_in_partition, to_string(alpha));
  }
  HookVector h{std::vector<exponent_t>(p.dim(), 0)};
  for (std::size_t j = 0; j < p.dim(); ++j) {
    Cell probe = alpha;
    for (;;) {
      ++probe[j];
      if (!p.contains(probe)) break;
      ++h.arms[j];
    }
  }
  return h;
}

bool is_strongly_stable_partition(const Partition& p) {
  return std::all_of(p.cells().begin(), p.cells().end(), [&](const Cell& c) {
    auto h = hook_vector(p, c);
    return std::is_sorted(h.arms.begin(), h.arms.end());
  });
}

bool is_totally_symmetric_partition(const Partition& p) {
  for (const Cell& c : p.cells()) {
    for (std::size_t j = 0; j + 1 < p.dim(); ++j) {
      if (c[j] == c[j + 1]) continue;
      Cell swapped = c;
      std::swap(swapped[j], swapped[j + 1]);
      if (!p.contains(swapped)) return false;
    }
  }
  return true;
}

exponent_t bounding_side(const Partition& p) {
  exponent_t side = 0;
  for (const Cell& c : p.cells()) side = std::max(side, c.max_coord() + 1);
  return side;
}

std::size_t orbit_count(const Partition& p) {
  std::vector<Cell> reps;
  reps.reserve(p.size());
  for (const Cell& c : p.cells()) reps.push_back(c.sorted());
  std::sort(reps.begin(), reps.end());
  return static_cast<std::size_t>(
      std::unique(reps.begin(), reps.end()) - reps.begin());
}

}  // namespace sspart
