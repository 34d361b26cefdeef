#include "sspart/correspondence.hpp"

#include "sspart/error.hpp"

namespace sspart {

namespace {

// Calls visit on every vector of {0..side-1}^dim in lexicographic order.
template <class Visit>
void for_each_in_box(std::size_t dim, exponent_t side, Visit&& visit) {
  if (side == 0) return;
  ExponentVector v(dim);
  for (;;) {
    visit(static_cast<const ExponentVector&>(v));
    std::size_t j = dim;
    while (j > 0) {
      --j;
      if (++v[j] < side) break;
      v[j] = 0;
      if (j == 0) return;
    }
  }
}

}  // namespace

Partition ideal_to_partition(const MonomialIdeal& ideal) {
  auto side = artinian_side(ideal);
  if (!side) {
    throw Error(ErrorKind::not_artinian,
                "ideal has no pure power of some variable");
  }
  // Every cell coordinate is below the largest pure power degree.
  std::vector<Cell> cells;
  for_each_in_box(ideal.dim(), *side, [&](const ExponentVector& v) {
    if (!contains(ideal, v)) cells.push_back(v);
  });
  return Partition::from_cells(ideal.dim(), std::move(cells));
}

MonomialIdeal partition_to_ideal(const Partition& p) {
  // Minimal generators are the vectors just outside P; none has a coordinate
  // beyond the bounding side, so the box {0..side}^d is exhaustive.
  const exponent_t side = bounding_side(p);
  std::vector<Monomial> gens;
  for_each_in_box(p.dim(), side + 1, [&](const ExponentVector& v) {
    if (p.contains(v)) return;
    for (std::size_t j = 0; j < v.dim(); ++j) {
      if (v[j] == 0) continue;
      ExponentVector pred = v;
      --pred[j];
      if (!p.contains(pred)) return;
    }
    gens.push_back(v);
  });
  return MonomialIdeal(p.dim(), std::move(gens));
}

}  // namespace sspart
