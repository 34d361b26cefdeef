#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sspart/monomial_ideal.hpp"
#include "sspart/partition.hpp"

namespace sspart {

/// Prefix sums (a1, a1+a2, ..., a1+...+ad). Lands in the weakly increasing
/// vectors.
Monomial psi(const Monomial& m);

/// Consecutive differences; inverse of psi. Throws not_weakly_increasing.
Monomial psi_inv(const Monomial& u);

/// Borel generators computed as psi^-1(min(psi(G(I)))). Throws
/// not_strongly_stable.
std::vector<Monomial> bgens_via_psi(const MonomialIdeal& ideal);

/// An antichain of weakly increasing exponent vectors that contains
/// (0,...,0,side) and has no coordinate above side.
class FSet {
public:
  /// Throws invalid_fset describing the first violated condition.
  FSet(std::size_t dim, exponent_t side, std::vector<Monomial> elements);

  std::size_t dim() const noexcept { return dim_; }
  exponent_t side() const noexcept { return side_; }
  /// Sorted lexicographically.
  std::span<const Monomial> elements() const noexcept { return elements_; }

  friend bool operator==(const FSet&, const FSet&) = default;

private:
  std::size_t dim_;
  exponent_t side_;
  std::vector<Monomial> elements_;
};

/// I -> psi(Bgens(I)) for I strongly stable, Artinian, with x_d^n in G(I)
/// and n >= 1.
FSet lambda_map(const MonomialIdeal& ideal);

/// S -> Borel(psi^-1(S)).
MonomialIdeal lambda_inv(const FSet& s);

/// S -> ideal(sym(S)).
MonomialIdeal omega(const FSet& s);

/// I -> G(I) intersected with the weakly increasing vectors, for I symmetric,
/// Artinian, n >= 1.
FSet omega_inv(const MonomialIdeal& ideal);

/// Strongly stable partition -> totally symmetric partition with the same
/// bounding side, through the ideals: phi o Omega o Lambda o phi^-1.
/// Rejects the empty partition.
Partition ss_to_ts_partition(const Partition& p);

/// Inverse of ss_to_ts_partition.
Partition ts_to_ss_partition(const Partition& q);

}  // namespace sspart
