#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sspart/exponent_vector.hpp"

namespace sspart {

/// A monomial ideal in K[x_1, ..., x_d], held as its unique minimal
/// generating set G(I), sorted lexicographically by exponent vector.
/// Construction minimalizes, so equality is structural.
class MonomialIdeal {
public:
  MonomialIdeal(std::size_t dim, std::vector<Monomial> gens);

  static MonomialIdeal zero(std::size_t dim) { return {dim, {}}; }
  static MonomialIdeal unit(std::size_t dim) {
    return {dim, {Monomial(dim)}};
  }

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Monomial> gens() const noexcept { return gens_; }
  bool is_unit() const noexcept {
    return gens_.size() == 1 && gens_.front().is_zero();
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  std::size_t dim_;
  std::vector<Monomial> gens_;
};

/// Coordinatewise a <= b. Throws dimension_mismatch.
bool divides(const Monomial& a, const Monomial& b);

/// Divisibility-minimal elements of the input, deduplicated and sorted.
std::vector<Monomial> minimalize(std::vector<Monomial> monomials);

bool contains(const MonomialIdeal& ideal, const Monomial& m);

/// ideal contains every generator of other, i.e. other is a subideal.
bool contains(const MonomialIdeal& ideal, const MonomialIdeal& other);

/// Entry j is the degree of the pure power of x_j in G(I), if any. The unit
/// ideal reports degree 0 for every variable.
std::vector<std::optional<exponent_t>> pure_power_degrees(
    const MonomialIdeal& ideal);

bool is_artinian(const MonomialIdeal& ideal);

/// Largest pure power degree of an Artinian ideal (the n of A_d(n)), or
/// nullopt when the ideal is not Artinian.
std::optional<exponent_t> artinian_side(const MonomialIdeal& ideal);

/// Variable exchange condition, checked on minimal generators only.
bool is_strongly_stable_ideal(const MonomialIdeal& ideal);

/// G(I) closed under the action of S_d.
bool is_symmetric_ideal(const MonomialIdeal& ideal);

/// All coordinate permutations of every input vector, deduplicated and sorted.
std::vector<Monomial> symmetrize(std::span<const Monomial> monomials);

/// The exchange m * x_to / x_from, with to < from (0-based variables).
struct BorelMove {
  std::size_t to;
  std::size_t from;
};

/// Applies the moves in order. Throws invalid_move naming the first step
/// whose divisor x_from does not divide the running monomial, or whose
/// indices are out of range or not ordered to < from.
Monomial apply_borel_move(Monomial m, std::span<const BorelMove> moves);

/// Borel(A): the smallest strongly stable ideal containing A. Throws
/// empty_input for an empty set.
MonomialIdeal borel_closure(std::span<const Monomial> monomials);

/// The unique minimal set of Borel generators of a strongly stable ideal.
/// Throws not_strongly_stable otherwise.
std::vector<Monomial> bgens(const MonomialIdeal& ideal);

}  // namespace sspart
