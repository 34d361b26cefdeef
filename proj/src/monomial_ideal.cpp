#include "sspart/monomial_ideal.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "sspart/error.hpp"

namespace sspart {

namespace {

void require_dim(const Monomial& m, std::size_t dim) {
  if (m.dim() != dim) {
    throw Error(ErrorKind::dimension_mismatch,
                "monomial " + to_string(m) + " has length " +
                    std::to_string(m.dim()) + ", expected " +
                    std::to_string(dim));
  }
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t dim, std::vector<Monomial> gens)
    : dim_(dim) {
  if (dim == 0) {
    throw Error(ErrorKind::invalid_argument, "dimension must be positive");
  }
  for (const Monomial& g : gens) require_dim(g, dim);
  gens_ = minimalize(std::move(gens));
}

bool divides(const Monomial& a, const Monomial& b) {
  require_dim(b, a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::vector<Monomial> minimalize(std::vector<Monomial> monomials) {
  // Any divisor of m has degree <= deg(m), so scanning by degree lets each
  // candidate be tested against the already accepted ones only.
  std::sort(monomials.begin(), monomials.end(),
            [](const Monomial& a, const Monomial& b) {
              auto da = a.degree(), db = b.degree();
              return da != db ? da < db : a < b;
            });
  monomials.erase(std::unique(monomials.begin(), monomials.end()),
                  monomials.end());
  std::vector<Monomial> kept;
  for (Monomial& m : monomials) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& g) { return divides(g, m); });
    if (!redundant) kept.push_back(std::move(m));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
  require_dim(m, ideal.dim());
  return std::any_of(ideal.gens().begin(), ideal.gens().end(),
                     [&](const Monomial& g) { return divides(g, m); });
}

bool contains(const MonomialIdeal& ideal, const MonomialIdeal& other) {
  return std::all_of(other.gens().begin(), other.gens().end(),
                     [&](const Monomial& g) { return contains(ideal, g); });
}

std::vector<std::optional<exponent_t>> pure_power_degrees(
    const MonomialIdeal& ideal) {
  std::vector<std::optional<exponent_t>> degrees(ideal.dim());
  if (ideal.is_unit()) {
    std::fill(degrees.begin(), degrees.end(), exponent_t{0});
    return degrees;
  }
  for (const Monomial& g : ideal.gens()) {
    int axis = g.pure_power_axis();
    if (axis >= 0) degrees[static_cast<std::size_t>(axis)] = g[axis];
  }
  return degrees;
}

bool is_artinian(const MonomialIdeal& ideal) {
  return artinian_side(ideal).has_value();
}

std::optional<exponent_t> artinian_side(const MonomialIdeal& ideal) {
  exponent_t side = 0;
  for (const auto& k : pure_power_degrees(ideal)) {
    if (!k) return std::nullopt;
    side = std::max(side, *k);
  }
  return side;
}

bool is_strongly_stable_ideal(const MonomialIdeal& ideal) {
  for (const Monomial& g : ideal.gens()) {
    for (std::size_t j = 1; j < ideal.dim(); ++j) {
      if (g[j] == 0) continue;
      for (std::size_t i = 0; i < j; ++i) {
        Monomial moved = g;
        --moved[j];
        ++moved[i];
        if (!contains(ideal, moved)) return false;
      }
    }
  }
  return true;
}

bool is_symmetric_ideal(const MonomialIdeal& ideal) {
  const auto gens = ideal.gens();
  for (const Monomial& g : gens) {
    for (std::size_t j = 0; j + 1 < ideal.dim(); ++j) {
      if (g[j] == g[j + 1]) continue;
      Monomial swapped = g;
      std::swap(swapped[j], swapped[j + 1]);
      if (!std::binary_search(gens.begin(), gens.end(), swapped)) return false;
    }
  }
  return true;
}

std::vector<Monomial> symmetrize(std::span<const Monomial> monomials) {
  std::vector<Monomial> out;
  for (const Monomial& m : monomials) {
    Monomial perm = m.sorted();
    do {
      out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Monomial apply_borel_move(Monomial m, std::span<const BorelMove> moves) {
  for (std::size_t t = 0; t < moves.size(); ++t) {
    const BorelMove& mv = moves[t];
    if (mv.to >= mv.from || mv.from >= m.dim()) {
      throw Error(ErrorKind::invalid_move,
                  "step " + std::to_string(t) + ": exchange x" +
                      std::to_string(mv.to + 1) + "/x" +
                      std::to_string(mv.from + 1) +
                      " is not a Borel move in dimension " +
                      std::to_string(m.dim()));
    }
    if (m[mv.from] == 0) {
      throw Error(ErrorKind::invalid_move,
                  "step " + std::to_string(t) + ": x" +
                      std::to_string(mv.from + 1) + " does not divide " +
                      to_string(m));
    }
    --m[mv.from];
    ++m[mv.to];
  }
  return m;
}

MonomialIdeal borel_closure(std::span<const Monomial> monomials) {
  if (monomials.empty()) {
    throw Error(ErrorKind::empty_input, "Borel closure of an empty set");
  }
  const std::size_t dim = monomials.front().dim();
  for (const Monomial& m : monomials) require_dim(m, dim);

  // Saturate under adjacent exchanges x_{j-1}/x_j; they compose to every
  // x_i/x_j with i < j.
  std::set<Monomial> seen(monomials.begin(), monomials.end());
  std::deque<Monomial> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    Monomial m = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t j = 1; j < dim; ++j) {
      if (m[j] == 0) continue;
      Monomial next = m;
      --next[j];
      ++next[j - 1];
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return MonomialIdeal(dim, {seen.begin(), seen.end()});
}

std::vector<Monomial> bgens(const MonomialIdeal& ideal) {
  if (!is_strongly_stable_ideal(ideal)) {
    throw Error(ErrorKind::not_strongly_stable,
                "Borel generators are defined for strongly stable ideals only");
  }
  std::vector<Monomial> out;
  for (const Monomial& m : ideal.gens()) {
    bool is_borel_gen = true;
    for (std::size_t q = 0; q < ideal.dim() && is_borel_gen; ++q) {
      if (m[q] == 0) continue;
      Monomial lowered = m;
      --lowered[q];
      if (contains(ideal, lowered)) {
        is_borel_gen = false;
        break;
      }
      if (q + 1 < ideal.dim()) {
        ++lowered[q + 1];
        if (contains(ideal, lowered)) is_borel_gen = false;
      }
    }
    if (is_borel_gen) out.push_back(m);
  }
  return out;
}

}  // namespace sspart
