#include "sspart/bijection.hpp"

#include <algorithm>

#include "sspart/correspondence.hpp"
#include "sspart/error.hpp"

namespace sspart {

Monomial psi(const Monomial& m) {
  Monomial out = m;
  for (std::size_t i = 1; i < out.dim(); ++i) out[i] += out[i - 1];
  return out;
}

Monomial psi_inv(const Monomial& u) {
  if (!u.is_weakly_increasing()) {
    throw Error(ErrorKind::not_weakly_increasing, to_string(u));
  }
  Monomial out = u;
  for (std::size_t i = out.dim(); i-- > 1;) out[i] -= u[i - 1];
  return out;
}

std::vector<Monomial> bgens_via_psi(const MonomialIdeal& ideal) {
  if (!is_strongly_stable_ideal(ideal)) {
    throw Error(ErrorKind::not_strongly_stable,
                "Borel generators are defined for strongly stable ideals only");
  }
  std::vector<Monomial> images;
  images.reserve(ideal.gens().size());
  for (const Monomial& g : ideal.gens()) images.push_back(psi(g));
  std::vector<Monomial> out;
  for (const Monomial& u : minimalize(std::move(images))) {
    out.push_back(psi_inv(u));
  }
  std::sort(out.begin(), out.end());
  return out;
}

FSet::FSet(std::size_t dim, exponent_t side, std::vector<Monomial> elements)
    : dim_(dim), side_(side) {
  if (dim == 0) throw Error(ErrorKind::invalid_fset, "dimension must be positive");
  if (side == 0) throw Error(ErrorKind::invalid_fset, "side must be positive");
  const Monomial top = Monomial::unit(dim, dim - 1, side);
  bool has_top = false;
  for (const Monomial& m : elements) {
    if (m.dim() != dim) {
      throw Error(ErrorKind::invalid_fset,
                  "element " + to_string(m) + " has wrong length");
    }
    if (!m.is_weakly_increasing()) {
      throw Error(ErrorKind::invalid_fset,
                  "element " + to_string(m) + " is not weakly increasing");
    }
    if (m.max_coord() > side) {
      throw Error(ErrorKind::invalid_fset,
                  "element " + to_string(m) + " exceeds side " +
                      std::to_string(side));
    }
    has_top = has_top || m == top;
  }
  if (!has_top) {
    throw Error(ErrorKind::invalid_fset,
                "missing the pure power " + to_string(top));
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (minimalize(elements) != elements) {
    throw Error(ErrorKind::invalid_fset, "elements are not an antichain");
  }
  elements_ = std::move(elements);
}

namespace {

// The n with x_d^n in G(I); requires n to be the largest pure power degree.
exponent_t last_variable_side(const MonomialIdeal& ideal) {
  auto degrees = pure_power_degrees(ideal);
  auto side = artinian_side(ideal);
  const auto& last = degrees.back();
  if (!last || *last == 0 || *last != *side) {
    throw Error(ErrorKind::missing_pure_power,
                "x" + std::to_string(ideal.dim()) +
                    "^n with n the largest pure power degree is not a "
                    "minimal generator");
  }
  return *last;
}

}  // namespace

FSet lambda_map(const MonomialIdeal& ideal) {
  if (!is_artinian(ideal)) {
    throw Error(ErrorKind::not_artinian,
                "ideal has no pure power of some variable");
  }
  if (!is_strongly_stable_ideal(ideal)) {
    throw Error(ErrorKind::not_strongly_stable,
                "Lambda is defined on strongly stable ideals");
  }
  const exponent_t side = last_variable_side(ideal);
  std::vector<Monomial> images;
  for (const Monomial& g : bgens(ideal)) images.push_back(psi(g));
  return FSet(ideal.dim(), side, std::move(images));
}

MonomialIdeal lambda_inv(const FSet& s) {
  std::vector<Monomial> preimages;
  preimages.reserve(s.elements().size());
  for (const Monomial& u : s.elements()) preimages.push_back(psi_inv(u));
  return borel_closure(preimages);
}

MonomialIdeal omega(const FSet& s) {
  return MonomialIdeal(s.dim(), symmetrize(s.elements()));
}

FSet omega_inv(const MonomialIdeal& ideal) {
  if (!is_artinian(ideal)) {
    throw Error(ErrorKind::not_artinian,
                "ideal has no pure power of some variable");
  }
  if (!is_symmetric_ideal(ideal)) {
    throw Error(ErrorKind::not_symmetric,
                "Omega^-1 is defined on symmetric ideals");
  }
  const exponent_t side = last_variable_side(ideal);
  std::vector<Monomial> increasing;
  for (const Monomial& g : ideal.gens()) {
    if (g.is_weakly_increasing()) increasing.push_back(g);
  }
  return FSet(ideal.dim(), side, std::move(increasing));
}

Partition ss_to_ts_partition(const Partition& p) {
  if (p.is_empty()) {
    throw Error(ErrorKind::not_strongly_stable,
                "the empty partition has no side n >= 1");
  }
  if (!is_strongly_stable_partition(p)) {
    throw Error(ErrorKind::not_strongly_stable,
                "partition has a cell whose hook vector is not weakly "
                "increasing");
  }
  return ideal_to_partition(omega(lambda_map(partition_to_ideal(p))));
}

Partition ts_to_ss_partition(const Partition& q) {
  if (q.is_empty()) {
    throw Error(ErrorKind::not_totally_symmetric,
                "the empty partition has no side n >= 1");
  }
  if (!is_totally_symmetric_partition(q)) {
    throw Error(ErrorKind::not_totally_symmetric,
                "partition is not closed under coordinate permutations");
  }
  return ideal_to_partition(lambda_inv(omega_inv(partition_to_ideal(q))));
}

}  // namespace sspart
