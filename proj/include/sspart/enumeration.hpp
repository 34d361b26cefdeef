#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "sspart/partition.hpp"
#include "sspart/qpolynomial.hpp"

namespace sspart {

enum class Predicate { all, strongly_stable, totally_symmetric };

/// How the strongly stable search prunes before the final hook check.
enum class Pruning {
  /// Only downward closure.
  downward_closure,
  /// Downward closure plus closure under the reverse exchanges
  /// alpha -> alpha - e_i + e_j (i < j) that every strongly stable partition
  /// satisfies.
  borel_order,
};

inline constexpr std::uint64_t default_node_budget = 500'000'000;

struct EnumerationOptions {
  /// Search-tree nodes allowed before resource_limit is thrown.
  std::uint64_t node_budget = default_node_budget;
  /// Worker threads; output order does not depend on this.
  unsigned threads = 1;
  Pruning pruning = Pruning::borel_order;
};

using PartitionVisitor = std::function<void(const Partition&)>;

/// Visits every d-dimensional partition with bounding side <= n (the empty
/// one included) that satisfies the predicate, each exactly once and in a
/// deterministic order that starts with the empty partition.
void enumerate_partitions(std::size_t d, exponent_t n, Predicate predicate,
                          const PartitionVisitor& visit,
                          const EnumerationOptions& options = {});

std::vector<Partition> list_partitions(std::size_t d, exponent_t n,
                                       Predicate predicate,
                                       const EnumerationOptions& options = {});

/// Entry k is the number of partitions with bounding side exactly k, for
/// k = 0..n.
std::vector<BigInt> class_sizes(std::size_t d, exponent_t n,
                                Predicate predicate,
                                const EnumerationOptions& options = {});

/// Entry k is the number of partitions with bounding side <= k.
std::vector<BigInt> cumulative_counts(std::size_t d, exponent_t n,
                                      Predicate predicate,
                                      const EnumerationOptions& options = {});

/// B_d(k) and T_d(k) for k = 0..n.
struct CountTable {
  std::size_t d = 0;
  exponent_t n = 0;
  std::vector<BigInt> strongly_stable;
  std::vector<BigInt> totally_symmetric;
};

CountTable count_table(std::size_t d, exponent_t n,
                       const EnumerationOptions& options = {});

/// B_d(n): strongly stable partitions fitting in an n-box.
BigInt count_ss(std::size_t d, exponent_t n,
                const EnumerationOptions& options = {});

/// T_d(n): totally symmetric partitions fitting in an n-box.
BigInt count_ts(std::size_t d, exponent_t n,
                const EnumerationOptions& options = {});

/// Product over 1 <= i <= j <= k <= n of (i+j+k-1)/(i+j+k-2), evaluated with
/// exact rationals. Throws non_integer_product if the result is not an
/// integer.
BigInt stembridge_t3(exponent_t n);

/// Product over 1 <= i <= j <= k <= n of
/// (1 - q^(i+j+k-1)) / (1 - q^(i+j+k-2)), as an exact polynomial.
QPolynomial qtspp(exponent_t n);

/// Sum of q^(number of S_d-orbits) over totally symmetric partitions in an
/// n-box.
QPolynomial orbit_gf_ts(std::size_t d, exponent_t n,
                        const EnumerationOptions& options = {});

/// Sum of q^(number of cells) over strongly stable partitions in an n-box.
QPolynomial cell_gf_ss(std::size_t d, exponent_t n,
                       const EnumerationOptions& options = {});

struct HawkesCheck {
  BigInt lhs;  // B_d(n)
  BigInt rhs;  // B_{n-1}(d+1)
  bool holds = false;
};

/// Both sides by independent enumeration. Requires n >= 2.
HawkesCheck hawkes_check(std::size_t d, exponent_t n,
                         const EnumerationOptions& options = {});

}  // namespace sspart
