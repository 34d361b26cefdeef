#include "sspart/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <thread>

#include "sspart/error.hpp"

namespace sspart {

namespace {

// The cells (or, for totally symmetric search, the sorted orbit
// representatives) of the n-box, in a linear extension of the order whose
// ideals are being enumerated. lower[k] lists the indices that must already
// be present before element k may be added.
struct SearchPoset {
  std::size_t dim = 0;
  bool orbit_reps = false;
  std::vector<Cell> elements;
  std::vector<std::vector<std::uint32_t>> lower;
};

std::uint64_t axis_weight(const Cell& c) {
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < c.dim(); ++i) w += (i + 1) * std::uint64_t{c[i]};
  return w;
}

// Graded order; within a degree, larger axis weight first so that
// alpha - e_i + e_{i+1} precedes alpha.
bool graded_before(const Cell& a, const Cell& b) {
  auto da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  auto wa = axis_weight(a), wb = axis_weight(b);
  if (wa != wb) return wa > wb;
  return a < b;
}

std::vector<Cell> lower_covers(const Cell& c, Predicate predicate,
                               Pruning pruning) {
  std::vector<Cell> covers;
  for (std::size_t j = 0; j < c.dim(); ++j) {
    if (c[j] == 0) continue;
    Cell pred = c;
    --pred[j];
    covers.push_back(predicate == Predicate::totally_symmetric ? pred.sorted()
                                                               : pred);
  }
  if (predicate == Predicate::strongly_stable &&
      pruning == Pruning::borel_order) {
    for (std::size_t i = 0; i + 1 < c.dim(); ++i) {
      if (c[i] == 0) continue;
      Cell shifted = c;
      --shifted[i];
      ++shifted[i + 1];
      covers.push_back(shifted);
    }
  }
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  return covers;
}

SearchPoset build_poset(std::size_t d, exponent_t n, Predicate predicate,
                        Pruning pruning) {
  SearchPoset poset;
  poset.dim = d;
  poset.orbit_reps = predicate == Predicate::totally_symmetric;
  if (n == 0) return poset;

  std::vector<Cell> candidates;
  Cell v(d);
  for (;;) {
    if (!poset.orbit_reps || v.is_weakly_increasing()) candidates.push_back(v);
    std::size_t j = d;
    bool done = true;
    while (j-- > 0) {
      if (++v[j] < n) {
        done = false;
        break;
      }
      v[j] = 0;
    }
    if (done) break;
  }
  std::sort(candidates.begin(), candidates.end(), graded_before);

  // Elements with a cover outside the box, or depending on such an element,
  // can never be added and are dropped.
  std::map<Cell, std::uint32_t> index;
  for (const Cell& c : candidates) {
    std::vector<std::uint32_t> deps;
    bool usable = true;
    for (const Cell& cover : lower_covers(c, predicate, pruning)) {
      auto it = index.find(cover);
      if (it == index.end()) {
        usable = false;
        break;
      }
      deps.push_back(it->second);
    }
    if (!usable) continue;
    index.emplace(c, static_cast<std::uint32_t>(poset.elements.size()));
    poset.elements.push_back(c);
    poset.lower.push_back(std::move(deps));
  }
  return poset;
}

std::optional<Partition> materialize(const SearchPoset& poset,
                                     Predicate predicate,
                                     const std::vector<char>& in) {
  std::vector<Cell> cells;
  for (std::size_t k = 0; k < in.size(); ++k) {
    if (!in[k]) continue;
    if (!poset.orbit_reps) {
      cells.push_back(poset.elements[k]);
      continue;
    }
    Cell perm = poset.elements[k];
    do {
      cells.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  Partition p = Partition::from_cells(poset.dim, std::move(cells));
  switch (predicate) {
    case Predicate::all:
      break;
    case Predicate::strongly_stable:
      if (!is_strongly_stable_partition(p)) return std::nullopt;
      break;
    case Predicate::totally_symmetric:
      if (!is_totally_symmetric_partition(p)) return std::nullopt;
      break;
  }
  return p;
}

struct SearchState {
  std::size_t next = 0;
  std::vector<char> in;
};

// Include/exclude depth-first search over the elements in order. An element
// is offered only when all its lower covers are present, so every leaf is a
// distinct order ideal and every order ideal is reached once.
class Walker {
public:
  using Leaf = std::function<void(const std::vector<char>&)>;

  Walker(const SearchPoset& poset, std::atomic<std::uint64_t>& nodes,
         std::uint64_t budget)
      : poset_(poset), nodes_(nodes), budget_(budget) {}

  void walk(std::vector<char>& in, std::size_t k, const Leaf& leaf) {
    tick();
    k = skip_forced(in, k);
    if (k == poset_.elements.size()) {
      leaf(in);
      return;
    }
    walk(in, k + 1, leaf);
    in[k] = 1;
    walk(in, k + 1, leaf);
    in[k] = 0;
  }

  // One level of the same search, used to split the tree into tasks.
  std::vector<SearchState> expand(SearchState s) {
    tick();
    s.next = skip_forced(s.in, s.next);
    if (s.next == poset_.elements.size()) return {std::move(s)};
    SearchState with = s;
    with.in[with.next] = 1;
    ++with.next;
    ++s.next;
    std::vector<SearchState> out;
    out.push_back(std::move(s));
    out.push_back(std::move(with));
    return out;
  }

private:
  void tick() {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_) {
      throw Error(ErrorKind::resource_limit,
                  "enumeration exceeded the node budget of " +
                      std::to_string(budget_));
    }
  }

  std::size_t skip_forced(const std::vector<char>& in, std::size_t k) const {
    const std::size_t size = poset_.elements.size();
    for (; k < size; ++k) {
      const auto& deps = poset_.lower[k];
      if (std::all_of(deps.begin(), deps.end(),
                      [&](std::uint32_t i) { return in[i] != 0; })) {
        break;
      }
    }
    return k;
  }

  const SearchPoset& poset_;
  std::atomic<std::uint64_t>& nodes_;
  std::uint64_t budget_;
};

void run_parallel(const SearchPoset& poset, Predicate predicate,
                  const EnumerationOptions& options,
                  std::atomic<std::uint64_t>& nodes,
                  const PartitionVisitor& visit) {
  Walker splitter(poset, nodes, options.node_budget);
  std::vector<SearchState> tasks{
      SearchState{0, std::vector<char>(poset.elements.size(), 0)}};
  const std::size_t target = 8 * std::size_t{options.threads};
  while (tasks.size() < target) {
    std::vector<SearchState> next;
    bool grew = false;
    for (SearchState& s : tasks) {
      if (s.next == poset.elements.size()) {
        next.push_back(std::move(s));
        continue;
      }
      auto children = splitter.expand(std::move(s));
      grew = grew || children.size() > 1;
      for (SearchState& c : children) next.push_back(std::move(c));
    }
    tasks = std::move(next);
    if (!grew) break;
  }

  std::vector<std::vector<Partition>> results(tasks.size());
  std::atomic<std::size_t> next_task{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    Walker walker(poset, nodes, options.node_budget);
    for (;;) {
      std::size_t t = next_task.fetch_add(1);
      if (t >= tasks.size() || failed.load()) return;
      try {
        auto& out = results[t];
        walker.walk(tasks[t].in, tasks[t].next,
                    [&](const std::vector<char>& in) {
                      if (auto p = materialize(poset, predicate, in)) {
                        out.push_back(std::move(*p));
                      }
                    });
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < options.threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);

  for (const auto& bucket : results) {
    for (const Partition& p : bucket) visit(p);
  }
}

void require_dim(std::size_t d) {
  if (d == 0) throw Error(ErrorKind::invalid_argument, "dimension must be positive");
}

}  // namespace

void enumerate_partitions(std::size_t d, exponent_t n, Predicate predicate,
                          const PartitionVisitor& visit,
                          const EnumerationOptions& options) {
  require_dim(d);
  const SearchPoset poset = build_poset(d, n, predicate, options.pruning);
  std::atomic<std::uint64_t> nodes{0};
  if (options.threads > 1) {
    run_parallel(poset, predicate, options, nodes, visit);
    return;
  }
  Walker walker(poset, nodes, options.node_budget);
  std::vector<char> in(poset.elements.size(), 0);
  walker.walk(in, 0, [&](const std::vector<char>& chosen) {
    if (auto p = materialize(poset, predicate, chosen)) visit(*p);
  });
}

std::vector<Partition> list_partitions(std::size_t d, exponent_t n,
                                       Predicate predicate,
                                       const EnumerationOptions& options) {
  std::vector<Partition> out;
  enumerate_partitions(
      d, n, predicate, [&](const Partition& p) { out.push_back(p); }, options);
  return out;
}

std::vector<BigInt> class_sizes(std::size_t d, exponent_t n,
                                Predicate predicate,
                                const EnumerationOptions& options) {
  std::vector<std::uint64_t> counts(std::size_t{n} + 1, 0);
  enumerate_partitions(
      d, n, predicate,
      [&](const Partition& p) { ++counts[bounding_side(p)]; }, options);
  return {counts.begin(), counts.end()};
}

std::vector<BigInt> cumulative_counts(std::size_t d, exponent_t n,
                                      Predicate predicate,
                                      const EnumerationOptions& options) {
  auto sizes = class_sizes(d, n, predicate, options);
  for (std::size_t k = 1; k < sizes.size(); ++k) sizes[k] += sizes[k - 1];
  return sizes;
}

CountTable count_table(std::size_t d, exponent_t n,
                       const EnumerationOptions& options) {
  return CountTable{
      d, n, cumulative_counts(d, n, Predicate::strongly_stable, options),
      cumulative_counts(d, n, Predicate::totally_symmetric, options)};
}

BigInt count_ss(std::size_t d, exponent_t n, const EnumerationOptions& options) {
  return cumulative_counts(d, n, Predicate::strongly_stable, options).back();
}

BigInt count_ts(std::size_t d, exponent_t n, const EnumerationOptions& options) {
  return cumulative_counts(d, n, Predicate::totally_symmetric, options).back();
}

BigInt stembridge_t3(exponent_t n) {
  using boost::multiprecision::cpp_rational;
  cpp_rational product = 1;
  for (exponent_t i = 1; i <= n; ++i) {
    for (exponent_t j = i; j <= n; ++j) {
      for (exponent_t k = j; k <= n; ++k) {
        const long s = long{i} + j + k;
        product *= cpp_rational(s - 1, s - 2);
      }
    }
  }
  if (boost::multiprecision::denominator(product) != 1) {
    throw Error(ErrorKind::non_integer_product,
                "T_3(" + std::to_string(n) + ") = " + product.str());
  }
  return boost::multiprecision::numerator(product);
}

QPolynomial qtspp(exponent_t n) {
  // Numerators first: the full numerator is divisible by every sub-product
  // of the denominators, so each division below must be exact.
  const QPolynomial one = QPolynomial::constant(1);
  QPolynomial result = one;
  std::vector<std::size_t> denominators;
  for (exponent_t i = 1; i <= n; ++i) {
    for (exponent_t j = i; j <= n; ++j) {
      for (exponent_t k = j; k <= n; ++k) {
        const std::size_t s = std::size_t{i} + j + k;
        result = result * (one - QPolynomial::monomial(s - 1));
        denominators.push_back(s - 2);
      }
    }
  }
  for (std::size_t e : denominators) {
    result = result.divide_exact(one - QPolynomial::monomial(e));
  }
  return result;
}

QPolynomial orbit_gf_ts(std::size_t d, exponent_t n,
                        const EnumerationOptions& options) {
  std::vector<BigInt> coeffs;
  enumerate_partitions(
      d, n, Predicate::totally_symmetric,
      [&](const Partition& p) {
        const std::size_t k = orbit_count(p);
        if (coeffs.size() <= k) coeffs.resize(k + 1);
        ++coeffs[k];
      },
      options);
  return QPolynomial(std::move(coeffs));
}

QPolynomial cell_gf_ss(std::size_t d, exponent_t n,
                       const EnumerationOptions& options) {
  std::vector<BigInt> coeffs;
  enumerate_partitions(
      d, n, Predicate::strongly_stable,
      [&](const Partition& p) {
        const std::size_t k = p.size();
        if (coeffs.size() <= k) coeffs.resize(k + 1);
        ++coeffs[k];
      },
      options);
  return QPolynomial(std::move(coeffs));
}

HawkesCheck hawkes_check(std::size_t d, exponent_t n,
                         const EnumerationOptions& options) {
  require_dim(d);
  if (n < 2) {
    throw Error(ErrorKind::invalid_argument,
                "the identity B_d(n) = B_{n-1}(d+1) needs n >= 2");
  }
  HawkesCheck check;
  check.lhs = count_ss(d, n, options);
  check.rhs = count_ss(n - 1, static_cast<exponent_t>(d + 1), options);
  check.holds = check.lhs == check.rhs;
  return check;
}

}  // namespace sspart
