#pragma once

// Worked examples and brute-force oracles shared by the test suites. The
// oracles deliberately avoid the library's algorithms: they work on plain
// std::set<std::vector<int>> and enumerate subsets or permutations directly.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "sspart/monomial_ideal.hpp"
#include "sspart/partition.hpp"

namespace fixtures {

using sspart::Cell;
using sspart::Monomial;
using sspart::MonomialIdeal;
using sspart::Partition;

inline std::vector<Monomial> vecs(std::initializer_list<Monomial> list) {
  return {list};
}

// integer partition 7 = 3+2+1+1
inline Partition integer_partition_7() {
  return Partition::from_cells(
      2, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}, {3, 0}});
}

// plane partition of 10; includes (1,0,0), which the printed list drops
inline Partition plane_partition_10() {
  return Partition::from_cells(3, {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1},
                                   {1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 2, 0},
                                   {0, 2, 0}, {2, 0, 0}});
}

// strict partition with column heights 7, 4, 3, 1
inline Partition strict_partition_15() {
  std::vector<Cell> cells;
  const unsigned heights[] = {7, 4, 3, 1};
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = 0; b < heights[a]; ++b) cells.push_back({a, b});
  return Partition::from_cells(2, cells);
}

// strongly stable plane partition in a 4-box
inline Partition ss_plane_partition_11() {
  return Partition::from_cells(
      3, {{0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {0, 0, 3}, {0, 1, 0}, {0, 1, 1},
          {0, 1, 2}, {0, 2, 0}, {1, 0, 0}, {1, 0, 1}, {1, 1, 0}});
}

// self-conjugate partition 7+5+5+4+3+1+1
inline Partition self_conjugate_26() {
  std::vector<Cell> cells;
  const unsigned rows[] = {7, 5, 5, 4, 3, 1, 1};
  for (unsigned b = 0; b < 7; ++b)
    for (unsigned a = 0; a < rows[b]; ++a) cells.push_back({a, b});
  return Partition::from_cells(2, cells);
}

inline MonomialIdeal strict_ideal() {
  return MonomialIdeal(2, {{4, 0}, {3, 1}, {2, 3}, {1, 4}, {0, 7}});
}

inline MonomialIdeal ideal_of_partition_7() {
  return MonomialIdeal(2, {{4, 0}, {2, 1}, {1, 2}, {0, 3}});
}

inline MonomialIdeal ideal_of_plane_10() {
  return MonomialIdeal(3, {{3, 0, 0}, {2, 1, 0}, {0, 3, 0}, {2, 0, 1},
                           {1, 1, 1}, {0, 2, 1}, {0, 0, 2}});
}

inline MonomialIdeal ss_plane_ideal() {
  return MonomialIdeal(3, {{2, 0, 0}, {1, 2, 0}, {0, 3, 0}, {1, 1, 1},
                           {0, 2, 1}, {1, 0, 2}, {0, 1, 3}, {0, 0, 4}});
}

// psi(Bgens) of ss_plane_ideal
inline std::vector<Monomial> ss_plane_fset() {
  return {{0, 0, 4}, {0, 2, 3}, {1, 1, 3}, {2, 2, 2}};
}

// ---------------------------------------------------------------- oracles

using Point = std::vector<int>;
using PointSet = std::set<Point>;

inline Point to_point(const Cell& c) { return Point(c.begin(), c.end()); }

inline PointSet to_set(const Partition& p) {
  PointSet s;
  for (const Cell& c : p.cells()) s.insert(to_point(c));
  return s;
}

inline bool divides_brute(const Point& a, const Point& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool in_ideal_brute(const std::vector<Point>& gens, const Point& m) {
  return std::any_of(gens.begin(), gens.end(),
                     [&](const Point& g) { return divides_brute(g, m); });
}

inline std::vector<Point> points(std::span<const Monomial> ms) {
  std::vector<Point> out;
  for (const Monomial& m : ms) out.push_back(to_point(m));
  return out;
}

// All points of {0..side-1}^d.
inline std::vector<Point> box(std::size_t d, int side) {
  std::vector<Point> out;
  if (side <= 0) return out;
  Point p(d, 0);
  for (;;) {
    out.push_back(p);
    std::size_t j = d;
    while (j-- > 0) {
      if (++p[j] < side) break;
      p[j] = 0;
      if (j == 0) return out;
    }
  }
}

inline bool downward_closed(const PointSet& s) {
  for (const Point& p : s)
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p[j] == 0) continue;
      Point q = p;
      --q[j];
      if (!s.count(q)) return false;
    }
  return true;
}

// Every downward-closed subset of the n-box, by subset enumeration. Only for
// boxes of at most ~20 cells.
inline std::vector<PointSet> all_partitions_brute(std::size_t d, int n) {
  auto cells = box(d, n);
  std::vector<PointSet> out;
  const std::uint64_t total = std::uint64_t{1} << cells.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    PointSet s;
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (mask >> i & 1) s.insert(cells[i]);
    if (downward_closed(s)) out.push_back(std::move(s));
  }
  return out;
}

inline int arm_brute(const PointSet& s, Point p, std::size_t j) {
  int h = 0;
  for (;;) {
    ++p[j];
    if (!s.count(p)) return h;
    ++h;
  }
}

inline bool strongly_stable_brute(const PointSet& s) {
  for (const Point& p : s)
    for (std::size_t j = 0; j + 1 < p.size(); ++j)
      if (arm_brute(s, p, j) > arm_brute(s, p, j + 1)) return false;
  return true;
}

// Full S_d check, every permutation of every cell.
inline bool totally_symmetric_brute(const PointSet& s) {
  for (Point p : s) {
    std::sort(p.begin(), p.end());
    do {
      if (!s.count(p)) return false;
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return true;
}

inline int side_brute(const PointSet& s) {
  int side = 0;
  for (const Point& p : s)
    for (int a : p) side = std::max(side, a + 1);
  return side;
}

inline Partition to_partition(std::size_t d, const PointSet& s) {
  std::vector<Cell> cells;
  for (const Point& p : s) {
    std::vector<sspart::exponent_t> c(p.begin(), p.end());
    cells.emplace_back(std::move(c));
  }
  return Partition::from_cells(d, std::move(cells));
}

// Saturation under all exchanges x_i/x_j, i < j (not just adjacent ones),
// then minimal elements by pairwise divisibility.
inline std::vector<Point> borel_closure_all_pairs(const std::vector<Point>& a) {
  PointSet seen(a.begin(), a.end());
  std::vector<Point> work(a.begin(), a.end());
  while (!work.empty()) {
    Point m = work.back();
    work.pop_back();
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m[j] == 0) continue;
      for (std::size_t i = 0; i < j; ++i) {
        Point next = m;
        --next[j];
        ++next[i];
        if (seen.insert(next).second) work.push_back(next);
      }
    }
  }
  std::vector<Point> minimal;
  for (const Point& m : seen) {
    bool redundant = false;
    for (const Point& g : seen)
      if (g != m && divides_brute(g, m)) redundant = true;
    if (!redundant) minimal.push_back(m);
  }
  return minimal;
}

}  // namespace fixtures
