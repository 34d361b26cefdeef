#include <doctest.h>

#include "fixtures.hpp"
#include "sspart/enumeration.hpp"
#include "sspart/error.hpp"
#include "sspart/partition.hpp"

using namespace sspart;
using namespace fixtures;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an sspart::Error");
  return ErrorKind::parse;
}

}  // namespace

TEST_CASE("validate_partition") {
  auto p = integer_partition_7();
  CHECK(p.size() == 7);
  CHECK(p.cells().front() == Cell{0, 0});
  CHECK(p.cells().back() == Cell{3, 0});

  auto empty = validate_partition(3, {});
  CHECK(empty.is_empty());
  CHECK(empty.dim() == 3);

  SUBCASE("closure violation names the cell and the axis") {
    try {
      validate_partition(2, {{1, 0}});
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::closure_violation);
      CHECK(std::string(e.what()).find("(1,0)") != std::string::npos);
      CHECK(std::string(e.what()).find("axis 1") != std::string::npos);
    }
  }
  CHECK(kind_of([] { validate_partition(2, {{0, 0}, {0, 0, 0}}); }) ==
        ErrorKind::dimension_mismatch);

  SUBCASE("canonical form") {
    auto a = validate_partition(2, {{1, 0}, {0, 0}, {0, 1}, {0, 0}});
    auto b = validate_partition(2, {{0, 1}, {1, 0}, {0, 0}});
    CHECK(a == b);
    CHECK(a.size() == 3);
  }
}

TEST_CASE("hook_vector") {
  auto p = strict_partition_15();
  CHECK(p.size() == 15);
  CHECK(hook_vector(p, {0, 0}).arms == std::vector<exponent_t>{3, 6});
  CHECK(hook_vector(p, {1, 1}).arms == std::vector<exponent_t>{1, 2});
  CHECK(hook_vector(p, {0, 6}).arms == std::vector<exponent_t>{0, 0});

  auto single = validate_partition(2, {{0, 0}});
  CHECK(hook_vector(single, {0, 0}).arms == std::vector<exponent_t>{0, 0});

  CHECK(hook_vector(integer_partition_7(), {1, 0}).arms ==
        std::vector<exponent_t>{2, 1});

  CHECK(kind_of([&] { hook_vector(single, {1, 0}); }) ==
        ErrorKind::cell_not_in_partition);
}

TEST_CASE("hook arms agree with membership scans") {
  for (const auto& s : all_partitions_brute(2, 4)) {
    auto p = to_partition(2, s);
    for (const Cell& c : p.cells()) {
      auto h = hook_vector(p, c);
      for (std::size_t j = 0; j < 2; ++j) {
        Cell reach = c;
        reach[j] += h.arms[j];
        CHECK(p.contains(reach));
        ++reach[j];
        CHECK_FALSE(p.contains(reach));
      }
    }
  }
}

TEST_CASE("is_strongly_stable_partition") {
  CHECK(is_strongly_stable_partition(strict_partition_15()));
  CHECK(is_strongly_stable_partition(ss_plane_partition_11()));
  CHECK(is_strongly_stable_partition(Partition::empty(4)));
  CHECK_FALSE(is_strongly_stable_partition(validate_partition(2, {{0, 0}, {1, 0}})));
  CHECK_FALSE(is_strongly_stable_partition(integer_partition_7()));
}

TEST_CASE("strongly stable in d=2 means distinct column heights") {
  for (const auto& s : all_partitions_brute(2, 4)) {
    auto p = to_partition(2, s);
    std::vector<int> heights;
    for (const auto& pt : s) {
      if (heights.size() <= static_cast<std::size_t>(pt[0])) heights.resize(pt[0] + 1);
      ++heights[pt[0]];
    }
    std::set<int> distinct(heights.begin(), heights.end());
    CHECK(is_strongly_stable_partition(p) == (distinct.size() == heights.size()));
    CHECK(is_strongly_stable_partition(p) == strongly_stable_brute(s));
  }
  // the 5-box has 252 partitions; use the library enumerator for the cells
  for (const auto& p : list_partitions(2, 5, Predicate::all)) {
    std::vector<int> heights;
    for (const Cell& c : p.cells()) {
      if (heights.size() <= c[0]) heights.resize(c[0] + 1);
      ++heights[c[0]];
    }
    std::set<int> distinct(heights.begin(), heights.end());
    CHECK(is_strongly_stable_partition(p) == (distinct.size() == heights.size()));
  }
}

TEST_CASE("is_totally_symmetric_partition") {
  CHECK(is_totally_symmetric_partition(self_conjugate_26()));
  CHECK(is_totally_symmetric_partition(validate_partition(3, {{0, 0, 0}})));
  CHECK_FALSE(is_totally_symmetric_partition(validate_partition(2, {{0, 0}, {0, 1}})));
  CHECK_FALSE(is_totally_symmetric_partition(strict_partition_15()));
}

TEST_CASE("adjacent transpositions agree with the full S_d check") {
  for (const auto& p : list_partitions(3, 3, Predicate::all)) {
    CHECK(is_totally_symmetric_partition(p) == totally_symmetric_brute(to_set(p)));
  }
  for (const auto& s : all_partitions_brute(4, 2)) {
    CHECK(is_totally_symmetric_partition(to_partition(4, s)) ==
          totally_symmetric_brute(s));
  }
}

TEST_CASE("d = 1 partitions are strongly stable and totally symmetric") {
  for (exponent_t k = 0; k <= 6; ++k) {
    std::vector<Cell> cells;
    for (exponent_t a = 0; a < k; ++a) cells.push_back({a});
    auto p = validate_partition(1, cells);
    CHECK(is_strongly_stable_partition(p));
    CHECK(is_totally_symmetric_partition(p));
    CHECK(orbit_count(p) == p.size());
    CHECK(bounding_side(p) == k);
  }
}

TEST_CASE("bounding_side") {
  CHECK(bounding_side(integer_partition_7()) == 4);
  CHECK(bounding_side(Partition::empty(2)) == 0);
  CHECK(bounding_side(plane_partition_10()) == 3);
  CHECK(plane_partition_10().size() == 10);
}

TEST_CASE("orbit_count") {
  CHECK(orbit_count(validate_partition(3, {{0, 0, 0}})) == 1);
  std::vector<Cell> cube;
  for (exponent_t a = 0; a < 2; ++a)
    for (exponent_t b = 0; b < 2; ++b)
      for (exponent_t c = 0; c < 2; ++c) cube.push_back({a, b, c});
  CHECK(orbit_count(validate_partition(3, cube)) == 4);
  // self-conjugate partition of the worked d = 2 example: cells with a <= b
  CHECK(orbit_count(self_conjugate_26()) == 15);

  for (const auto& p : list_partitions(3, 3, Predicate::all)) {
    CHECK(orbit_count(p) <= p.size());
  }
}

TEST_CASE("removing a maximal cell keeps a partition") {
  for (const auto& p : list_partitions(3, 2, Predicate::all)) {
    for (const Cell& c : p.cells()) {
      bool maximal = true;
      for (std::size_t j = 0; j < 3; ++j) {
        Cell up = c;
        ++up[j];
        if (p.contains(up)) maximal = false;
      }
      if (!maximal) continue;
      std::vector<Cell> rest;
      for (const Cell& other : p.cells())
        if (other != c) rest.push_back(other);
      CHECK_NOTHROW(validate_partition(3, rest));
    }
  }
}
