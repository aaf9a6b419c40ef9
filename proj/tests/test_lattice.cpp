#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "karyx/lattice.hpp"

using namespace karyx;

TEST_CASE("lattice shape validation and sizes") {
  CHECK_THROWS_AS(LatticeShape(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(LatticeShape(2, 0), std::invalid_argument);

  const LatticeShape shape(3, 2);
  CHECK(shape.table_size() == 27);
  CHECK(shape.slice_size() == 9);
  CHECK(shape.stride(0) == 9);
  CHECK(shape.stride(1) == 3);
  CHECK(shape.stride(2) == 1);
  CHECK_THROWS_AS(shape.stride(3), std::out_of_range);

  CHECK(LatticeShape(1, 5).table_size() == 6);
}

TEST_CASE("flat index is attribute-1-most-significant mixed radix") {
  const LatticeShape shape(3, 2);
  CHECK(flat_index({0, 0, 0}, shape) == 0);
  CHECK(flat_index({2, 1, 1}, shape) == 22);  // 2*9 + 1*3 + 1
  CHECK(flat_index({2, 2, 2}, shape) == 26);

  CHECK_THROWS_AS(flat_index({3, 0, 0}, shape), std::out_of_range);
  CHECK_THROWS_AS(flat_index({0, -1, 0}, shape), std::out_of_range);
  CHECK_THROWS_AS(flat_index({0, 0}, shape), std::invalid_argument);
}

TEST_CASE("point_from_index inverts flat_index") {
  const LatticeShape shape(3, 2);
  CHECK(point_from_index(0, shape) == LatticePoint{0, 0, 0});
  CHECK(point_from_index(22, shape) == LatticePoint{2, 1, 1});
  CHECK_THROWS_AS(point_from_index(27, shape), std::out_of_range);

  for (std::size_t idx = 0; idx < shape.table_size(); ++idx) {
    CHECK(flat_index(point_from_index(idx, shape), shape) == idx);
  }
  // And the other direction via the odometer.
  LatticePoint x(3, 0);
  std::size_t idx = 0;
  do {
    CHECK(flat_index(x, shape) == idx);
    ++idx;
  } while (advance_point(x, shape));
  CHECK(idx == shape.table_size());
}

TEST_CASE("support and kernel") {
  const LatticeShape shape(3, 2);
  CHECK(support({0, 0, 0}).empty());
  CHECK(support({2, 1, 1}) == std::vector<int>{0, 1, 2});
  CHECK(support_size({2, 1, 1}) == 3);
  CHECK(support({2, 0, 1}) == std::vector<int>{0, 2});

  CHECK(kernel({0, 0, 0}, shape).empty());
  CHECK(kernel({2, 1, 1}, shape) == std::vector<int>{0});
  CHECK(kernel_size({2, 1, 1}, shape) == 1);
  CHECK(kernel({2, 2, 2}, shape) == std::vector<int>{0, 1, 2});
}

TEST_CASE("kernel is contained in support") {
  const LatticeShape shape(4, 3);
  LatticePoint x(4, 0);
  do {
    const auto k = kernel(x, shape);
    const auto s = support(x);
    for (int i : k) {
      CHECK(std::find(s.begin(), s.end(), i) != s.end());
    }
  } while (advance_point(x, shape));
}

TEST_CASE("vertices") {
  const LatticeShape one(1, 2);
  std::vector<LatticePoint> got;
  for (const auto& v : vertices(one)) got.push_back(v);
  CHECK(got == std::vector<LatticePoint>{{0}, {2}});

  const LatticeShape two(2, 3);
  got.clear();
  for (const auto& v : vertices(two)) got.push_back(v);
  CHECK(got == std::vector<LatticePoint>{{0, 0}, {0, 3}, {3, 0}, {3, 3}});

  CHECK(vertices(LatticeShape(5, 2)).size() == 32);

  // Every vertex has support == kernel.
  const LatticeShape shape(4, 2);
  for (const auto& v : vertices(shape)) {
    CHECK(support(v) == kernel(v, shape));
  }
}

TEST_CASE("vertices_minus_i yields reduced vertices") {
  const LatticeShape shape(3, 2);
  std::size_t count = 0;
  for (const auto& v : vertices_minus_i(shape, 1)) {
    CHECK(v.size() == 2);
    for (int c : v) CHECK((c == 0 || c == 2));
    ++count;
  }
  CHECK(count == 4);
  CHECK_THROWS_AS(vertices_minus_i(shape, 3), std::out_of_range);
}

TEST_CASE("bump, with_coord, bump_all") {
  const LatticeShape shape(2, 2);
  CHECK(bump({0, 0}, 0, shape) == LatticePoint{1, 0});
  CHECK_THROWS_AS(bump({2, 0}, 0, shape), std::invalid_argument);
  CHECK_THROWS_AS(bump({0, 0}, 2, shape), std::out_of_range);

  CHECK(with_coord({2, 1, 1}, 0, 0) == LatticePoint{0, 1, 1});

  CHECK(bump_all({1, 0}, shape) == LatticePoint{2, 1});
  CHECK_THROWS_AS(bump_all({1, 2}, shape), std::invalid_argument);
}

TEST_CASE("slice enumeration tags and counts") {
  const LatticeShape shape(2, 2);
  std::vector<LatticePoint> reduced;
  for (const SlicePoint& sp : enumerate_slice(shape, 0)) {
    reduced.push_back(sp.reduced);
  }
  CHECK(reduced == std::vector<LatticePoint>{{0}, {1}, {2}});

  const LatticeShape shape3(3, 2);
  std::size_t count = 0;
  std::set<LatticePoint> distinct;
  for (const SlicePoint& sp : enumerate_slice(shape3, 1)) {
    distinct.insert(sp.reduced);
    ++count;
  }
  CHECK(count == 9);
  CHECK(distinct.size() == 9);

  // The element (1,1) of L_{-1}: support 2, kernel 0, and its base index is
  // the flat index of (0,1,1).
  bool seen = false;
  for (const SlicePoint& sp : enumerate_slice(shape3, 0)) {
    if (sp.reduced == LatticePoint{1, 1}) {
      seen = true;
      CHECK(sp.support_size == 2);
      CHECK(sp.kernel_size == 0);
      CHECK(sp.base_index == flat_index({0, 1, 1}, shape3));
    }
  }
  CHECK(seen);
}

TEST_CASE("slice base indices embed levels of the dropped axis") {
  const LatticeShape shape(3, 3);
  for (int axis = 0; axis < 3; ++axis) {
    const std::size_t st = shape.stride(axis);
    for (const SlicePoint& sp : enumerate_slice(shape, axis)) {
      for (int level = 0; level <= shape.k(); ++level) {
        LatticePoint full = sp.reduced;
        full.insert(full.begin() + axis, level);
        CHECK(sp.base_index + static_cast<std::size_t>(level) * st ==
              flat_index(full, shape));
      }
      // Tags match the definitions applied to the reduced point.
      CHECK(sp.support_size == support_size(sp.reduced));
      CHECK(sp.kernel_size ==
            static_cast<int>(kernel(sp.reduced, shape).size()));
    }
  }
}

TEST_CASE("slice of a one-attribute lattice is a single empty point") {
  const LatticeShape shape(1, 3);
  std::size_t count = 0;
  for (const SlicePoint& sp : enumerate_slice(shape, 0)) {
    CHECK(sp.reduced.empty());
    CHECK(sp.support_size == 0);
    CHECK(sp.kernel_size == 0);
    CHECK(sp.base_index == 0);
    ++count;
  }
  CHECK(count == 1);
}

TEST_CASE("bumping grows the kernel only along the bumped axis") {
  const LatticeShape shape(3, 2);
  LatticePoint x(3, 0);
  do {
    for (int i = 0; i < 3; ++i) {
      if (x[static_cast<std::size_t>(i)] == shape.k()) continue;
      const auto before = kernel(x, shape);
      const auto after = kernel(bump(x, i, shape), shape);
      for (int j : before) {
        if (j == i) continue;
        CHECK(std::find(after.begin(), after.end(), j) != after.end());
      }
    }
  } while (advance_point(x, shape));
}
