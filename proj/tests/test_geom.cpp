#include <catch2/catch_amalgamated.hpp>

#include "tropinflect/point.hpp"
#include "tropinflect/polygon.hpp"

using namespace tropinflect;

TEST_CASE("primitive_direction divides by the gcd and keeps orientation") {
  CHECK(primitive_direction(IVec2{2, -2}) == IVec2{1, -1});
  CHECK(primitive_direction(IVec2{0, -3}) == IVec2{0, -1});
  CHECK(primitive_direction(IVec2{1, 1}) == IVec2{1, 1});
  CHECK_THROWS_AS(primitive_direction(IVec2{0, 0}), std::invalid_argument);
}

TEST_CASE("primitive_direction is idempotent") {
  for (int x = -5; x <= 5; ++x)
    for (int y = -5; y <= 5; ++y) {
      if (x == 0 && y == 0) continue;
      IVec2 u = primitive_direction(IVec2{x, y});
      CHECK(primitive_direction(u) == u);
    }
}

TEST_CASE("lattice_length counts interior lattice points plus one") {
  CHECK(lattice_length(IVec2{0, 0}, IVec2{3, 0}) == 3);
  CHECK(lattice_length(IVec2{0, 0}, IVec2{2, 2}) == 2);
  CHECK(lattice_length(IVec2{1, 2}, IVec2{2, 1}) == 1);
  CHECK_THROWS_AS(lattice_length(IVec2{1, 1}, IVec2{1, 1}), std::invalid_argument);
}

TEST_CASE("lattice_length symmetry and translation invariance") {
  IVec2 pts[] = {{0, 0}, {3, 1}, {-2, 4}, {5, -5}};
  for (const auto& a : pts)
    for (const auto& b : pts) {
      if (a == b) continue;
      CHECK(lattice_length(a, b) == lattice_length(b, a));
      IVec2 t{7, -3};
      CHECK(lattice_length(a + t, b + t) == lattice_length(a, b));
    }
}

TEST_CASE("integer_area on standard triangles") {
  CHECK(integer_area(standard_triangle(1)) == 1);
  CHECK(integer_area(standard_triangle(2)) == 4);
  CHECK(integer_area(LatticePolygon({{0, 0}, {1, 2}, {2, 1}})) == 3);
}

TEST_CASE("integer_area is GL2(Z)- and translation-invariant") {
  LatticePolygon p({{0, 0}, {3, 1}, {1, 4}, {-1, 2}});
  Int a = integer_area(p);
  // unimodular map (x,y) -> (x+y, x+2y), then translate
  std::vector<IVec2> mapped;
  for (const auto& v : p.vertices) mapped.push_back({v.x + v.y + 5, v.x + 2 * v.y - 3});
  CHECK(integer_area(LatticePolygon(mapped)) == a);
}

TEST_CASE("integer_area is additive under subdivision") {
  LatticePolygon whole({{0, 0}, {4, 0}, {0, 4}});
  LatticePolygon a({{0, 0}, {4, 0}, {0, 2}});
  LatticePolygon b({{4, 0}, {0, 2}, {0, 4}});
  CHECK(integer_area(a) + integer_area(b) == integer_area(whole));
}

TEST_CASE("convex hull is ccw from the lexicographic minimum") {
  LatticePolygon p({{2, 0}, {0, 0}, {1, 0}, {2, 2}, {0, 2}, {1, 1}});
  REQUIRE(p.vertices.size() == 4);
  CHECK(p.vertices[0] == IVec2{0, 0});
  CHECK(p.vertices[1] == IVec2{2, 0});
  CHECK(p.vertices[2] == IVec2{2, 2});
  CHECK(p.vertices[3] == IVec2{0, 2});
}

TEST_CASE("minkowski sum of unit triangles") {
  LatticePolygon t1 = standard_triangle(1);
  CHECK(minkowski_sum(t1, t1) == standard_triangle(2));
  LatticePolygon down({{1, 0}, {0, 1}, {1, 1}});
  CHECK(integer_area(minkowski_sum(down, t1)) == 6);
}

TEST_CASE("lattice_points enumerates a triangle") {
  auto pts = lattice_points(standard_triangle(2));
  CHECK(pts.size() == 6);
  CHECK(contains(standard_triangle(2), IVec2{1, 1}));
  CHECK_FALSE(contains(standard_triangle(2), IVec2{2, 1}));
}
