#include <catch2/catch_amalgamated.hpp>

#include "tropinflect/dual_subdivision.hpp"
#include "tropinflect/tropical_polynomial.hpp"

using namespace tropinflect;

namespace {
const char* kConic = "x^2+y^2+2x+2y+3*x*y+3";
}

TEST_CASE("parse the running conic") {
  auto p = parse_tropical(kConic);
  REQUIRE(p.terms.size() == 6);
  CHECK(p.terms.at({0, 0}) == 3);
  CHECK(p.terms.at({1, 1}) == 3);
  CHECK(p.terms.at({2, 0}) == 0);
  CHECK(p.terms.at({0, 2}) == 0);
  CHECK(p.terms.at({1, 0}) == 2);
  CHECK(p.terms.at({0, 1}) == 2);
}

TEST_CASE("parse a line and duplicate exponents") {
  auto line = parse_tropical("x+y+0");
  REQUIRE(line.terms.size() == 3);
  CHECK(line.terms.at({0, 0}) == 0);

  auto dup = parse_tropical("5+5");
  REQUIRE(dup.terms.size() == 1);
  CHECK(dup.terms.at({0, 0}) == 5);

  auto dup2 = parse_tropical("3+7+2");
  CHECK(dup2.terms.at({0, 0}) == 7);
}

TEST_CASE("parse fractions, decimals, negatives, implicit products") {
  auto p = parse_tropical("1/2*x + -0.25*y + 2x*y^3");
  CHECK(p.terms.at({1, 0}) == Rat(1, 2));
  CHECK(p.terms.at({0, 1}) == Rat(-1, 4));
  CHECK(p.terms.at({1, 3}) == 2);
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_tropical(""), ParseError);
  CHECK_THROWS_AS(parse_tropical("x+"), ParseError);
  CHECK_THROWS_AS(parse_tropical("x^"), ParseError);
  CHECK_THROWS_AS(parse_tropical("x+*y"), ParseError);
  try {
    parse_tropical("x + $");
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("round trip through to_string") {
  for (const char* s : {kConic, "x+y+0", "1/2*x+y^2+-3"}) {
    auto p = parse_tropical(s);
    CHECK(parse_tropical(to_string(p)) == p);
  }
}

TEST_CASE("eval on the conic") {
  auto p = parse_tropical(kConic);
  auto r0 = eval(p, {0, 0});
  CHECK(r0.value == 3);
  CHECK(r0.argmax == std::vector<IVec2>{{0, 0}, {1, 1}});

  auto r1 = eval(p, {1, -1});
  CHECK(r1.value == 3);
  CHECK(r1.argmax == std::vector<IVec2>{{0, 0}, {1, 0}, {1, 1}});

  auto r2 = eval(parse_tropical("x+y+0"), {-5, -7});
  CHECK(r2.value == 0);
  CHECK(r2.argmax == std::vector<IVec2>{{0, 0}});
}

TEST_CASE("product is max-plus convolution") {
  auto line = parse_tropical("x+y+0");
  auto sq = product(line, line);
  CHECK(sq.terms.at({1, 1}) == 0);
  CHECK(sq.terms.at({1, 0}) == 0);
  CHECK(sq.terms.at({2, 0}) == 0);
  CHECK(sq.terms.at({0, 0}) == 0);

  auto p = parse_tropical(kConic);
  CHECK(product(p, parse_tropical("0")) == p);
  auto shifted = product(p, parse_tropical("7"));
  for (const auto& [e, c] : p.terms) CHECK(shifted.terms.at(e) == c + 7);
}

TEST_CASE("product evaluates as the sum of evaluations") {
  auto p = parse_tropical(kConic);
  auto q = parse_tropical("1/3*x+y+5");
  auto pq = product(p, q);
  for (int x = -4; x <= 4; ++x)
    for (int y = -4; y <= 4; ++y) {
      QVec2 pt{Rat(x, 3), Rat(y, 2)};
      CHECK(eval(pq, pt).value == eval(p, pt).value + eval(q, pt).value);
    }
}

TEST_CASE("dual subdivision of the conic is four unit triangles") {
  auto s = dual_subdivision(parse_tropical(kConic));
  REQUIRE(s.cells.size() == 4);
  CHECK(subdivision_tiles(s));
  std::vector<LatticePolygon> expected = {
      LatticePolygon({{0, 0}, {1, 0}, {1, 1}}),
      LatticePolygon({{0, 0}, {0, 1}, {1, 1}}),
      LatticePolygon({{1, 0}, {2, 0}, {1, 1}}),
      LatticePolygon({{0, 1}, {0, 2}, {1, 1}}),
  };
  for (const auto& want : expected) {
    bool found = false;
    for (const auto& cell : s.cells)
      if (cell.poly == want) found = true;
    CHECK(found);
  }
  for (const auto& cell : s.cells) CHECK(cell.area == 1);
}

TEST_CASE("dual subdivision of a line is one cell") {
  auto s = dual_subdivision(parse_tropical("x+y+0"));
  REQUIRE(s.cells.size() == 1);
  CHECK(s.cells[0].poly == standard_triangle(1));
  CHECK(s.edges.size() == 3);
  for (const auto& e : s.edges) CHECK(e.boundary);
}

TEST_CASE("subdivision area sums match the Newton polygon") {
  for (const char* s : {kConic, "x+y+0", "x^2+y+0", "x^3+y^3+3x*y+1"}) {
    CHECK(subdivision_tiles(dual_subdivision(parse_tropical(s))));
  }
}

TEST_CASE("hidden coefficients leave non-vertex lattice points out of the hull") {
  // a11 far below the hull: single cell T_2 and (1,1) is not a member vertex
  auto p = parse_tropical("x^2+y^2+0x+0y+-100*x*y+0");
  auto s = dual_subdivision(p);
  REQUIRE(s.cells.size() == 1);
  CHECK(s.cells[0].poly == standard_triangle(2));
}

TEST_CASE("support planes touch exactly the cell members") {
  auto p = parse_tropical(kConic);
  auto s = dual_subdivision(p);
  for (const auto& cell : s.cells) {
    for (const auto& [e, c] : p.terms) {
      Rat lam = cell.plane(e);
      bool member = false;
      for (const auto& m : cell.members)
        if (m == e) member = true;
      if (member)
        CHECK(lam == c);
      else
        CHECK(lam > c);
    }
  }
}
