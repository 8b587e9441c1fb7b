#include <catch2/catch_amalgamated.hpp>

#include "tropinflect/generators.hpp"
#include "tropinflect/inflection.hpp"

using namespace tropinflect;

namespace {

int vertex_at(const TropicalCurve& c, const QVec2& p) {
  for (std::size_t i = 0; i < c.vertices.size(); ++i)
    if (c.vpos(i) == p) return static_cast<int>(i);
  FAIL("vertex not found");
  return -1;
}

/// Number of bounded covered (degree-one) edges of the dual cell at v.
Int gamma_of(const TropicalCurve& c, int v) {
  Int g = 0;
  for (int e : c.edges_at(v))
    if (tropinflect::detail::is_line_direction(c.dir_from(e, v))) ++g;
  return g;
}

}  // namespace

TEST_CASE("i_delta spot values") {
  CHECK(i_delta(standard_triangle(1)) == -3);
  CHECK(i_delta(LatticePolygon({{0, 0}, {1, 2}, {2, 1}})) == 7);
  CHECK(i_delta(LatticePolygon({{1, 0}, {0, 1}, {1, 1}})) == 0);
}

TEST_CASE("i_delta of T_d counts torus inflection points") {
  for (int d = 1; d <= 6; ++d) CHECK(i_delta(standard_triangle(d)) == 3 * d * (d - 2));
}

TEST_CASE("i_delta is negative exactly on unit triangles") {
  // all primitive triangles with coordinates in [-5,5]^2 (anchored at their
  // lexicographic minimum, which is enough by translation invariance)
  for (int bx = -5; bx <= 5; ++bx)
    for (int by = -5; by <= 5; ++by)
      for (int cx = -5; cx <= 5; ++cx)
        for (int cy = -5; cy <= 5; ++cy) {
          IVec2 a{0, 0}, b{bx, by}, c{cx, cy};
          if (cross(b, c) == 0) continue;
          LatticePolygon t({a, b, c});
          if (integer_area(t) != 1) continue;
          bool unit = is_unit_triangle(t);
          if (unit)
            CHECK(i_delta(t) < 0);
          else
            CHECK(i_delta(t) >= 0);
        }
}

TEST_CASE("tangency at a honeycomb down-vertex: component is the vertex, total 2") {
  auto c = build_curve(honeycomb_poly(3, 1));
  // find a vertex whose dual is a down-triangle
  int down = -1;
  for (std::size_t v = 0; v < c.vertices.size(); ++v) {
    const auto& cell = c.subdiv.cells[c.vertices[v].cell].poly;
    IVec2 o = cell.vertices[0];
    if (cell.vertices.size() == 3 && cell.vertices[1] - o == IVec2{1, -1} &&
        cell.vertices[2] - o == IVec2{1, 0}) {
      down = static_cast<int>(v);
      break;
    }
  }
  REQUIRE(down >= 0);
  auto t = tangency_component(c, down);
  CHECK(t.cls == TangencyDatum::VertexOnly);
  CHECK(t.total == 2);
  CHECK_FALSE(t.gate);
}

TEST_CASE("tangency totals at honeycomb up-vertices: 3 with two bounded edges, 4 with three") {
  auto c = build_curve(honeycomb_poly(4, 1));
  bool saw3 = false, saw4 = false;
  for (std::size_t v = 0; v < c.vertices.size(); ++v) {
    if (!is_unit_triangle(c.subdiv.cells[c.vertices[v].cell].poly)) continue;
    auto t = tangency_component(c, static_cast<int>(v));
    if (t.cls != TangencyDatum::ThreeEdges) continue;
    if (t.covered_edges.size() == 2) {
      CHECK(t.total == 3);
      saw3 = true;
    } else if (t.covered_edges.size() == 3) {
      CHECK(t.total == 4);
      saw4 = true;
    }
  }
  CHECK(saw3);
  CHECK(saw4);
}

TEST_CASE("locus cases: bounded edge and three bounded edges") {
  // Curve built by hand is fiddly; instead check the case arithmetic through
  // a synthetic tangency datum on the honeycomb quartic's interior vertex.
  auto c = build_curve(honeycomb_poly(4, 1));
  auto lens = edge_lengths(c);
  for (std::size_t v = 0; v < c.vertices.size(); ++v) {
    auto t = tangency_component(c, static_cast<int>(v));
    if (!t.gate) continue;
    auto loc = inflection_locus_of_vertex(c, t, lens);
    if (t.covered_edges.size() == 3) {
      std::vector<Rat> l;
      for (int e : t.covered_edges) l.push_back(lens.at(e));
      std::sort(l.begin(), l.end(), std::greater<Rat>());
      if (l[1] > l[2]) {
        REQUIRE(loc.size() == 2);
        for (const auto& piece : loc) {
          CHECK(piece.geometry.kind == Piece::Point);
          Rat dist = lattice_length_q(c.vpos(t.vertex), piece.geometry.a);
          bool matches = dist == (l[0] - l[2]) / 3 || dist == (l[1] - l[2]) / 3;
          CHECK(matches);
        }
      }
    } else if (t.covered_edges.size() == 2) {
      std::vector<Rat> l;
      for (int e : t.covered_edges) l.push_back(lens.at(e));
      std::sort(l.begin(), l.end(), std::greater<Rat>());
      if (l[0] > l[1]) {
        REQUIRE(loc.size() == 1);
        CHECK(loc[0].geometry.kind == Piece::Point);
        CHECK(lattice_length_q(c.vpos(t.vertex), loc[0].geometry.a) == (l[0] - l[1]) / 3);
      } else {
        REQUIRE(loc.size() == 1);
        CHECK(loc[0].geometry.kind == Piece::Ray);
      }
    }
  }
}

TEST_CASE("the distance formulas at explicit lengths") {
  // three bounded edges with lengths 5,3,1: points at 4/3 and 2/3 from v
  Rat l1 = 5, l2 = 3, l3 = 1;
  CHECK((l1 - l3) / 3 == Rat(4, 3));
  CHECK((l2 - l3) / 3 == Rat(2, 3));
  // bounded-edge case, l = 3: point at distance 1
  CHECK(Rat(3) / 3 == 1);
}

TEST_CASE("honeycomb cubic: three point components of multiplicity 3") {
  auto c = build_curve(honeycomb_poly(3, 1));
  auto res = inflection_components(c);
  REQUIRE(res.components.size() == 3);
  for (const auto& comp : res.components) {
    CHECK(comp.mu == 3);
    CHECK(comp.mu_real == 1);
    REQUIRE(comp.geometry.size() == 1);
    CHECK(comp.geometry[0].kind == Piece::Point);
  }
  CHECK(res.summary.sum_mu == 9);
  CHECK(res.summary.sum_mu_real == 3);
  CHECK(res.summary.generic);
}

TEST_CASE("honeycomb quartic: sum 24, eight odd components") {
  auto c = build_curve(honeycomb_poly(4, 1));
  auto res = inflection_components(c);
  CHECK(res.summary.sum_mu == 24);
  Int odd = 0;
  for (const auto& comp : res.components)
    if (comp.mu % 2 != 0) ++odd;
  CHECK(odd == 8);
  CHECK(res.summary.sum_mu_real == 8);
}

TEST_CASE("generic conic has no inflection components") {
  auto c = build_curve(honeycomb_poly(2, 1));
  auto res = inflection_components(c);
  CHECK(res.summary.sum_mu == 0);
  CHECK(res.components.empty());
}

TEST_CASE("per-vertex multiplicity identity: sum over a line equals i_delta + 3*gamma") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    auto c = build_curve(random_curve_poly(4, seed));
    auto res = inflection_components(c);
    auto lens = edge_lengths(c);
    for (std::size_t v = 0; v < c.vertices.size(); ++v) {
      auto t = tangency_component(c, static_cast<int>(v));
      Int from_v = 0;
      for (const auto& comp : res.components) {
        bool mine = std::find(comp.vertices.begin(), comp.vertices.end(), static_cast<int>(v)) !=
                    comp.vertices.end();
        if (mine && comp.vertices.size() == 1) from_v += comp.mu;
      }
      Int expect = 0;
      if (t.gate)
        expect = i_delta(c.subdiv.cells[c.vertices[v].cell].poly) + 3 * gamma_of(c, static_cast<int>(v));
      CHECK(from_v == expect);
    }
  }
}

TEST_CASE("sum rule on random non-singular curves") {
  for (int d = 3; d <= 4; ++d)
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      auto c = build_curve(random_curve_poly(d, seed));
      auto res = inflection_components(c);
      CHECK(res.summary.sum_mu == 3 * d * (d - 2));
      Int odd = 0;
      for (const auto& comp : res.components)
        if (comp.mu % 2 != 0) ++odd;
      CHECK(odd <= Int(d) * (d - 2));
    }
}

TEST_CASE("translation invariance of components and multiplicities") {
  auto p = honeycomb_poly(3, 2);
  QVec2 t{Rat(7, 2), Rat(-4, 3)};
  auto res = inflection_components(build_curve(p));
  auto res_t = inflection_components(build_curve(translate_curve(p, t)));
  REQUIRE(res.components.size() == res_t.components.size());
  CHECK(res.summary.sum_mu == res_t.summary.sum_mu);
  for (std::size_t i = 0; i < res.components.size(); ++i) {
    CHECK(res.components[i].mu == res_t.components[i].mu);
    REQUIRE(res.components[i].geometry.size() == 1);
    CHECK(res.components[i].geometry[0].a + t == res_t.components[i].geometry[0].a);
  }
}

TEST_CASE("genericity check flags equal lengths and accepts the generator output") {
  auto good = build_curve(honeycomb_poly(4, 3));
  CHECK(genericity_check(good).generic);

  // unjittered honeycomb of degree 5 has equal-length 3-bounded vertices
  Rng rng(0);
  auto flat = build_curve(honeycomb_lift(5, rng, 5, 0));
  auto rep = genericity_check(flat);
  CHECK_FALSE(rep.generic);
  CHECK_FALSE(rep.witnesses.empty());

  // vacuously generic: conic
  CHECK(genericity_check(build_curve(parse_tropical("x^2+y^2+2x+2y+3*x*y+3"))).generic);
}

TEST_CASE("inflection components lie on the curve and are disjoint") {
  auto c = build_curve(honeycomb_poly(4, 2));
  auto res = inflection_components(c);
  for (std::size_t i = 0; i < res.components.size(); ++i) {
    for (const auto& g : res.components[i].geometry) {
      CHECK(locate(c, g.a).kind != CurveLocation::Off);
      if (g.kind == Piece::Segment) CHECK(locate(c, g.b).kind != CurveLocation::Off);
    }
    for (std::size_t j = i + 1; j < res.components.size(); ++j)
      for (const auto& ga : res.components[i].geometry)
        for (const auto& gb : res.components[j].geometry)
          CHECK_FALSE(tropinflect::detail::pieces_touch(ga, gb));
  }
}

TEST_CASE("preconditions: singular or non-T_d curves are rejected") {
  auto sing = build_curve(parse_tropical("x^2+y+0"));
  CHECK_THROWS_AS(inflection_components(sing), std::invalid_argument);
  auto sq = build_curve(parse_tropical(
      "0 + -2x^2 + -2x^2*y^2 + -2y^2 + -3x + -3y + -3x*y + -4x*y^2 + -4x^2*y"));
  CHECK_THROWS_AS(inflection_components(sq), std::invalid_argument);
}
