#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "tropinflect/intersection.hpp"

namespace tropinflect {

/// 3*Area(D) minus the boundary corrections r_delta.
///
/// An edge parallel to an edge of the unit triangle counts once or twice
/// depending on which side the polygon sits: supported on i=a with D in
/// {i<=a} (resp. j=a with {j<=a}, i+j=a with {i+j>=a}) counts
/// Card(delta cap Z^2)-1, the opposite side twice that, any other
/// direction zero.
inline Int i_delta(const LatticePolygon& poly) {
  if (poly.dim() != 2) throw std::invalid_argument("i_delta: polygon must be 2-dimensional");
  Int total = 3 * integer_area(poly);
  const auto& v = poly.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const IVec2& a = v[i];
    const IVec2& b = v[(i + 1) % v.size()];
    IVec2 d = b - a;  // ccw: interior on the left
    Int len = lattice_length(a, b);
    Int r = 0;
    if (d.y == 0) {
      // horizontal, on j = a.y; interior above for d.x > 0
      r = d.x > 0 ? 2 * len : len;
    } else if (d.x == 0) {
      // vertical, on i = a.x; interior right of the line for d.y < 0
      r = d.y < 0 ? 2 * len : len;
    } else if (d.x + d.y == 0) {
      // antidiagonal, on i+j = a.x+a.y; interior in {i+j <= a} for d pointing (-1,1)
      r = d.x < 0 ? 2 * len : len;
    }
    total -= r;
  }
  return total;
}

/// Number of bounded curve edges at vertex v lying on the standard line
/// directions; dually, bounded degree-one edges of the dual triangle.
namespace detail {
inline bool is_line_direction(const IVec2& d) {
  return d == IVec2{-1, 0} || d == IVec2{0, -1} || d == IVec2{1, 1};
}
}  // namespace detail

struct TangencyDatum {
  int vertex = -1;
  TropicalPolynomial line;
  IntersectionComponent component;  // the component of C cap L containing v
  enum Class { VertexOnly, BoundedEdge, UnboundedEdge, ThreeEdges } cls = VertexOnly;
  Int total = 0;       // (C o_T L)_E
  bool gate = false;   // total >= 3
  std::vector<int> covered_edges;  // edge ids at v along line directions
  std::vector<int> covered_rays;   // ray ids at v along line directions
};

/// Standard tropical line with vertex at p.
inline TropicalPolynomial line_at(const QVec2& p) {
  TropicalPolynomial l;
  l.add_term({0, 0}, 0);
  l.add_term({1, 0}, -p.x);
  l.add_term({0, 1}, -p.y);
  return l;
}

/// Places the standard line at vertex v, intersects, and classifies the
/// component containing v.
inline TangencyDatum tangency_component(const TropicalCurve& c, int vertex) {
  if (!is_nonsingular(c)) throw std::invalid_argument("tangency_component: singular curve");
  TangencyDatum t;
  t.vertex = vertex;
  const QVec2& v = c.vpos(vertex);
  t.line = line_at(v);
  TropicalCurve lc = build_curve(t.line);

  auto comps = components(c, lc);
  bool found = false;
  for (auto& comp : comps)
    if (comp.contains(v)) {
      t.component = comp;
      found = true;
      break;
    }
  if (!found) throw std::logic_error("tangency_component: vertex not in any component");
  t.total = t.component.total;
  t.gate = t.total >= 3;

  for (int e : c.edges_at(vertex))
    if (detail::is_line_direction(c.dir_from(e, vertex))) t.covered_edges.push_back(e);
  for (int r : c.rays_at(vertex))
    if (detail::is_line_direction(c.rays[r].dir)) t.covered_rays.push_back(r);

  std::size_t covered = t.covered_edges.size() + t.covered_rays.size();
  if (covered == 0)
    t.cls = TangencyDatum::VertexOnly;
  else if (covered == 1)
    t.cls = t.covered_edges.empty() ? TangencyDatum::UnboundedEdge : TangencyDatum::BoundedEdge;
  else if (covered == 3)
    t.cls = TangencyDatum::ThreeEdges;
  else
    throw std::logic_error("tangency_component: two covered edges cannot occur on a primitive cell");
  return t;
}

/// A contributed part of the inflection locus of one line.
struct InflectionPiece {
  Piece geometry;
  int vertex;  // contributing vertex
};

/// The location set of one tangency datum, per the eight-case table:
/// distances are lattice lengths measured along the edge from v.
inline std::vector<InflectionPiece> inflection_locus_of_vertex(const TropicalCurve& c,
                                                               const TangencyDatum& t,
                                                               const std::map<int, Rat>& lengths) {
  if (!t.gate) throw std::invalid_argument("inflection_locus_of_vertex: gate not passed");
  const QVec2 v = c.vpos(t.vertex);
  std::vector<InflectionPiece> out;
  auto point_piece = [&](const QVec2& p) { out.push_back({{Piece::Point, p, {}, {}}, t.vertex}); };
  auto point_on = [&](int e, const Rat& dist) {
    return v + dist * QVec2(c.dir_from(e, t.vertex));
  };

  switch (t.cls) {
    case TangencyDatum::VertexOnly:
    case TangencyDatum::UnboundedEdge:
      point_piece(v);
      return out;
    case TangencyDatum::BoundedEdge: {
      int e = t.covered_edges[0];
      point_piece(v);
      point_piece(point_on(e, lengths.at(e) / 3));
      return out;
    }
    case TangencyDatum::ThreeEdges:
      break;
  }

  if (t.covered_edges.size() == 2) {
    // two bounded edges e1 >= e2 and one unbounded e3
    int e1 = t.covered_edges[0], e2 = t.covered_edges[1];
    if (lengths.at(e1) < lengths.at(e2)) std::swap(e1, e2);
    if (lengths.at(e1) > lengths.at(e2)) {
      point_piece(point_on(e1, (lengths.at(e1) - lengths.at(e2)) / 3));
    } else {
      const auto& ray = c.rays[t.covered_rays[0]];
      out.push_back({{Piece::Ray, v, {}, ray.dir}, t.vertex});
    }
    return out;
  }
  if (t.covered_edges.size() != 3)
    throw std::logic_error("inflection_locus_of_vertex: gate passed with one bounded edge");

  // three bounded edges sorted by decreasing length
  std::vector<int> es = t.covered_edges;
  std::sort(es.begin(), es.end(), [&](int a, int b) {
    if (lengths.at(a) != lengths.at(b)) return lengths.at(a) > lengths.at(b);
    return a < b;
  });
  Rat l1 = lengths.at(es[0]), l2 = lengths.at(es[1]), l3 = lengths.at(es[2]);
  if (l2 > l3) {
    point_piece(point_on(es[0], (l1 - l3) / 3));
    point_piece(point_on(es[1], (l2 - l3) / 3));
  } else if (l1 > l2) {
    out.push_back({{Piece::Segment, v, point_on(es[0], (l1 - l2) / 3), {}}, t.vertex});
  } else {
    point_piece(v);
  }
  return out;
}

struct InflectionComponent {
  std::vector<Piece> geometry;
  Int mu = 0;
  int mu_real = 0;
  bool null_component = false;   // mu == 0
  bool ambiguous_rule = false;   // more than one multiplicity rule matched
  std::vector<int> vertices;     // contributing curve vertices

  bool contains(const QVec2& p) const {
    for (const auto& g : geometry)
      if (detail::point_on_piece(p, g)) return true;
    return false;
  }
  bool compact() const {
    for (const auto& g : geometry)
      if (g.kind == Piece::Ray) return false;
    return true;
  }
};

struct InflectionSummary {
  Int d = 0;
  Int sum_mu = 0;
  Int sum_mu_real = 0;
  bool generic = false;
};

struct GenericityReport {
  bool generic = true;
  std::vector<int> witnesses;  // offending vertices
};

/// True unless some vertex dual to a unit triangle has three bounded adjacent
/// edges without three distinct lengths.
inline GenericityReport genericity_check(const TropicalCurve& c) {
  GenericityReport rep;
  auto lengths = edge_lengths(c);
  for (std::size_t v = 0; v < c.vertices.size(); ++v) {
    const auto& cell = c.subdiv.cells[c.vertices[v].cell].poly;
    if (!is_unit_triangle(cell)) continue;
    auto es = c.edges_at(static_cast<int>(v));
    if (es.size() != 3) continue;
    Rat a = lengths.at(es[0]), b = lengths.at(es[1]), d = lengths.at(es[2]);
    if (a == b || a == d || b == d) {
      rep.generic = false;
      rep.witnesses.push_back(static_cast<int>(v));
    }
  }
  return rep;
}

struct InflectionResult {
  std::vector<InflectionComponent> components;
  InflectionSummary summary;
  std::vector<TangencyDatum> tangencies;  // gate-passing ones, by vertex order
};

/// Enumerates the inflection components of a non-singular curve with Newton
/// polygon T_d: union of the per-vertex loci, decomposed into connected
/// components, with multiplicities mu and real multiplicities.
inline InflectionResult inflection_components(const TropicalCurve& c) {
  if (!is_nonsingular(c))
    throw std::invalid_argument("inflection_components: curve must be non-singular");
  if (!c.degree || *c.degree < 2)
    throw std::invalid_argument("inflection_components: Newton polygon must be T_d with d >= 2");

  InflectionResult res;
  res.summary.d = *c.degree;
  auto lengths = edge_lengths(c);

  std::vector<InflectionPiece> pieces;
  for (std::size_t v = 0; v < c.vertices.size(); ++v) {
    auto t = tangency_component(c, static_cast<int>(v));
    if (!t.gate) continue;
    auto loc = inflection_locus_of_vertex(c, t, lengths);
    pieces.insert(pieces.end(), loc.begin(), loc.end());
    res.tangencies.push_back(std::move(t));
  }

  // merge pieces into connected components (they are disjoint except in
  // degenerate length configurations)
  std::vector<int> parent(pieces.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 1; j < pieces.size(); ++j)
      if (detail::pieces_touch(pieces[i].geometry, pieces[j].geometry)) parent[find(i)] = find(j);
  std::map<int, std::vector<int>> groups;
  for (std::size_t i = 0; i < pieces.size(); ++i) groups[find(static_cast<int>(i))].push_back(static_cast<int>(i));

  // vertex positions dual to unit triangles, for the mu rules
  std::set<QVec2> unit_vertices;
  std::map<QVec2, int> vertex_at;
  for (std::size_t v = 0; v < c.vertices.size(); ++v) {
    vertex_at[c.vpos(v)] = static_cast<int>(v);
    if (is_unit_triangle(c.subdiv.cells[c.vertices[v].cell].poly)) unit_vertices.insert(c.vpos(v));
  }

  for (auto& [root, idxs] : groups) {
    InflectionComponent comp;
    std::vector<Piece> geo;
    for (int i : idxs) {
      geo.push_back(pieces[i].geometry);
      comp.vertices.push_back(pieces[i].vertex);
    }
    std::sort(comp.vertices.begin(), comp.vertices.end());
    comp.vertices.erase(std::unique(comp.vertices.begin(), comp.vertices.end()), comp.vertices.end());
    comp.geometry = detail::merge_pieces(std::move(geo));

    // multiplicity rules, in order
    bool is_single_point = comp.geometry.size() == 1 && comp.geometry[0].kind == Piece::Point;
    bool rule_vertex = false;
    Int mu_vertex = 0;
    if (is_single_point) {
      auto it = vertex_at.find(comp.geometry[0].a);
      if (it != vertex_at.end() && !unit_vertices.count(comp.geometry[0].a)) {
        rule_vertex = true;
        mu_vertex = i_delta(c.subdiv.cells[c.vertices[it->second].cell].poly);
      }
    }
    bool bounded = comp.compact();
    bool rule_six = false;
    if (bounded) {
      for (const auto& uv : unit_vertices)
        if (comp.contains(uv)) rule_six = true;
    }
    if (rule_vertex) {
      comp.mu = mu_vertex;
      comp.ambiguous_rule = rule_six;
    } else if (rule_six) {
      comp.mu = 6;
    } else {
      comp.mu = 3;
    }
    comp.null_component = comp.mu == 0;
    comp.mu_real = (comp.mu % 2 != 0) ? 1 : 0;
    res.components.push_back(std::move(comp));
  }
  std::sort(res.components.begin(), res.components.end(),
            [](const InflectionComponent& a, const InflectionComponent& b) {
              return a.geometry < b.geometry;
            });

  for (const auto& comp : res.components) {
    res.summary.sum_mu += comp.mu;
    res.summary.sum_mu_real += comp.mu_real;
  }
  res.summary.generic = genericity_check(c).generic;
  return res;
}

}  // namespace tropinflect
