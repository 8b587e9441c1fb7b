#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "tropinflect/dual_subdivision.hpp"

namespace tropinflect {

struct CurveVertex {
  QVec2 pos;
  int cell;  // dual 2-cell index in the subdivision
};

struct CurveEdge {
  int v1, v2;   // v1 < v2
  IVec2 dir;    // primitive direction from v1 to v2
  Int weight;   // lattice length of the dual 1-cell
  int dual;     // index into subdiv.edges
};

struct CurveRay {
  int v;
  IVec2 dir;  // primitive, pointing to infinity
  Int weight;
  int dual;
};

/// Weighted plane tropical curve dual to the subdivision of its polynomial.
struct TropicalCurve {
  TropicalPolynomial poly;
  DualSubdivision subdiv;
  std::vector<CurveVertex> vertices;
  std::vector<CurveEdge> edges;
  std::vector<CurveRay> rays;
  std::optional<Int> degree;  // d when the Newton polygon is exactly T_d

  const QVec2& vpos(int v) const { return vertices[v].pos; }

  std::vector<int> edges_at(int v) const {
    std::vector<int> r;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (edges[i].v1 == v || edges[i].v2 == v) r.push_back(static_cast<int>(i));
    return r;
  }
  std::vector<int> rays_at(int v) const {
    std::vector<int> r;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (rays[i].v == v) r.push_back(static_cast<int>(i));
    return r;
  }
  /// Direction of edge e away from vertex v.
  IVec2 dir_from(int e, int v) const {
    return edges[e].v1 == v ? edges[e].dir : -edges[e].dir;
  }
  int other_end(int e, int v) const { return edges[e].v1 == v ? edges[e].v2 : edges[e].v1; }
};

/// Outward primitive normal of the edge [a,b] of a ccw polygon.
inline IVec2 outward_normal(const IVec2& a, const IVec2& b) {
  IVec2 d = b - a;
  return primitive_direction(IVec2{d.y, -d.x});
}

inline TropicalCurve build_curve(const TropicalPolynomial& p) {
  TropicalCurve c;
  c.poly = p;
  c.subdiv = dual_subdivision(p);
  if (c.subdiv.dim < 2)
    throw std::invalid_argument("build_curve: Newton polygon is degenerate (classical line)");
  c.degree = degree_if_standard(p);

  // One vertex per 2-cell, at minus the linear part of the cell's support.
  std::vector<std::pair<QVec2, int>> vs;
  for (std::size_t i = 0; i < c.subdiv.cells.size(); ++i) {
    const auto& pl = c.subdiv.cells[i].plane;
    vs.push_back({QVec2{-pl.a, -pl.b}, static_cast<int>(i)});
  }
  std::sort(vs.begin(), vs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<int> cell_to_vertex(c.subdiv.cells.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    c.vertices.push_back({vs[i].first, vs[i].second});
    cell_to_vertex[vs[i].second] = static_cast<int>(i);
  }

  for (std::size_t ei = 0; ei < c.subdiv.edges.size(); ++ei) {
    const auto& de = c.subdiv.edges[ei];
    if (de.boundary) {
      // Dual ray: direction is the outward normal of the Newton polygon here.
      int v = cell_to_vertex[de.cell_a];
      const auto& cell = c.subdiv.cells[de.cell_a].poly;
      IVec2 n;
      bool found = false;
      const auto& cv = cell.vertices;
      for (std::size_t i = 0; i < cv.size(); ++i) {
        IVec2 a = cv[i], b = cv[(i + 1) % cv.size()];
        if ((a == de.p && b == de.q) || (a == de.q && b == de.p)) {
          n = outward_normal(a, b);
          found = true;
          break;
        }
      }
      if (!found) throw std::logic_error("build_curve: dual edge not on its cell hull");
      c.rays.push_back({v, n, de.weight, static_cast<int>(ei)});
    } else {
      int v1 = cell_to_vertex[de.cell_a];
      int v2 = cell_to_vertex[de.cell_b];
      if (v1 > v2) std::swap(v1, v2);
      QVec2 d = c.vertices[v2].pos - c.vertices[v1].pos;
      c.edges.push_back({v1, v2, primitive_direction(d), de.weight, static_cast<int>(ei)});
    }
  }
  std::sort(c.edges.begin(), c.edges.end(), [](const CurveEdge& a, const CurveEdge& b) {
    return std::pair(a.v1, a.v2) < std::pair(b.v1, b.v2);
  });
  std::sort(c.rays.begin(), c.rays.end(), [](const CurveRay& a, const CurveRay& b) {
    if (a.v != b.v) return a.v < b.v;
    return a.dir < b.dir;
  });
  return c;
}

struct BalancingReport {
  std::vector<IVec2> residuals;  // per vertex
  bool balanced = true;
};

inline BalancingReport verify_balancing(const TropicalCurve& c) {
  BalancingReport rep;
  rep.residuals.resize(c.vertices.size(), IVec2{0, 0});
  for (const auto& e : c.edges) {
    rep.residuals[e.v1] = rep.residuals[e.v1] + e.weight * e.dir;
    rep.residuals[e.v2] = rep.residuals[e.v2] + e.weight * (-e.dir);
  }
  for (const auto& r : c.rays) rep.residuals[r.v] = rep.residuals[r.v] + r.weight * r.dir;
  for (const auto& r : rep.residuals)
    if (!r.is_zero()) rep.balanced = false;
  return rep;
}

inline bool is_nonsingular(const TropicalCurve& c) {
  for (const auto& cell : c.subdiv.cells)
    if (cell.area != 1) return false;
  return true;
}

/// Exact length of every bounded edge: lattice steps divided by weight.
inline std::map<int, Rat> edge_lengths(const TropicalCurve& c) {
  std::map<int, Rat> out;
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const auto& e = c.edges[i];
    Rat steps = lattice_length_q(c.vpos(e.v1), c.vpos(e.v2));
    out[static_cast<int>(i)] = steps / Rat(e.weight);
  }
  return out;
}

/// First Betti number of the curve (rays do not contribute).
inline Int first_betti(const TropicalCurve& c) {
  std::vector<int> parent(c.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  for (const auto& e : c.edges) parent[find(e.v1)] = find(e.v2);
  std::size_t comps = 0;
  for (std::size_t i = 0; i < parent.size(); ++i)
    if (find(static_cast<int>(i)) == static_cast<int>(i)) ++comps;
  return Int(c.edges.size()) - Int(c.vertices.size()) + Int(comps);
}

/// Where a point sits on the curve, if anywhere.
struct CurveLocation {
  enum Kind { Off, OnVertex, OnEdge, OnRay } kind = Off;
  int index = -1;
};

inline CurveLocation locate(const TropicalCurve& c, const QVec2& x) {
  for (std::size_t i = 0; i < c.vertices.size(); ++i)
    if (c.vertices[i].pos == x) return {CurveLocation::OnVertex, static_cast<int>(i)};
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const auto& e = c.edges[i];
    QVec2 a = c.vpos(e.v1), b = c.vpos(e.v2);
    QVec2 d = b - a, w = x - a;
    if (d.x * w.y - d.y * w.x != 0) continue;
    Rat t = dot(d, w), len = dot(d, d);
    if (t > 0 && t < len) return {CurveLocation::OnEdge, static_cast<int>(i)};
  }
  for (std::size_t i = 0; i < c.rays.size(); ++i) {
    const auto& r = c.rays[i];
    QVec2 a = c.vpos(r.v), w = x - a;
    if (w.x * r.dir.y - w.y * r.dir.x != 0) continue;
    Rat t = w.x * r.dir.x + w.y * r.dir.y;
    if (t > 0) return {CurveLocation::OnRay, static_cast<int>(i)};
  }
  return {};
}

}  // namespace tropinflect
