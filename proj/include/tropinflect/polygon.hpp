#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "tropinflect/point.hpp"

namespace tropinflect {

/// Convex hull, counterclockwise, starting from the lexicographic minimum.
/// Collinear points interior to hull edges are dropped.
inline std::vector<IVec2> convex_hull(std::vector<IVec2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<IVec2> lo, hi;
  for (const auto& p : pts) {
    while (lo.size() >= 2 && cross(lo.back() - lo[lo.size() - 2], p - lo.back()) <= 0) lo.pop_back();
    lo.push_back(p);
  }
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (hi.size() >= 2 && cross(hi.back() - hi[hi.size() - 2], *it - hi.back()) <= 0) hi.pop_back();
    hi.push_back(*it);
  }
  lo.insert(lo.end(), hi.begin() + 1, hi.end() - 1);
  return lo;
}

/// Convex lattice polygon. Vertices are the exact hull corners, counterclockwise
/// from the lexicographic minimum; may degenerate to a segment or a point.
struct LatticePolygon {
  std::vector<IVec2> vertices;

  LatticePolygon() = default;
  explicit LatticePolygon(const std::vector<IVec2>& pts) : vertices(convex_hull(pts)) {}

  int dim() const {
    if (vertices.size() <= 1) return static_cast<int>(vertices.size()) - 1;
    return vertices.size() == 2 ? 1 : 2;
  }
  friend bool operator==(const LatticePolygon& a, const LatticePolygon& b) {
    return a.vertices == b.vertices;
  }
};

/// Twice the Euclidean area (the normalized integer area of the plane).
inline Int integer_area(const LatticePolygon& p) {
  Int s = 0;
  const auto& v = p.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const IVec2& a = v[i];
    const IVec2& b = v[(i + 1) % v.size()];
    s += cross(a, b);
  }
  return int_abs(s);
}

inline LatticePolygon translate(const LatticePolygon& p, const IVec2& t) {
  std::vector<IVec2> v;
  v.reserve(p.vertices.size());
  for (const auto& q : p.vertices) v.push_back(q + t);
  return LatticePolygon(v);
}

/// Translate of the unit triangle (0,0),(1,0),(0,1)?
inline bool is_unit_triangle(const LatticePolygon& p) {
  if (p.vertices.size() != 3) return false;
  IVec2 o = p.vertices[0];
  return p.vertices[1] - o == IVec2{1, 0} && p.vertices[2] - o == IVec2{0, 1};
}

inline LatticePolygon minkowski_sum(const LatticePolygon& a, const LatticePolygon& b) {
  std::vector<IVec2> pts;
  for (const auto& p : a.vertices)
    for (const auto& q : b.vertices) pts.push_back(p + q);
  return LatticePolygon(pts);
}

/// All lattice points of a convex polygon (including boundary).
inline std::vector<IVec2> lattice_points(const LatticePolygon& p) {
  std::vector<IVec2> out;
  if (p.vertices.empty()) return out;
  if (p.dim() == 0) return {p.vertices[0]};
  if (p.dim() == 1) {
    Int len = lattice_length(p.vertices[0], p.vertices[1]);
    IVec2 step = primitive_direction(p.vertices[1] - p.vertices[0]);
    for (Int k = 0; k <= len; ++k) out.push_back(p.vertices[0] + k * step);
    return out;
  }
  Int xmin = p.vertices[0].x, xmax = xmin, ymin = p.vertices[0].y, ymax = ymin;
  for (const auto& v : p.vertices) {
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  const auto& vs = p.vertices;
  for (Int x = xmin; x <= xmax; ++x)
    for (Int y = ymin; y <= ymax; ++y) {
      IVec2 q{x, y};
      bool inside = true;
      for (std::size_t i = 0; i < vs.size() && inside; ++i)
        if (cross(vs[(i + 1) % vs.size()] - vs[i], q - vs[i]) < 0) inside = false;
      if (inside) out.push_back(q);
    }
  return out;
}

inline bool contains(const LatticePolygon& p, const IVec2& q) {
  if (p.vertices.empty()) return false;
  if (p.dim() == 0) return p.vertices[0] == q;
  if (p.dim() == 1) {
    IVec2 d = p.vertices[1] - p.vertices[0];
    IVec2 e = q - p.vertices[0];
    if (cross(d, e) != 0) return false;
    Int t = dot(d, e);
    return t >= 0 && t <= dot(d, d);
  }
  const auto& vs = p.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (cross(vs[(i + 1) % vs.size()] - vs[i], q - vs[i]) < 0) return false;
  return true;
}

/// The standard triangle T_d with corners (0,0), (d,0), (0,d).
inline LatticePolygon standard_triangle(const Int& d) {
  return LatticePolygon({{0, 0}, {d, 0}, {0, d}});
}

}  // namespace tropinflect
