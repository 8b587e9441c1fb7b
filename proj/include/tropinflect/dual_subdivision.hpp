#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "tropinflect/tropical_polynomial.hpp"

namespace tropinflect {

/// Affine support of a cell: lambda(i,j) = a*i + b*j + c with lambda >= coefficient
/// lift everywhere and equality exactly on the cell.
struct SupportPlane {
  Rat a, b, c;
  Rat operator()(const IVec2& e) const { return a * e.x + b * e.y + c; }
};

struct SubdivisionCell {
  LatticePolygon poly;
  SupportPlane plane;
  std::vector<IVec2> members;  // lifted points on the plane (hull corners and others)
  Int area;                    // integer area
};

/// 1-cell of the dual subdivision: a full hull edge of one or two 2-cells.
struct SubdivisionEdge {
  IVec2 p, q;          // endpoints, p < q
  int cell_a = -1;     // incident 2-cells
  int cell_b = -1;
  bool boundary = false;  // lies on the Newton polygon boundary
  Int weight;             // lattice length of [p,q]
};

struct DualSubdivision {
  LatticePolygon newton;
  std::vector<SubdivisionCell> cells;
  std::vector<SubdivisionEdge> edges;
  int dim = 2;  // dimension of the Newton polygon
};

/// Regular subdivision of the Newton polygon induced by the upper hull of the
/// coefficient lift (i,j) |-> a_ij. Cells are the projections of the upper
/// faces; non-simplicial cells are kept whole.
inline DualSubdivision dual_subdivision(const TropicalPolynomial& p) {
  if (p.terms.empty()) throw std::invalid_argument("dual_subdivision: empty polynomial");
  DualSubdivision out;
  out.newton = newton_polygon(p);
  out.dim = out.newton.dim();

  std::vector<IVec2> pts;
  std::vector<Rat> lift;
  for (const auto& [e, c] : p.terms) {
    pts.push_back(e);
    lift.push_back(c);
  }
  const std::size_t n = pts.size();
  if (out.dim < 2) return out;

  // Clear denominators once; the subdivision is invariant under positive scaling.
  Int scale = 1;
  for (const auto& c : lift) scale = int_lcm(scale, rat_den(c));
  std::vector<Int> h(n);
  for (std::size_t i = 0; i < n; ++i) h[i] = rat_num(lift[i]) * (scale / rat_den(lift[i]));

  // Enumerate supporting planes from above through point triples.
  // Plane key: primitive upward normal (nx,ny,nz) plus offset, deduplicated.
  std::map<std::tuple<Int, Int, Int, Int>, std::vector<IVec2>> plane_members;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        IVec2 u = pts[j] - pts[i];
        IVec2 v = pts[k] - pts[i];
        Int nz = cross(u, v);
        if (nz == 0) continue;
        Int nx = u.y * (h[k] - h[i]) - (h[j] - h[i]) * v.y;
        Int ny = (h[j] - h[i]) * v.x - u.x * (h[k] - h[i]);
        if (nz < 0) {
          nx = -nx;
          ny = -ny;
          nz = -nz;
        }
        // Point q is above the plane iff nx*qx + ny*qy + nz*h_q > offset.
        Int offset = nx * pts[i].x + ny * pts[i].y + nz * h[i];
        bool supporting = true;
        std::vector<IVec2> members;
        for (std::size_t m = 0; m < n && supporting; ++m) {
          Int side = nx * pts[m].x + ny * pts[m].y + nz * h[m] - offset;
          if (side > 0) supporting = false;
          else if (side == 0) members.push_back(pts[m]);
        }
        if (!supporting) continue;
        // offset is the normal dotted with a plane point, so g divides it too.
        Int g = int_gcd(int_gcd(int_abs(nx), int_abs(ny)), nz);
        plane_members.emplace(std::make_tuple(nx / g, ny / g, nz / g, offset / g),
                              std::move(members));
      }

  for (auto& [key, members] : plane_members) {
    auto [nx, ny, nz, offset] = key;
    SubdivisionCell cell;
    cell.poly = LatticePolygon(members);
    if (cell.poly.dim() != 2) continue;  // guard; cannot happen for valid triples
    cell.members = members;
    // z = (offset - nx*x - ny*y)/nz on the integer lift; divide by the scale.
    Rat denom = Rat(Int(nz)) * scale;
    cell.plane = SupportPlane{Rat(-Int(nx)) / denom, Rat(-Int(ny)) / denom, Rat(Int(offset)) / denom};
    cell.area = integer_area(cell.poly);
    out.cells.push_back(std::move(cell));
  }

  // 1-cells: hull edges of the 2-cells; regular subdivisions are face-to-face,
  // so adjacent cells share full edges.
  std::map<std::pair<IVec2, IVec2>, SubdivisionEdge> edges;
  for (std::size_t ci = 0; ci < out.cells.size(); ++ci) {
    const auto& vs = out.cells[ci].poly.vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      IVec2 a = vs[i], b = vs[(i + 1) % vs.size()];
      if (b < a) std::swap(a, b);
      auto [it, fresh] = edges.try_emplace({a, b});
      auto& e = it->second;
      if (fresh) {
        e.p = a;
        e.q = b;
        e.weight = lattice_length(a, b);
        e.cell_a = static_cast<int>(ci);
      } else {
        if (e.cell_b != -1) throw std::logic_error("dual_subdivision: edge with >2 cells");
        e.cell_b = static_cast<int>(ci);
      }
    }
  }
  for (auto& [key, e] : edges) {
    e.boundary = (e.cell_b == -1);
    out.edges.push_back(e);
  }
  return out;
}

/// Sum of 2-cell areas must tile the Newton polygon; used as an internal check.
inline bool subdivision_tiles(const DualSubdivision& s) {
  Int total = 0;
  for (const auto& c : s.cells) total += c.area;
  return total == integer_area(s.newton);
}

}  // namespace tropinflect
