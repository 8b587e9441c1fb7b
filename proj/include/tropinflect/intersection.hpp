#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "tropinflect/tropical_curve.hpp"

namespace tropinflect {

struct CommonComponentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One polyhedral piece of a set-theoretic intersection.
struct Piece {
  enum Kind { Point, Segment, Ray } kind = Point;
  QVec2 a;     // the point, or segment/ray source
  QVec2 b;     // segment far end
  IVec2 dir;   // ray direction (primitive)

  friend bool operator==(const Piece& l, const Piece& r) {
    return l.kind == r.kind && l.a == r.a && l.b == r.b && l.dir == r.dir;
  }
  friend bool operator<(const Piece& l, const Piece& r) {
    if (l.kind != r.kind) return l.kind < r.kind;
    if (!(l.a == r.a)) return l.a < r.a;
    if (!(l.b == r.b)) return l.b < r.b;
    return l.dir < r.dir;
  }
};

namespace detail {

/// A closed edge or ray of a curve, as a parametrized track.
struct Track {
  QVec2 a;
  std::optional<QVec2> b;  // empty for rays
  IVec2 dir;               // primitive, from a (towards b if bounded)

  /// parameter of the far end in primitive steps (rays: none)
  std::optional<Rat> tmax() const {
    if (!b) return std::nullopt;
    return lattice_length_q(a, *b);
  }
  QVec2 at(const Rat& t) const { return a + t * QVec2(dir); }
};

inline std::vector<Track> tracks_of(const TropicalCurve& c) {
  std::vector<Track> ts;
  for (const auto& e : c.edges) ts.push_back({c.vpos(e.v1), c.vpos(e.v2), e.dir});
  for (const auto& r : c.rays) ts.push_back({c.vpos(r.v), std::nullopt, r.dir});
  return ts;
}

inline std::optional<Piece> intersect_tracks(const Track& s, const Track& t) {
  Int cr = cross(s.dir, t.dir);
  QVec2 off = t.a - s.a;
  if (cr != 0) {
    // transverse supporting lines
    Rat u = (off.x * t.dir.y - off.y * t.dir.x) / Rat(cr);
    Rat v = (off.x * s.dir.y - off.y * s.dir.x) / Rat(cr);
    if (u < 0 || v < 0) return std::nullopt;
    if (auto m = s.tmax(); m && u > *m) return std::nullopt;
    if (auto m = t.tmax(); m && v > *m) return std::nullopt;
    return Piece{Piece::Point, s.at(u), {}, {}};
  }
  // parallel: require collinear
  if (off.x * s.dir.y - off.y * s.dir.x != 0) return std::nullopt;
  // parametrize both by s's direction
  bool same = (t.dir == s.dir);
  Rat t_a = dot(off, s.dir) / Rat(dot(s.dir, s.dir));
  // interval of s: [0, smax] or [0, inf)
  // interval of t: same dir: [t_a, t_a+tmax]; opposite: [t_a - tmax, t_a]
  struct Iv {
    Rat lo, hi;
    bool lo_inf = false, hi_inf = false;
  };
  Iv is{0, 0};
  if (auto m = s.tmax())
    is.hi = *m;
  else
    is.hi_inf = true;
  Iv it{t_a, t_a};
  if (auto m = t.tmax()) {
    if (same)
      it.hi = t_a + *m;
    else
      it.lo = t_a - *m;
  } else {
    if (same)
      it.hi_inf = true;
    else
      it.lo_inf = true;
  }
  Iv r;
  r.lo_inf = is.lo_inf && it.lo_inf;
  r.hi_inf = is.hi_inf && it.hi_inf;
  if (!r.lo_inf) r.lo = is.lo_inf ? it.lo : (it.lo_inf ? is.lo : std::max(is.lo, it.lo));
  if (!r.hi_inf) r.hi = is.hi_inf ? it.hi : (it.hi_inf ? is.hi : std::min(is.hi, it.hi));
  if (!r.lo_inf && !r.hi_inf) {
    if (r.lo > r.hi) return std::nullopt;
    if (r.lo == r.hi) return Piece{Piece::Point, s.at(r.lo), {}, {}};
    return Piece{Piece::Segment, s.at(r.lo), s.at(r.hi), {}};
  }
  if (!r.lo_inf && r.hi_inf) return Piece{Piece::Ray, s.at(r.lo), {}, s.dir};
  // tracks never extend to -infinity, so lo_inf cannot survive
  throw std::logic_error("intersect_tracks: unbounded below");
}

inline bool point_on_piece(const QVec2& p, const Piece& c) {
  switch (c.kind) {
    case Piece::Point:
      return p == c.a;
    case Piece::Segment: {
      QVec2 d = c.b - c.a, w = p - c.a;
      if (cross(d, w) != 0) return false;
      Rat t = dot(d, w);
      return t >= 0 && t <= dot(d, d);
    }
    case Piece::Ray: {
      QVec2 w = p - c.a;
      if (w.x * c.dir.y - w.y * c.dir.x != 0) return false;
      return dot(w, c.dir) >= 0;
    }
  }
  return false;
}

inline bool pieces_touch(const Piece& p, const Piece& q) {
  if (p.kind == Piece::Point) return point_on_piece(p.a, q);
  if (q.kind == Piece::Point) return point_on_piece(q.a, p);
  auto as_track = [](const Piece& c) -> Track {
    if (c.kind == Piece::Segment) return {c.a, c.b, primitive_direction(c.b - c.a)};
    return {c.a, std::nullopt, c.dir};
  };
  return intersect_tracks(as_track(p), as_track(q)).has_value();
}

}  // namespace detail

/// Tropical (stable) intersection point: a vertex of the product curve lying
/// in both curves, weighted by half the cell-area defect.
struct TropicalIntersectionPoint {
  QVec2 pos;
  Int mult;
  int delta_case;  // 0, 1, 2: how many of the two curves have a vertex here
  Int cell_area;
  Int delta;
};

inline std::vector<TropicalIntersectionPoint> stable_points(const TropicalCurve& c1,
                                                            const TropicalCurve& c2) {
  TropicalCurve c3 = build_curve(product(c1.poly, c2.poly));
  std::set<QVec2> v1, v2;
  for (const auto& v : c1.vertices) v1.insert(v.pos);
  for (const auto& v : c2.vertices) v2.insert(v.pos);

  std::vector<TropicalIntersectionPoint> out;
  for (const auto& v : c3.vertices) {
    if (!on_curve(c1.poly, v.pos) || !on_curve(c2.poly, v.pos)) continue;
    Int area = c3.subdiv.cells[v.cell].area;
    Int delta = 0;
    int dcase = 0;
    if (v1.count(v.pos)) {
      auto loc = locate(c1, v.pos);
      delta += c1.subdiv.cells[c1.vertices[loc.index].cell].area;
      ++dcase;
    }
    if (v2.count(v.pos)) {
      auto loc = locate(c2, v.pos);
      delta += c2.subdiv.cells[c2.vertices[loc.index].cell].area;
      ++dcase;
    }
    Int twice = area - delta;
    if (twice <= 0 || twice % 2 != 0)
      throw std::logic_error("stable_points: multiplicity defect is not a positive even integer");
    out.push_back({v.pos, twice / 2, dcase, area, delta});
  }
  return out;
}

/// Connected component of the set-theoretic intersection.
struct IntersectionComponent {
  std::vector<Piece> geometry;  // maximal pieces, deduplicated
  std::vector<TropicalIntersectionPoint> points;
  Int total = 0;
  bool compact = true;

  bool contains(const QVec2& p) const {
    for (const auto& g : geometry)
      if (detail::point_on_piece(p, g)) return true;
    return false;
  }
};

/// Upper-hull (concavified) coefficient value at every lattice point.
inline std::map<IVec2, Rat> concavify(const TropicalPolynomial& p) {
  std::map<IVec2, Rat> out;
  LatticePolygon np = newton_polygon(p);
  if (np.dim() == 2) {
    auto s = dual_subdivision(p);
    for (const auto& q : lattice_points(np)) {
      bool set = false;
      for (const auto& cell : s.cells) {
        if (contains(cell.poly, q)) {
          out[q] = cell.plane(q);
          set = true;
          break;
        }
      }
      if (!set) throw std::logic_error("concavify: lattice point not covered");
    }
    return out;
  }
  // segment or point support: hull along the line
  for (const auto& q : lattice_points(np)) {
    Rat best;
    bool have = false;
    for (const auto& [e1, a1] : p.terms)
      for (const auto& [e2, a2] : p.terms) {
        if (e1 == q && (!have || a1 > best)) {
          best = a1;
          have = true;
        }
        if (e1 == e2) continue;
        // q = e1 + t (e2-e1), t in [0,1]
        IVec2 d = e2 - e1, w = q - e1;
        if (cross(d, w) != 0) continue;
        Int num = dot(d, w), den = dot(d, d);
        if (num < 0 || num > den) continue;
        Rat t(num, den);
        Rat val = a1 + t * (a2 - a1);
        if (!have || val > best) {
          best = val;
          have = true;
        }
      }
    if (have) out[q] = best;
  }
  return out;
}

/// Attempts an exact max-plus division: Q with den*Q == num as functions.
inline std::optional<TropicalPolynomial> try_divide(const TropicalPolynomial& num,
                                                    const TropicalPolynomial& den) {
  LatticePolygon n1 = newton_polygon(num), n2 = newton_polygon(den);
  auto c1 = concavify(num);
  auto c2 = concavify(den);
  // candidate support: lattice k with k + N(den) inside N(num)
  Int xmin = n1.vertices[0].x, xmax = xmin, ymin = n1.vertices[0].y, ymax = ymin;
  for (const auto& v : n1.vertices) {
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  TropicalPolynomial q;
  for (Int x = xmin - (n2.vertices.empty() ? 0 : n2.vertices[0].x); x <= xmax; ++x)
    for (Int y = ymin - (n2.vertices.empty() ? 0 : n2.vertices[0].y); y <= ymax; ++y) {
      IVec2 k{x, y};
      bool fits = true;
      for (const auto& v : n2.vertices)
        if (!contains(n1, k + v)) {
          fits = false;
          break;
        }
      if (!fits) continue;
      bool have = false;
      Rat best;
      for (const auto& [e, val] : c2) {
        auto it = c1.find(k + e);
        if (it == c1.end()) {
          have = false;
          break;
        }
        Rat cand = it->second - val;
        if (!have || cand < best) best = cand;
        have = true;
      }
      if (have) q.add_term(k, best);
    }
  if (q.terms.empty()) return std::nullopt;
  // verify: den * q and num define the same function
  auto prod = product(den, q);
  if (!(newton_polygon(prod) == n1)) return std::nullopt;
  if (concavify(prod) != c1) return std::nullopt;
  return q;
}

namespace detail {

/// Canonical per-line merge of overlapping 1-dimensional pieces.
inline std::vector<Piece> merge_pieces(std::vector<Piece> pieces) {
  std::sort(pieces.begin(), pieces.end());
  pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());

  // lines keyed by (canonical direction, offset)
  struct LineKey {
    IVec2 dir;
    Rat off;
    bool operator<(const LineKey& o) const {
      if (!(dir == o.dir)) return dir < o.dir;
      return off < o.off;
    }
  };
  auto canonical = [](IVec2 d) {
    if (d.x < 0 || (d.x == 0 && d.y < 0)) return -d;
    return d;
  };
  struct Interval {
    Rat lo, hi;
    bool lo_inf = false, hi_inf = false;
  };
  std::map<LineKey, std::vector<Interval>> lines;
  std::vector<Piece> points;
  for (const auto& p : pieces) {
    if (p.kind == Piece::Point) {
      points.push_back(p);
      continue;
    }
    IVec2 d = canonical(p.kind == Piece::Segment ? primitive_direction(p.b - p.a) : p.dir);
    LineKey key{d, cross(QVec2(d), p.a)};
    // param of x on the line: dot(x, d)/|d|^2 (monotone along d)
    Rat den(dot(d, d));
    Interval iv;
    if (p.kind == Piece::Segment) {
      Rat ta = dot(p.a, d) / den, tb = dot(p.b, d) / den;
      iv.lo = std::min(ta, tb);
      iv.hi = std::max(ta, tb);
    } else {
      Rat ta = dot(p.a, d) / den;
      if (p.dir == d) {
        iv.lo = ta;
        iv.hi_inf = true;
      } else {
        iv.hi = ta;
        iv.lo_inf = true;
      }
    }
    lines[key].push_back(iv);
  }

  std::vector<Piece> out;
  for (auto& [key, ivs] : lines) {
    std::sort(ivs.begin(), ivs.end(), [](const Interval& a, const Interval& b) {
      if (a.lo_inf != b.lo_inf) return a.lo_inf;
      return a.lo < b.lo;
    });
    std::vector<Interval> merged;
    for (const auto& iv : ivs) {
      if (!merged.empty()) {
        auto& last = merged.back();
        bool overlap = last.hi_inf || iv.lo_inf || iv.lo <= last.hi;
        if (overlap) {
          last.hi_inf = last.hi_inf || iv.hi_inf;
          if (!last.hi_inf) last.hi = std::max(last.hi, iv.hi);
          last.lo_inf = last.lo_inf || iv.lo_inf;
          if (!last.lo_inf && iv.lo < last.lo) last.lo = iv.lo;
          continue;
        }
      }
      merged.push_back(iv);
    }
    Rat den(dot(key.dir, key.dir));
    // a point of the line with parameter t: solve dot(x,d)=t*|d|^2, cross(d,x)=off
    auto line_point = [&](const Rat& t) -> QVec2 {
      // x = t*d + off * n/|d|^2 with n = (-dy, dx)
      QVec2 n{Rat(-key.dir.y), Rat(key.dir.x)};
      return t * QVec2(key.dir) + (key.off / den) * n;
    };
    for (const auto& iv : merged) {
      if (iv.lo_inf && iv.hi_inf) {
        // full line: two opposite rays from a canonical point
        QVec2 o = line_point(0);
        out.push_back({Piece::Ray, o, {}, key.dir});
        out.push_back({Piece::Ray, o, {}, -key.dir});
      } else if (iv.hi_inf) {
        out.push_back({Piece::Ray, line_point(iv.lo), {}, key.dir});
      } else if (iv.lo_inf) {
        out.push_back({Piece::Ray, line_point(iv.hi), {}, -key.dir});
      } else if (iv.lo == iv.hi) {
        points.push_back({Piece::Point, line_point(iv.lo), {}, {}});
      } else {
        out.push_back({Piece::Segment, line_point(iv.lo), line_point(iv.hi), {}});
      }
    }
  }
  // drop points swallowed by 1-dimensional pieces
  for (const auto& p : points) {
    bool inside = false;
    for (const auto& g : out)
      if (point_on_piece(p.a, g)) {
        inside = true;
        break;
      }
    if (!inside) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

/// Connected components of the set C1 cap C2, annotated with their stable
/// points and totals. Throws CommonComponentError if one curve tropically
/// divides the other while the overlap is one-dimensional.
inline std::vector<IntersectionComponent> components(const TropicalCurve& c1,
                                                     const TropicalCurve& c2) {
  auto t1 = detail::tracks_of(c1);
  auto t2 = detail::tracks_of(c2);
  std::vector<Piece> pieces;
  bool overlap = false;
  for (const auto& a : t1)
    for (const auto& b : t2) {
      auto r = detail::intersect_tracks(a, b);
      if (!r) continue;
      if (r->kind != Piece::Point) overlap = true;
      pieces.push_back(*r);
    }
  std::sort(pieces.begin(), pieces.end());
  pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());

  if (overlap) {
    if (try_divide(c1.poly, c2.poly) || try_divide(c2.poly, c1.poly))
      throw CommonComponentError("curves share a tropical factor (common component)");
  }
  if (pieces.empty()) return {};

  // connected components by union-find over touching pieces
  std::vector<int> parent(pieces.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 1; j < pieces.size(); ++j)
      if (detail::pieces_touch(pieces[i], pieces[j])) parent[find(i)] = find(j);

  std::map<int, std::vector<Piece>> groups;
  for (std::size_t i = 0; i < pieces.size(); ++i)
    groups[find(static_cast<int>(i))].push_back(pieces[i]);

  auto stables = stable_points(c1, c2);
  std::vector<IntersectionComponent> out;
  for (auto& [root, group] : groups) {
    IntersectionComponent comp;
    comp.geometry = detail::merge_pieces(std::move(group));
    for (const auto& g : comp.geometry)
      if (g.kind == Piece::Ray) comp.compact = false;
    out.push_back(std::move(comp));
  }
  // deterministic order: by smallest geometry piece
  std::sort(out.begin(), out.end(), [](const IntersectionComponent& a, const IntersectionComponent& b) {
    return a.geometry < b.geometry;
  });
  for (auto& sp : stables) {
    int owner = -1;
    for (std::size_t i = 0; i < out.size(); ++i)
      if (out[i].contains(sp.pos)) {
        if (owner != -1) throw std::logic_error("components: stable point in two components");
        owner = static_cast<int>(i);
      }
    if (owner == -1) throw std::logic_error("components: stable point outside every component");
    out[owner].points.push_back(sp);
    out[owner].total += sp.mult;
  }
  return out;
}

inline Int component_multiplicity(const IntersectionComponent& e) { return e.total; }

}  // namespace tropinflect
