#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "tropinflect/intersection.hpp"

namespace tropinflect {

struct InfeasibleDivisorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpaceVertex {
  QVec3 pos;
};

struct SpaceEdge {
  int v1, v2;
  IVec3 dir;   // primitive, from v1 to v2
  Int weight;
  bool wall_below = false;  // a vertical wall hangs under this ridge
};

struct SpaceRay {
  enum Kind { Lift, WallCorner, VerticalEnd };
  int v;
  IVec3 dir;  // primitive
  Int weight;
  Kind kind = Lift;
  bool wall_below = false;
};

/// Weighted rational 1-complex in R^3 (the 1-skeleton of a modification).
struct SpaceGraph {
  std::vector<SpaceVertex> vertices;
  std::vector<SpaceEdge> edges;
  std::vector<SpaceRay> rays;

  int vertex_id(const QVec3& p) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i].pos == p) return static_cast<int>(i);
    vertices.push_back({p});
    return static_cast<int>(vertices.size()) - 1;
  }
};

struct DivisorData {
  std::vector<std::pair<QVec2, Int>> points;  // base point, weight
};

struct Balancing3Report {
  std::vector<IVec3> residuals;
  bool balanced = true;
};

/// Momentum balance at each vertex: weighted primitive directions sum to zero.
inline Balancing3Report verify_balancing3(const SpaceGraph& g) {
  Balancing3Report rep;
  rep.residuals.resize(g.vertices.size(), IVec3{});
  for (const auto& e : g.edges) {
    rep.residuals[e.v1] = rep.residuals[e.v1] + e.weight * e.dir;
    rep.residuals[e.v2] = rep.residuals[e.v2] + e.weight * (-e.dir);
  }
  for (const auto& r : g.rays) rep.residuals[r.v] = rep.residuals[r.v] + r.weight * r.dir;
  for (const auto& r : rep.residuals)
    if (!r.is_zero()) rep.balanced = false;
  return rep;
}

namespace detail {

/// Slope of the graph of p along direction u at a region where the argmax is m.
inline Int graph_slope(const IVec2& m, const IVec2& u) { return dot(m, u); }

}  // namespace detail

/// The 1-skeleton of the tropical modification of R^2 defined by p: the graph
/// of eval(p) over V(p) plus the vertical wall corners below its vertices.
/// A constant polynomial produces an empty skeleton (plane at height c).
inline SpaceGraph modify_plane(const TropicalPolynomial& p) {
  SpaceGraph g;
  LatticePolygon np = newton_polygon(p);
  if (np.dim() <= 0) return g;
  if (np.dim() == 1) {
    // parallel creases: 1-dimensional upper hull along the support line
    IVec2 dir = primitive_direction(np.vertices[1] - np.vertices[0]);
    std::vector<std::pair<Rat, Rat>> pts;  // (param along dir, coeff)
    std::map<Rat, Rat> best;
    for (const auto& [e, c] : p.terms) {
      Rat t = Rat(dot(e - np.vertices[0], dir)) / Rat(dot(dir, dir));
      auto [it, fresh] = best.emplace(t, c);
      if (!fresh && c > it->second) it->second = c;
    }
    for (const auto& [t, c] : best) pts.push_back({t, c});
    // upper hull over one parameter
    std::vector<std::pair<Rat, Rat>> hull;
    for (const auto& q : pts) {
      while (hull.size() >= 2) {
        const auto& a = hull[hull.size() - 2];
        const auto& b = hull[hull.size() - 1];
        if ((b.second - a.second) * (q.first - b.first) <= (q.second - b.second) * (b.first - a.first))
          hull.pop_back();
        else
          break;
      }
      hull.push_back(q);
    }
    // each consecutive hull pair bounds a crease line
    IVec2 n{-dir.y, dir.x};
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
      // crease of monomials at params t1, t2: <x, (e2-e1)> = c1 - c2
      Rat t1 = hull[i].first, t2 = hull[i + 1].first;
      QVec2 e1 = QVec2(np.vertices[0]) + t1 * QVec2(dir);
      QVec2 e2 = QVec2(np.vertices[0]) + t2 * QVec2(dir);
      Rat rhs = hull[i].second - hull[i + 1].second;
      QVec2 diff = e2 - e1;
      // anchor: point of the crease closest to the origin in the diff direction
      Rat den = dot(diff, diff);
      QVec2 anchor{diff.x * rhs / den, diff.y * rhs / den};
      Rat h = eval(p, anchor).value;
      int v = g.vertex_id({anchor.x, anchor.y, h});
      // slope along the crease direction n: <e1, n>, integral for lattice e1
      Rat s = dot(e1, n);
      if (rat_den(s) != 1) throw std::logic_error("modify_plane: non-integral crease slope");
      Int si = rat_num(s);
      Int w = lattice_length(IVec2{rat_num(e1.x), rat_num(e1.y)},
                             IVec2{rat_num(e2.x), rat_num(e2.y)});
      g.rays.push_back({v, primitive_direction(IVec3{n.x, n.y, si}), w, SpaceRay::Lift, true});
      g.rays.push_back({v, primitive_direction(IVec3{-n.x, -n.y, -si}), w, SpaceRay::Lift, true});
    }
    return g;
  }

  TropicalCurve c = build_curve(p);
  std::vector<int> vid(c.vertices.size());
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    Rat h = eval(p, c.vpos(i)).value;
    vid[i] = g.vertex_id({c.vpos(i).x, c.vpos(i).y, h});
  }
  std::vector<Int> vertical(c.vertices.size(), Int(0));
  for (const auto& e : c.edges) {
    IVec2 m = c.subdiv.edges[e.dual].p;  // attaining exponent along the edge
    Int s = detail::graph_slope(m, e.dir);
    g.edges.push_back({vid[e.v1], vid[e.v2], IVec3{e.dir.x, e.dir.y, s}, e.weight, true});
    vertical[e.v1] += e.weight * s;
    vertical[e.v2] -= e.weight * s;
  }
  for (const auto& r : c.rays) {
    IVec2 m = c.subdiv.edges[r.dual].p;
    Int s = detail::graph_slope(m, r.dir);
    g.rays.push_back({vid[r.v], IVec3{r.dir.x, r.dir.y, s}, r.weight, SpaceRay::Lift, true});
    vertical[r.v] += r.weight * s;
  }
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    if (vertical[i] < 0) throw std::logic_error("modify_plane: negative wall corner weight");
    if (vertical[i] > 0)
      g.rays.push_back({vid[i], IVec3{0, 0, -1}, vertical[i], SpaceRay::WallCorner, false});
  }
  return g;
}

/// Projections and weights of the vertical ends (divisor rays) of a graph.
inline DivisorData vertical_ends(const SpaceGraph& g) {
  DivisorData d;
  for (const auto& r : g.rays)
    if (r.kind == SpaceRay::VerticalEnd)
      d.points.push_back({{g.vertices[r.v].pos.x, g.vertices[r.v].pos.y}, r.weight});
  std::sort(d.points.begin(), d.points.end());
  return d;
}

namespace detail {

struct Link {
  int n1 = -1;                 // node index
  std::optional<int> n2;       // node index, or nullopt for a terminal sub-ray
  IVec2 dir;                   // primitive, from n1
  Rat tau;                     // lattice steps n1 -> n2, bounded links only
  bool in_s = false;           // contained in V(pmod)
};

/// Exact dense Gauss-Jordan; returns pivot columns. Rows are [coeffs | rhs].
inline std::optional<std::vector<int>> gauss_jordan(std::vector<std::vector<Rat>>& m, int ncols) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < ncols && row < static_cast<int>(m.size()); ++col) {
    int pr = -1;
    for (int r = row; r < static_cast<int>(m.size()); ++r)
      if (m[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr == -1) continue;
    std::swap(m[row], m[pr]);
    Rat piv = m[row][col];
    for (auto& x : m[row]) x /= piv;
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int k = 0; k <= ncols; ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(col);
    ++row;
  }
  for (int r = row; r < static_cast<int>(m.size()); ++r)
    if (m[r][ncols] != 0) return std::nullopt;  // inconsistent
  return pivots;
}

}  // namespace detail

/// Lifts a non-singular curve along pmod with prescribed divisor data: the
/// graph of eval(pmod) away from V(pmod), heights over shared pieces solved
/// by exact balancing, a vertical end of the given weight at each divisor
/// point. Throws InfeasibleDivisorError when no balanced lift exists.
inline SpaceGraph modify_curve(const TropicalCurve& c, const TropicalPolynomial& pmod,
                               const DivisorData& divisor) {
  if (!is_nonsingular(c)) throw std::invalid_argument("modify_curve: base curve must be non-singular");
  if (newton_polygon(pmod).dim() != 2)
    throw std::invalid_argument("modify_curve: modifier must have a 2-dimensional Newton polygon");
  TropicalCurve lm = build_curve(pmod);
  auto comps = components(c, lm);

  // validate divisor points and per-component weight totals
  for (const auto& [pt, w] : divisor.points) {
    if (w <= 0) throw std::invalid_argument("modify_curve: divisor weights must be positive");
    if (locate(c, pt).kind == CurveLocation::Off)
      throw std::invalid_argument("modify_curve: divisor point off the base curve");
    if (!on_curve(pmod, pt))
      throw std::invalid_argument("modify_curve: divisor point off the modifier curve");
  }
  for (std::size_t i = 0; i < comps.size(); ++i) {
    Int placed = 0;
    for (const auto& [pt, w] : divisor.points)
      if (comps[i].contains(pt)) placed += w;
    if (placed > comps[i].total || (comps[i].compact && placed != comps[i].total))
      throw InfeasibleDivisorError("divisor weights inconsistent with component " + std::to_string(i) +
                                   " (total " + comps[i].total.str() + ", placed " + placed.str() + ")");
  }

  // node set: curve vertices, component piece endpoints, divisor points,
  // modifier vertices on the curve
  std::set<QVec2> node_set;
  for (const auto& v : c.vertices) node_set.insert(v.pos);
  for (const auto& comp : comps)
    for (const auto& g : comp.geometry) {
      node_set.insert(g.a);
      if (g.kind == Piece::Segment) node_set.insert(g.b);
    }
  for (const auto& [pt, w] : divisor.points) node_set.insert(pt);
  for (const auto& v : lm.vertices)
    if (locate(c, v.pos).kind != CurveLocation::Off) node_set.insert(v.pos);

  std::vector<QVec2> nodes(node_set.begin(), node_set.end());
  auto node_id = [&](const QVec2& p) {
    return static_cast<int>(std::lower_bound(nodes.begin(), nodes.end(), p) - nodes.begin());
  };
  std::map<int, Int> div_at;
  for (const auto& [pt, w] : divisor.points) div_at[node_id(pt)] += w;

  // split curve tracks at the nodes
  std::vector<detail::Link> links;
  auto split_track = [&](const QVec2& a, std::optional<QVec2> b, const IVec2& dir) {
    std::vector<std::pair<Rat, int>> on;  // (param, node)
    Rat den(dot(dir, dir));
    std::optional<Rat> tmax;
    if (b) tmax = lattice_length_q(a, *b);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      QVec2 w = nodes[i] - a;
      if (w.x * dir.y - w.y * dir.x != 0) continue;
      Rat t = dot(w, dir) / den;
      if (t < 0 || (tmax && t > *tmax)) continue;
      on.push_back({t, static_cast<int>(i)});
    }
    std::sort(on.begin(), on.end());
    for (std::size_t i = 0; i + 1 < on.size(); ++i) {
      detail::Link l;
      l.n1 = on[i].second;
      l.n2 = on[i + 1].second;
      l.dir = dir;
      l.tau = on[i + 1].first - on[i].first;
      QVec2 mid = nodes[l.n1] + (l.tau / 2) * QVec2(dir);
      l.in_s = on_curve(pmod, mid);
      links.push_back(l);
    }
    if (!b) {
      detail::Link l;
      l.n1 = on.back().second;
      l.dir = dir;
      QVec2 probe = nodes[l.n1] + QVec2(dir);
      l.in_s = on_curve(pmod, probe);
      links.push_back(l);
    }
  };
  for (const auto& e : c.edges) split_track(c.vpos(e.v1), c.vpos(e.v2), e.dir);
  for (const auto& r : c.rays) split_track(c.vpos(r.v), std::nullopt, r.dir);

  // known heights: nodes incident to an off-S link, or off V(pmod) entirely
  std::vector<bool> on_s_node(nodes.size(), false), has_off_link(nodes.size(), false);
  for (std::size_t i = 0; i < nodes.size(); ++i) on_s_node[i] = on_curve(pmod, nodes[i]);
  for (const auto& l : links) {
    if (!l.in_s) {
      has_off_link[l.n1] = true;
      if (l.n2) has_off_link[*l.n2] = true;
    }
  }
  std::vector<std::optional<Rat>> height(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (!on_s_node[i] || has_off_link[i]) height[i] = eval(pmod, nodes[i]).value;

  // slope of an off-S link leaving node n (per primitive step)
  auto off_slope = [&](const detail::Link& l, int from) -> Rat {
    if (l.n2) {
      int to = (from == l.n1) ? *l.n2 : l.n1;
      return (*height[to] - *height[from]) / l.tau;
    }
    QVec2 probe = nodes[l.n1] + Rat(1, 2) * QVec2(l.dir);
    auto am = eval(pmod, probe).argmax;
    return Rat(dot(am[0], l.dir));
  };
  // ceiling slope of an in-S terminal sub-ray (graph slope along the crease)
  auto ceiling_slope = [&](const detail::Link& l) -> Int {
    QVec2 probe = nodes[l.n1] + QVec2(l.dir);
    auto am = eval(pmod, probe).argmax;
    return dot(am[0], l.dir);
  };

  // unknowns: heights of S-nodes without off links, slopes of in-S sub-rays
  std::vector<int> hvar(nodes.size(), -1);
  std::vector<int> rvar(links.size(), -1);
  int nvar = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (!height[i]) hvar[i] = nvar++;
  for (std::size_t i = 0; i < links.size(); ++i)
    if (links[i].in_s && !links[i].n2) rvar[i] = nvar++;

  // one z-balance equation per node on the shared locus (isolated crossings
  // included: their equation has no unknowns and forces the divisor weight)
  std::vector<char> needs_eq(nodes.size(), 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) needs_eq[i] = on_s_node[i];
  for (const auto& [n, w] : div_at) needs_eq[n] = 1;

  std::vector<std::vector<Rat>> m;
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    if (!needs_eq[n]) continue;
    std::vector<Rat> row(nvar + 1, Rat(0));
    auto add_const = [&](const Rat& v) { row[nvar] -= v; };  // move to rhs with sign flip later
    for (std::size_t li = 0; li < links.size(); ++li) {
      const auto& l = links[li];
      bool at_n1 = l.n1 == static_cast<int>(n);
      bool at_n2 = l.n2 && *l.n2 == static_cast<int>(n);
      if (!at_n1 && !at_n2) continue;
      if (!l.in_s) {
        add_const(off_slope(l, static_cast<int>(n)));
        continue;
      }
      if (!l.n2) {
        // terminal sub-ray: slope variable
        row[rvar[li]] += 1;
        continue;
      }
      int self = static_cast<int>(n), other = at_n1 ? *l.n2 : l.n1;
      // slope (h_other - h_self)/tau
      Rat inv = 1 / l.tau;
      if (height[other])
        add_const(*height[other] * inv);
      else
        row[hvar[other]] += inv;
      if (height[self])
        add_const(-*height[self] * inv);
      else
        row[hvar[self]] -= inv;
    }
    Rat w_div = 0;
    if (auto it = div_at.find(static_cast<int>(n)); it != div_at.end()) w_div = Rat(it->second);
    // equation: sum of outgoing slopes - w_div = 0
    // row currently holds: vars on lhs, and rhs accumulated with flipped sign
    row[nvar] = -row[nvar];        // constants back to their true sign
    row[nvar] = w_div - row[nvar]; // vars = w_div - constants
    m.push_back(std::move(row));
  }

  auto pivots = detail::gauss_jordan(m, nvar);
  if (!pivots)
    throw InfeasibleDivisorError("no balanced lift exists for the given divisor");
  // pin undetermined sub-ray slopes to their ceiling slope, in reverse order
  {
    std::vector<char> is_pivot(nvar, 0);
    for (int pc : *pivots) is_pivot[pc] = 1;
    for (int li = static_cast<int>(links.size()) - 1; li >= 0; --li) {
      if (rvar[li] < 0 || is_pivot[rvar[li]]) continue;
      std::vector<Rat> row(nvar + 1, Rat(0));
      row[rvar[li]] = 1;
      row[nvar] = Rat(ceiling_slope(links[li]));
      m.push_back(std::move(row));
      pivots = detail::gauss_jordan(m, nvar);
      if (!pivots) throw InfeasibleDivisorError("no balanced lift exists for the given divisor");
      for (int pc : *pivots) is_pivot[pc] = 1;
    }
    if (static_cast<int>(pivots->size()) != nvar)
      throw InfeasibleDivisorError("lift is underdetermined: a component of the curve lies in the modifier");
  }
  std::vector<Rat> value(nvar, Rat(0));
  for (std::size_t r = 0; r < pivots->size(); ++r) value[(*pivots)[r]] = m[r][nvar];
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (!height[i]) height[i] = value[hvar[i]];

  // wall containment and slope integrality
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (*height[i] > eval(pmod, nodes[i]).value)
      throw InfeasibleDivisorError("lift escapes above the modifier graph");
  auto link_slope = [&](std::size_t li) -> Rat {
    const auto& l = links[li];
    if (!l.n2) return l.in_s ? value[rvar[li]] : off_slope(l, l.n1);
    return (*height[*l.n2] - *height[l.n1]) / l.tau;
  };
  for (std::size_t li = 0; li < links.size(); ++li) {
    Rat s = link_slope(li);
    if (rat_den(s) != 1)
      throw InfeasibleDivisorError("lift requires a non-integral slope (invalid divisor positions)");
    if (links[li].in_s && !links[li].n2 && s > Rat(ceiling_slope(links[li])))
      throw InfeasibleDivisorError("sub-ray slope exceeds the modifier graph");
  }

  // assemble the lifted graph, merging straight 2-valent nodes
  SpaceGraph g;
  std::vector<QVec3> npos(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) npos[i] = {nodes[i].x, nodes[i].y, *height[i]};

  struct Item {
    int other;  // node or -1 for ray
    IVec3 dir;
    std::size_t link;
  };
  std::vector<std::vector<Item>> at(nodes.size());
  for (std::size_t li = 0; li < links.size(); ++li) {
    const auto& l = links[li];
    Int s = rat_num(link_slope(li));
    IVec3 d3{l.dir.x, l.dir.y, s};
    at[l.n1].push_back({l.n2 ? *l.n2 : -1, d3, li});
    if (l.n2) at[*l.n2].push_back({l.n1, -d3, li});
  }
  // keep nodes that are vertices of the lift: valence != 2, a divisor point,
  // or a genuine bend
  std::vector<char> keep(nodes.size(), 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (at[i].size() != 2 || div_at.count(static_cast<int>(i)))
      keep[i] = 1;
    else if (!(at[i][0].dir == -at[i][1].dir))
      keep[i] = 1;
  }
  std::set<std::pair<int, std::size_t>> used;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!keep[i]) continue;
    int vi = g.vertex_id(npos[i]);
    for (const auto& item : at[i]) {
      if (used.count({static_cast<int>(i), item.link})) continue;
      // walk through non-kept nodes
      int cur = static_cast<int>(i);
      Item step = item;
      used.insert({cur, step.link});
      while (step.other != -1 && !keep[step.other]) {
        int nxt = step.other;
        const auto& two = at[nxt];
        Item cont = (two[0].link == step.link) ? two[1] : two[0];
        used.insert({nxt, two[0].link});
        used.insert({nxt, two[1].link});
        cur = nxt;
        step = cont;
      }
      if (step.other == -1) {
        g.rays.push_back({vi, item.dir, 1, SpaceRay::Lift, false});
      } else {
        used.insert({step.other, step.link});
        int vo = g.vertex_id(npos[step.other]);
        if (vi <= vo)
          g.edges.push_back({vi, vo, item.dir, 1, false});
        else
          g.edges.push_back({vo, vi, -item.dir, 1, false});
      }
    }
  }
  for (const auto& [n, w] : div_at) {
    int vi = g.vertex_id(npos[n]);
    g.rays.push_back({vi, IVec3{0, 0, -1}, w, SpaceRay::VerticalEnd, false});
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const SpaceEdge& a, const SpaceEdge& b) {
    return std::pair(a.v1, a.v2) < std::pair(b.v1, b.v2);
  });
  return g;
}

}  // namespace tropinflect
