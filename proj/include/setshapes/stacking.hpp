// Copyright 2026 The setshapes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <tuple>
#include <string>
#include <vector>

#include "setshapes/error.hpp"
#include "setshapes/geometry.hpp"
#include "setshapes/log.hpp"
#include "setshapes/patterns.hpp"

namespace setshapes {

/// Order of shape i relative to shape j.
enum class Order { kBelow = -1, kEqual = 0, kAbove = 1 };

inline Order flip(Order o) { return static_cast<Order>(-static_cast<int>(o)); }

/// Faces of the arrangement that are connected through shared edges.
struct OverlapComponent {
  int id = -1;
  int i = -1;
  int j = -1;  // -1 for the single-shape components C_i
  std::vector<int> faces;
};

struct StackingRelation {
  int i = -1;
  int j = -1;
  int component = -1;  // index into StackingInput::pairs
  Order preferred = Order::kEqual;
  int rule = 0;        // rule that decided `preferred`; 0 if none did
  Order value = Order::kEqual;
  bool flipped = false;
};

/// Everything stacking needs: the patterns, their dilations and the
/// arrangement of those dilations.
struct StackingInput {
  std::vector<Pattern> patterns;
  std::vector<CategoricalPoint> points;
  std::vector<geo::ArcShape> dilated;
  std::shared_ptr<const geo::Arrangement> arrangement;
  double rd = 1.0;
};

inline StackingInput prepare_stacking(const std::vector<Pattern>& patterns,
                                      const std::vector<CategoricalPoint>& points,
                                      double rd) {
  StackingInput in{patterns, points, {}, nullptr, rd};
  for (const Pattern& p : patterns) in.dilated.push_back(dilate_pattern(p, rd));
  in.arrangement = std::make_shared<geo::Arrangement>(in.dilated);
  return in;
}

namespace detail {

template <class Keep>
std::vector<std::vector<int>> face_components(const geo::Arrangement& arr,
                                              Keep keep) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(arr.faces().size(), 0);
  for (const geo::Face& f : arr.faces()) {
    if (seen[f.id] || !f.bounded || !keep(f)) continue;
    std::vector<int> comp{f.id};
    seen[f.id] = 1;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      for (int g : arr.neighbors(comp[k])) {
        const geo::Face& fg = arr.face(g);
        if (seen[g] || !fg.bounded || !keep(fg)) continue;
        seen[g] = 1;
        comp.push_back(g);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool has(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace detail

struct Components {
  std::vector<OverlapComponent> pairs;    // C_{i,j}
  std::vector<OverlapComponent> singles;  // C_i
};

inline Components compute_components(const geo::Arrangement& arr) {
  Components out;
  std::set<std::pair<int, int>> pairs;
  for (const geo::Face& f : arr.faces())
    for (std::size_t a = 0; a < f.shapes.size(); ++a)
      for (std::size_t b = a + 1; b < f.shapes.size(); ++b)
        pairs.insert({f.shapes[a], f.shapes[b]});
  for (auto [i, j] : pairs) {
    for (auto& faces : detail::face_components(arr, [&](const geo::Face& f) {
           return detail::has(f.shapes, i) && detail::has(f.shapes, j);
         })) {
      out.pairs.push_back({static_cast<int>(out.pairs.size()), i, j, std::move(faces)});
    }
  }
  for (int i = 0; i < arr.shape_count(); ++i) {
    for (auto& faces : detail::face_components(arr, [&](const geo::Face& f) {
           return f.shapes.size() >= 2 && detail::has(f.shapes, i);
         })) {
      out.singles.push_back({static_cast<int>(out.singles.size()), i, -1, std::move(faces)});
    }
  }
  return out;
}

namespace detail {

inline bool face_in(const OverlapComponent& c, int f) {
  return std::binary_search(c.faces.begin(), c.faces.end(), f);
}

// Points of pattern p lying in the faces of component c.
inline std::vector<Point> points_in(const StackingInput& in, int p,
                                    const OverlapComponent& c) {
  std::vector<Point> out;
  for (int id : in.patterns[p].points) {
    const Point q = in.points[id].pos;
    if (face_in(c, in.arrangement->locate(q))) out.push_back(q);
  }
  return out;
}

// Number of points whose nearest boundary piece of `shape` is an arc.
inline int arc_cuts(const geo::ArcShape& shape, const std::vector<Point>& pts) {
  int n = 0;
  for (Point q : pts) {
    double best = std::numeric_limits<double>::infinity();
    bool arc = false;
    for (const geo::Loop& l : shape.loops)
      for (const geo::Edge& e : l.edges) {
        const double d = e.distance(q);
        if (d < best) {
          best = d;
          arc = e.is_arc();
        }
      }
    n += arc ? 1 : 0;
  }
  return n;
}

// Arc length of the boundary of shape k that borders the faces of c.
inline double covered_arc_length(const geo::Arrangement& arr, int k,
                                 const OverlapComponent& c) {
  double len = 0.0;
  const auto& edges = arr.overlay().edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!edges[e].geom.is_arc() || !arr.on_boundary(e, k)) continue;
    const int h = arr.covers_left(static_cast<int>(2 * e), k) ? static_cast<int>(2 * e)
                                                              : static_cast<int>(2 * e + 1);
    if (face_in(c, arr.face_of(h))) len += edges[e].geom.length();
  }
  return len;
}

}  // namespace detail

/// Preferred order of shape i relative to shape j in component c, and the
/// rule (1-3) that decided it (0 when no rule discriminates).
inline std::pair<Order, int> pairwise_preference(const StackingInput& in,
                                                 const OverlapComponent& c) {
  const int i = c.i;
  const int j = c.j;
  const std::vector<Point> pj = detail::points_in(in, j, c);  // cut if i on top
  const std::vector<Point> pi = detail::points_in(in, i, c);  // cut if j on top
  if (pj.empty() != pi.empty()) return {pj.empty() ? Order::kAbove : Order::kBelow, 1};
  if (!pj.empty()) {
    const int arcs_i_top = detail::arc_cuts(in.dilated[i], pj);
    const int arcs_j_top = detail::arc_cuts(in.dilated[j], pi);
    if (arcs_i_top != arcs_j_top)
      return {arcs_i_top < arcs_j_top ? Order::kAbove : Order::kBelow, 2};
  }
  const double cover_j = detail::covered_arc_length(*in.arrangement, j, c);
  const double cover_i = detail::covered_arc_length(*in.arrangement, i, c);
  const double tol = 1e-9 * std::max({1.0, cover_i, cover_j});
  if (cover_j < cover_i - tol) return {Order::kAbove, 3};
  if (cover_i < cover_j - tol) return {Order::kBelow, 3};
  return {Order::kEqual, 0};
}

struct StackingResult {
  Components components;
  std::vector<StackingRelation> relations;     // one per pair component
  std::vector<std::vector<int>> face_relations;  // R(f)
  std::vector<std::vector<int>> hyperedges;
  std::vector<std::vector<int>> face_order;    // per face, top to bottom
  int flips = 0;
};

/// Maximal relation sets among faces; identical sets are kept once.
inline std::vector<std::vector<int>> build_hypergraph(
    const std::vector<std::vector<int>>& face_relations) {
  std::vector<std::vector<int>> sets;
  for (const auto& r : face_relations)
    if (!r.empty()) sets.push_back(r);
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<std::vector<int>> out;
  for (const auto& s : sets) {
    bool covered = false;
    for (const auto& m : out)
      covered = covered || std::includes(m.begin(), m.end(), s.begin(), s.end());
    if (!covered) out.push_back(s);
  }
  return out;
}

namespace detail {

inline constexpr std::size_t kMaxHyperedgeShapes = 12;

// Directed edge "a above b".
struct Arc {
  int a;
  int b;
};

inline bool acyclic(const std::vector<int>& verts, const std::vector<Arc>& arcs) {
  std::map<int, int> indeg;
  for (int v : verts) indeg[v] = 0;
  for (const Arc& e : arcs) ++indeg[e.b];
  std::vector<int> ready;
  for (auto [v, d] : indeg)
    if (d == 0) ready.push_back(v);
  std::size_t done = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++done;
    for (const Arc& e : arcs)
      if (e.a == v && --indeg[e.b] == 0) ready.push_back(e.b);
  }
  return done == verts.size();
}

// Topological order, top first; among free shapes the one with the lowest
// rank goes on top.
inline std::vector<int> top_down(const std::vector<int>& verts,
                                 const std::vector<Arc>& arcs,
                                 const std::vector<int>& rank) {
  std::map<int, int> indeg;
  for (int v : verts) indeg[v] = 0;
  for (const Arc& e : arcs) ++indeg[e.b];
  std::vector<int> order;
  while (order.size() < verts.size()) {
    int pick = -1;
    for (auto [v, d] : indeg)
      if (d == 0 && (pick < 0 || rank[v] < rank[pick])) pick = v;
    if (pick < 0) throw GeometryError("stacking order graph has a cycle");
    order.push_back(pick);
    indeg[pick] = -1;
    for (const Arc& e : arcs)
      if (e.a == pick) --indeg[e.b];
  }
  return order;
}

// A single order of all shapes that follows as many preferences as
// possible. Hyperedges break ties with it, so that their separately chosen
// orders agree wherever the preferences allow one global order.
inline std::vector<int> global_rank(int shapes, const std::vector<StackingRelation>& rel) {
  std::vector<std::vector<int>> below(shapes);
  std::vector<int> indeg(shapes, 0);
  for (const StackingRelation& r : rel) {
    if (r.preferred == Order::kEqual) continue;
    const int a = r.preferred == Order::kAbove ? r.i : r.j;
    const int b = r.preferred == Order::kAbove ? r.j : r.i;
    below[a].push_back(b);
    ++indeg[b];
  }
  std::vector<int> rank(shapes, -1);
  for (int placed = 0; placed < shapes; ++placed) {
    // The free shape with the lowest index; on a cycle, the shape with the
    // fewest remaining preferences against it.
    int pick = -1;
    for (int v = 0; v < shapes; ++v)
      if (rank[v] < 0 && (pick < 0 || indeg[v] < indeg[pick])) pick = v;
    rank[pick] = placed;
    for (int b : below[pick]) --indeg[b];
  }
  return rank;
}

inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Fixes every relation of hyperedge `edge` to a total order. Relations set
/// by earlier hyperedges are treated as hard constraints; conflicting
/// preferences are flipped, as few as possible. Returns false, changing
/// nothing, when the hard constraints alone already form a cycle.
inline bool resolve_hyperedge(const std::vector<int>& edge,
                              std::vector<StackingRelation>& rel,
                              std::vector<char>& fixed, int& flips,
                              const std::vector<int>& rank) {
  std::vector<int> verts;
  for (int r : edge) {
    verts.push_back(rel[r].i);
    verts.push_back(rel[r].j);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

  std::vector<detail::Arc> hard;
  std::vector<int> soft;
  for (int r : edge) {
    const StackingRelation& s = rel[r];
    if (fixed[r]) {
      hard.push_back(s.value == Order::kAbove ? detail::Arc{s.i, s.j}
                                              : detail::Arc{s.j, s.i});
    } else if (s.preferred != Order::kEqual) {
      soft.push_back(r);
    }
  }
  // Weakest preferences are flipped first.
  std::stable_sort(soft.begin(), soft.end(), [&](int a, int b) {
    if (rel[a].rule != rel[b].rule) return rel[a].rule > rel[b].rule;
    return std::tie(rel[a].i, rel[a].j, rel[a].component) <
           std::tie(rel[b].i, rel[b].j, rel[b].component);
  });
  auto arcs_with = [&](const std::vector<std::size_t>& flipped) {
    std::vector<detail::Arc> arcs = hard;
    for (std::size_t k = 0; k < soft.size(); ++k) {
      const StackingRelation& s = rel[soft[k]];
      bool above = s.preferred == Order::kAbove;
      if (std::find(flipped.begin(), flipped.end(), k) != flipped.end()) above = !above;
      arcs.push_back(above ? detail::Arc{s.i, s.j} : detail::Arc{s.j, s.i});
    }
    return arcs;
  };

  if (!detail::acyclic(verts, hard)) return false;
  std::vector<std::size_t> chosen;
  if (!detail::acyclic(verts, arcs_with(chosen))) {
    if (verts.size() > detail::kMaxHyperedgeShapes)
      throw GeometryError("stacking too entangled");
    bool found = false;
    for (std::size_t k = 1; k <= soft.size() && !found; ++k) {
      chosen.resize(k);
      std::iota(chosen.begin(), chosen.end(), std::size_t{0});
      do {
        if (detail::acyclic(verts, arcs_with(chosen))) {
          found = true;
          break;
        }
      } while (detail::next_combination(chosen, soft.size()));
    }
    if (!found) throw GeometryError("stacking constraints are inconsistent");
  }
  const std::vector<int> order = detail::top_down(verts, arcs_with(chosen), rank);
  auto pos = [&](int v) { return std::find(order.begin(), order.end(), v) - order.begin(); };
  for (int r : edge) {
    if (fixed[r]) continue;
    StackingRelation& s = rel[r];
    s.value = pos(s.i) < pos(s.j) ? Order::kAbove : Order::kBelow;
    s.flipped = s.preferred != Order::kEqual && s.value != s.preferred;
    flips += s.flipped ? 1 : 0;
    fixed[r] = 1;
  }
  return true;
}

/// Local stacking orders for every face of the arrangement of dilations.
inline StackingResult compute_stacking(const StackingInput& in) {
  const geo::Arrangement& arr = *in.arrangement;
  StackingResult out;
  out.components = compute_components(arr);
  out.face_relations.assign(arr.faces().size(), {});
  for (const OverlapComponent& c : out.components.pairs) {
    StackingRelation r;
    r.i = c.i;
    r.j = c.j;
    r.component = c.id;
    std::tie(r.preferred, r.rule) = pairwise_preference(in, c);
    out.relations.push_back(r);
    for (int f : c.faces) out.face_relations[f].push_back(c.id);
  }
  for (auto& fr : out.face_relations) std::sort(fr.begin(), fr.end());
  out.hyperedges = build_hypergraph(out.face_relations);
  // Hyperedges are resolved one after another. If earlier choices make a
  // later hyperedge cyclic, the relations involved are pinned to the global
  // order and everything is resolved again; pinned relations never conflict.
  const std::vector<int> rank = detail::global_rank(arr.shape_count(), out.relations);
  std::vector<char> pinned(out.relations.size(), 0);
  for (bool done = false; !done;) {
    std::vector<char> fixed = pinned;
    out.flips = 0;
    for (std::size_t r = 0; r < out.relations.size(); ++r) {
      StackingRelation& s = out.relations[r];
      s.value = Order::kEqual;
      s.flipped = false;
      if (!pinned[r]) continue;
      s.value = rank[s.i] < rank[s.j] ? Order::kAbove : Order::kBelow;
      s.flipped = s.preferred != Order::kEqual && s.value != s.preferred;
      out.flips += s.flipped ? 1 : 0;
    }
    done = true;
    for (const auto& e : out.hyperedges) {
      if (resolve_hyperedge(e, out.relations, fixed, out.flips, rank)) continue;
      for (int r : e)
        if (fixed[r]) pinned[r] = 1;
      log::debug("stacking conflict between hyperedges; pinning relations");
      done = false;
      break;
    }
  }

  // Per-face total orders from the relations referenced by the face.
  out.face_order.assign(arr.faces().size(), {});
  for (const geo::Face& f : arr.faces()) {
    if (!f.bounded) continue;
    std::vector<int> order = f.shapes;
    std::map<int, int> wins;
    for (int s : order) wins[s] = 0;
    auto above = [&](int a, int b) {
      for (int r : out.face_relations[f.id]) {
        const StackingRelation& s = out.relations[r];
        if (s.i == a && s.j == b) return s.value == Order::kAbove;
        if (s.i == b && s.j == a) return s.value == Order::kBelow;
      }
      throw GeometryError("face lacks a relation for a shape pair");
    };
    for (std::size_t x = 0; x < order.size(); ++x)
      for (std::size_t y = x + 1; y < order.size(); ++y)
        ++wins[above(order[x], order[y]) ? order[x] : order[y]];
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return wins[a] > wins[b]; });
    for (std::size_t x = 0; x < order.size(); ++x)
      for (std::size_t y = x + 1; y < order.size(); ++y)
        if (!above(order[x], order[y]))
          throw GeometryError("inconsistent stacking order in a face");
    out.face_order[f.id] = std::move(order);
  }
  return out;
}

}  // namespace setshapes
