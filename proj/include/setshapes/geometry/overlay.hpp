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
#include <cmath>
#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <utility>
#include <vector>

#include "setshapes/geometry/edge.hpp"
#include "setshapes/geometry/intersect.hpp"

namespace setshapes::geo {

/// Tolerance used for a computation whose inputs span `box`: the global
/// epsilon, widened only when coordinates are large enough for double
/// rounding to approach it.
inline double tolerance_for(const Box& box) {
  if (box.empty()) return kEps;
  const double m = std::max({std::abs(box.min_x), std::abs(box.max_x),
                             std::abs(box.min_y), std::abs(box.max_y)});
  return std::max(kEps, 4e-13 * m);
}

struct DirectedEdge {
  Edge geom;
  int v0 = -1;
  int v1 = -1;
};

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // The smaller index always becomes the root, so earlier points win.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<int> parent_;
};

inline std::uint64_t cell_key(std::int64_t cx, std::int64_t cy) {
  return (static_cast<std::uint64_t>(cx) * 0x9E3779B97F4A7C15ull) ^
         static_cast<std::uint64_t>(cy);
}

// Direction key of an edge leaving a vertex: tangent angle and curvature.
struct Heading {
  double angle;
  double curvature;
};

inline Heading leaving(const Edge& e) {
  return {wrap_positive(angle_of(e.tangent(0.0))), e.curvature()};
}

inline Heading arriving_reversed(const Edge& e) {
  return {wrap_positive(angle_of(-e.tangent(1.0))), -e.curvature()};
}

inline constexpr double kAngleTol = 1e-7;

// Counter-clockwise angle from `ref` to `h` in (0, 2pi]; curvature resolves
// coincident tangents.
inline double turn_key(const Heading& ref, const Heading& h) {
  double d = wrap_positive(h.angle - ref.angle);
  if (d < kAngleTol || d > kTwoPi - kAngleTol)
    d = h.curvature < ref.curvature ? kTwoPi : 0.0;
  return d;
}

// Whether out-edge a turns further left than out-edge b relative to ref.
inline bool more_left(const Heading& ref, const Heading& a, const Heading& b) {
  const double da = turn_key(ref, a);
  const double db = turn_key(ref, b);
  if (std::abs(da - db) > kAngleTol) return da > db;
  return a.curvature > b.curvature;
}

inline bool same_support(const Edge& e, const Edge& f, double tol) {
  if (e.kind != f.kind) return false;
  if (e.is_segment()) {
    const Vec d = f.b - e.a;
    const double len = norm(d);
    if (len <= tol) return false;
    if (dot(e.b - e.a, f.b - f.a) <= 0.0) return false;
    return std::abs(cross(d, e.b - e.a)) / len <= tol &&
           std::abs(cross(d, f.a - e.a)) / len <= tol;
  }
  return e.ccw() == f.ccw() && dist(e.center, f.center) <= tol &&
         std::abs(e.radius - f.radius) <= tol;
}

inline Edge join(const Edge& e, const Edge& f) {
  if (e.is_segment()) return Edge::segment(e.a, f.b);
  Edge out = e;
  out.b = f.b;
  out.sweep = e.sweep + f.sweep;
  if (std::abs(out.sweep) >= kTwoPi - 1e-9) {
    out.sweep = out.sweep > 0 ? kTwoPi : -kTwoPi;
    out.b = out.a;
  }
  return out;
}

}  // namespace detail

/// Merges consecutive collinear segments and consecutive arcs of one circle.
inline void simplify_loop(Loop& loop, double tol) {
  std::vector<Edge>& es = loop.edges;
  bool changed = true;
  while (changed && es.size() > 1) {
    changed = false;
    std::vector<Edge> out;
    out.reserve(es.size());
    for (const Edge& e : es) {
      if (!out.empty() && detail::same_support(out.back(), e, tol) &&
          !out.back().full_circle()) {
        out.back() = detail::join(out.back(), e);
        changed = true;
      } else {
        out.push_back(e);
      }
    }
    if (out.size() > 1 && detail::same_support(out.back(), out.front(), tol) &&
        !out.back().full_circle()) {
      out.front() = detail::join(out.back(), out.front());
      out.pop_back();
      changed = true;
    }
    es = std::move(out);
  }
}

/// Chains directed edges into closed loops, turning as far left as possible
/// at every vertex so that regions touching at a point stay separate.
/// Returns false when the edges do not close up.
inline bool link_loops(const std::vector<DirectedEdge>& edges,
                       std::size_t vertex_count, double tol,
                       std::vector<Loop>& loops) {
  std::vector<std::vector<int>> out(vertex_count);
  for (std::size_t i = 0; i < edges.size(); ++i)
    out[edges[i].v0].push_back(static_cast<int>(i));
  std::vector<char> used(edges.size(), 0);
  for (std::size_t start = 0; start < edges.size(); ++start) {
    if (used[start]) continue;
    used[start] = 1;
    Loop loop;
    loop.edges.push_back(edges[start].geom);
    int cur = static_cast<int>(start);
    std::size_t guard = 0;
    while (true) {
      const int v = edges[cur].v1;
      const detail::Heading ref = detail::arriving_reversed(edges[cur].geom);
      int best = -1;
      detail::Heading best_h{};
      for (int cand : out[v]) {
        if (used[cand] && cand != static_cast<int>(start)) continue;
        const detail::Heading h = detail::leaving(edges[cand].geom);
        if (best < 0 || detail::more_left(ref, h, best_h)) {
          best = cand;
          best_h = h;
        }
      }
      if (best < 0) return false;
      if (best == static_cast<int>(start)) break;
      used[best] = 1;
      loop.edges.push_back(edges[best].geom);
      cur = best;
      if (++guard > edges.size()) return false;
    }
    simplify_loop(loop, 64 * tol);
    loops.push_back(std::move(loop));
  }
  return true;
}

/// Planar overlay of labelled regions. Every boundary is split at all mutual
/// intersections; coincident pieces are merged; each unique piece records
/// the winding number of every label on its left and right side.
class Overlay {
 public:
  Overlay(const std::vector<const ArcShape*>& shapes, double tol)
      : labels_(static_cast<int>(shapes.size())), tol_(tol) {
    build(shapes);
  }

  int labels() const { return labels_; }
  double tol() const { return tol_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<DirectedEdge>& edges() const { return edges_; }
  /// A point in the relative interior of edge e.
  Point sample(std::size_t e) const { return mids_[e]; }
  int left(std::size_t e, int label) const { return wl_[e * labels_ + label]; }
  int right(std::size_t e, int label) const { return wr_[e * labels_ + label]; }
  const int* left_row(std::size_t e) const { return &wl_[e * labels_]; }
  const int* right_row(std::size_t e) const { return &wr_[e * labels_]; }

  /// Boundary pieces of {p : pred(winding numbers at p)}, oriented with the
  /// region on their left.
  template <class Pred>
  std::vector<DirectedEdge> select(Pred pred) const {
    std::vector<DirectedEdge> out;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const bool l = pred(left_row(e));
      const bool r = pred(right_row(e));
      if (l == r) continue;
      if (l) {
        out.push_back(edges_[e]);
      } else {
        out.push_back({edges_[e].geom.reversed(), edges_[e].v1, edges_[e].v0});
      }
    }
    return out;
  }

  template <class Pred>
  double area(Pred pred) const {
    double s = 0.0;
    for (const DirectedEdge& d : select(pred)) s += d.geom.area_term();
    return s;
  }

  /// Returns false if the selected boundary cannot be linked into loops.
  template <class Pred>
  bool extract(Pred pred, ArcShape& result) const {
    result.loops.clear();
    return link_loops(select(pred), vertices_.size(), tol_, result.loops);
  }

 private:
  struct InputEdge {
    Edge e;
    Box box;
    int label;
  };
  struct InputLoop {
    Box box;
    int first;
    int last;
    int label;
  };

  void build(const std::vector<const ArcShape*>& shapes) {
    for (int k = 0; k < labels_; ++k) {
      for (const Loop& l : shapes[k]->loops) {
        InputLoop il{Box{}, static_cast<int>(in_.size()), 0, k};
        for (const Edge& e : l.edges) {
          if (e.length() <= tol_) continue;
          in_.push_back({e, e.bbox(), k});
          il.box.add(in_.back().box);
        }
        il.last = static_cast<int>(in_.size());
        if (il.last > il.first) {
          il.box = il.box.inflated(2 * tol_);
          loops_.push_back(il);
        }
      }
    }
    const std::size_t n = in_.size();
    std::vector<Point> raw;
    std::vector<std::vector<std::pair<double, int>>> hits(n);
    for (std::size_t i = 0; i < n; ++i) {
      hits[i].push_back({0.0, static_cast<int>(raw.size())});
      raw.push_back(in_[i].e.a);
      hits[i].push_back({1.0, static_cast<int>(raw.size())});
      raw.push_back(in_[i].e.b);
    }

    // Pairwise intersections, pruned by a sweep over bounding boxes.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      return in_[x].box.min_x < in_[y].box.min_x;
    });
    std::vector<Point> found;
    for (std::size_t oi = 0; oi < n; ++oi) {
      const int i = order[oi];
      const Box bi = in_[i].box.inflated(tol_);
      for (std::size_t oj = oi + 1; oj < n; ++oj) {
        const int j = order[oj];
        if (in_[j].box.min_x > bi.max_x) break;
        if (!bi.intersects(in_[j].box)) continue;
        found.clear();
        edge_intersections(in_[i].e, in_[j].e, tol_, found);
        for (Point p : found) {
          const int id = static_cast<int>(raw.size());
          raw.push_back(p);
          hits[i].push_back({std::clamp(in_[i].e.param_of(p), 0.0, 1.0), id});
          hits[j].push_back({std::clamp(in_[j].e.param_of(p), 0.0, 1.0), id});
        }
      }
    }

    // Cluster nearby points into vertices.
    const double snap = 64 * tol_;
    detail::DisjointSets sets(raw.size());
    std::unordered_map<std::uint64_t, std::vector<int>> grid;
    grid.reserve(raw.size() * 2);
    auto cell = [&](double v) {
      return static_cast<std::int64_t>(std::floor(v / snap));
    };
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const std::int64_t cx = cell(raw[i].x);
      const std::int64_t cy = cell(raw[i].y);
      for (std::int64_t dx = -1; dx <= 1; ++dx)
        for (std::int64_t dy = -1; dy <= 1; ++dy) {
          auto it = grid.find(detail::cell_key(cx + dx, cy + dy));
          if (it == grid.end()) continue;
          for (int j : it->second)
            if (dist(raw[i], raw[j]) <= snap) sets.unite(static_cast<int>(i), j);
        }
      grid[detail::cell_key(cx, cy)].push_back(static_cast<int>(i));
    }
    std::vector<int> vid(raw.size(), -1);
    std::vector<int> root_vertex(raw.size(), -1);
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const int r = sets.find(static_cast<int>(i));
      if (root_vertex[r] < 0) {
        root_vertex[r] = static_cast<int>(vertices_.size());
        vertices_.push_back(raw[r]);
      }
      vid[i] = root_vertex[r];
    }

    // Split edges at vertices that lie on them but were not reported.
    std::vector<int> by_x(vertices_.size());
    std::iota(by_x.begin(), by_x.end(), 0);
    std::sort(by_x.begin(), by_x.end(), [&](int x, int y) {
      return vertices_[x].x < vertices_[y].x;
    });
    std::vector<std::vector<std::pair<double, int>>> vhits(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (auto [t, r] : hits[i]) vhits[i].push_back({t, vid[r]});
      const Box b = in_[i].box.inflated(tol_);
      auto lo = std::lower_bound(by_x.begin(), by_x.end(), b.min_x,
                                 [&](int v, double x) { return vertices_[v].x < x; });
      for (auto it = lo; it != by_x.end() && vertices_[*it].x <= b.max_x; ++it) {
        const Point p = vertices_[*it];
        if (!b.contains(p)) continue;
        bool known = false;
        for (const auto& h : vhits[i]) known = known || h.second == *it;
        if (known || in_[i].e.distance(p) > tol_) continue;
        vhits[i].push_back({std::clamp(in_[i].e.param_of(p), 0.0, 1.0), *it});
      }
    }

    // Cut into sub-edges and merge coincident pieces.
    std::unordered_map<std::uint64_t, std::vector<int>> by_pair;
    for (std::size_t i = 0; i < n; ++i) {
      auto& hs = vhits[i];
      std::stable_sort(hs.begin(), hs.end(),
                       [](const auto& x, const auto& y) { return x.first < y.first; });
      const Edge& e = in_[i].e;
      const double len = e.length();
      std::size_t k = 0;
      for (std::size_t m = 1; m < hs.size(); ++m) {
        const auto [t0, v0] = hs[k];
        const auto [t1, v1] = hs[m];
        if (v0 == v1 && (t1 - t0) * len <= 4 * snap) continue;
        if (v0 == v1 && !e.full_circle()) continue;
        const double tm = 0.5 * (t0 + t1);
        add_piece(e.sub(t0, t1, vertices_[v0], vertices_[v1]), v0, v1,
                  e.at(tm), e.tangent(tm), snap, by_pair);
        k = m;
      }
    }

    compute_windings();
  }

  // `m` and `tan` are taken on the unsnapped source edge so that the piece's
  // own support is recognised as coincident when computing windings.
  void add_piece(const Edge& g, int v0, int v1, Point m, Vec tan, double snap,
                 std::unordered_map<std::uint64_t, std::vector<int>>& by_pair) {
    if (g.length() <= tol_) return;
    const auto lo = static_cast<std::uint64_t>(std::min(v0, v1));
    const auto hi = static_cast<std::uint64_t>(std::max(v0, v1));
    auto& bucket = by_pair[(lo << 32) | hi];
    for (int id : bucket)
      if (dist(mids_[id], m) <= 4 * snap) return;
    bucket.push_back(static_cast<int>(edges_.size()));
    edges_.push_back({g, v0, v1});
    mids_.push_back(m);
    tans_.push_back(tan);
  }

  void compute_windings() {
    wl_.assign(edges_.size() * labels_, 0);
    wr_.assign(edges_.size() * labels_, 0);
    std::vector<double> sum(labels_);
    std::vector<int> half(labels_);
    for (std::size_t s = 0; s < edges_.size(); ++s) {
      const Point m = mids_[s];
      const Vec tan = tans_[s];
      std::fill(sum.begin(), sum.end(), 0.0);
      std::fill(half.begin(), half.end(), 0);
      for (const InputLoop& l : loops_) {
        if (!l.box.contains(m)) continue;
        for (int i = l.first; i < l.last; ++i) {
          const InputEdge& ie = in_[i];
          if (ie.box.inflated(tol_).contains(m) && ie.e.distance(m) <= tol_) {
            const double t = std::clamp(ie.e.param_of(m), 0.0, 1.0);
            half[l.label] += dot(ie.e.tangent(t), tan) > 0.0 ? 1 : -1;
            if (ie.e.is_arc()) sum[l.label] += 0.5 * ie.e.sweep;
          } else {
            sum[l.label] += ie.e.winding_angle(m);
          }
        }
      }
      for (int k = 0; k < labels_; ++k) {
        const double w = sum[k] / kTwoPi;
        wl_[s * labels_ + k] = static_cast<int>(std::lround(w + 0.5 * half[k]));
        wr_[s * labels_ + k] = static_cast<int>(std::lround(w - 0.5 * half[k]));
      }
    }
  }

  int labels_;
  double tol_;
  std::vector<InputEdge> in_;
  std::vector<InputLoop> loops_;
  std::vector<Point> vertices_;
  std::vector<DirectedEdge> edges_;
  std::vector<Point> mids_;
  std::vector<Vec> tans_;
  std::vector<int> wl_;
  std::vector<int> wr_;
};

}  // namespace setshapes::geo
