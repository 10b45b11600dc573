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
#include <limits>
#include <memory>
#include <numeric>
#include <vector>

#include "setshapes/geometry/boolean.hpp"
#include "setshapes/geometry/overlay.hpp"

namespace setshapes::geo {

struct Face {
  int id = -1;
  bool bounded = false;
  std::vector<int> cycles;   // outer boundary first (bounded faces), then holes
  std::vector<int> shapes;   // D(f): indices of the shapes covering the face
  Point rep;                 // a point strictly inside the face
  double area = 0.0;
};

/// Planar subdivision induced by the boundaries of a set of shapes.
///
/// Half-edge h runs along overlay edge h / 2, forward when h is even. The
/// face of a half-edge lies on its left.
class Arrangement {
 public:
  explicit Arrangement(const std::vector<ArcShape>& shapes) {
    std::vector<const ArcShape*> ptrs;
    Box box;
    for (const ArcShape& s : shapes) {
      ptrs.push_back(&s);
      box.add(s.bbox());
    }
    overlay_ = std::make_unique<Overlay>(ptrs, tolerance_for(box));
    build();
  }

  const Overlay& overlay() const { return *overlay_; }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int f) const { return faces_[f]; }
  int unbounded_face() const { return unbounded_; }
  int shape_count() const { return overlay_->labels(); }

  std::size_t halfedge_count() const { return 2 * overlay_->edges().size(); }
  Edge halfedge_geom(int h) const {
    const Edge& g = overlay_->edges()[h / 2].geom;
    return h % 2 == 0 ? g : g.reversed();
  }
  int face_of(int h) const { return face_of_[h]; }
  const std::vector<int>& cycle(int c) const { return cycles_[c]; }
  const Loop& cycle_loop(int c) const { return cycle_loops_[c]; }

  /// Whether shape k has winding > 0 on the left of half-edge h.
  bool covers_left(int h, int k) const {
    return (h % 2 == 0 ? overlay_->left(h / 2, k) : overlay_->right(h / 2, k)) > 0;
  }
  /// Whether overlay edge e lies on the boundary of shape k.
  bool on_boundary(std::size_t e, int k) const {
    return (overlay_->left(e, k) > 0) != (overlay_->right(e, k) > 0);
  }

  /// Faces sharing at least one edge with f.
  const std::vector<int>& neighbors(int f) const { return adjacency_[f]; }

  /// The face containing p (the unbounded face if none).
  int locate(Point p) const {
    for (const Face& f : faces_) {
      if (!f.bounded || !cycle_boxes_[f.cycles[0]].contains(p)) continue;
      if (inside_face(f, p)) return f.id;
    }
    return unbounded_;
  }

  bool inside_face(const Face& f, Point p) const {
    if (!f.bounded) return locate(p) == f.id;
    int w = 0;
    for (int c : f.cycles)
      if (cycle_boxes_[c].inflated(overlay_->tol()).contains(p))
        w += cycle_loops_[c].winding(p);
    return w == 1;
  }

  /// The union of a set of faces as a region.
  ArcShape region_of(const std::vector<int>& face_ids) const {
    std::vector<char> in(faces_.size(), 0);
    for (int f : face_ids) in[f] = 1;
    std::vector<DirectedEdge> pieces;
    for (std::size_t h = 0; h < halfedge_count(); ++h) {
      if (!in[face_of_[h]] || in[face_of_[h ^ 1]]) continue;
      const DirectedEdge& d = overlay_->edges()[h / 2];
      if (h % 2 == 0) {
        pieces.push_back(d);
      } else {
        pieces.push_back({d.geom.reversed(), d.v1, d.v0});
      }
    }
    ArcShape out;
    if (!link_loops(pieces, overlay_->vertices().size(), overlay_->tol(), out.loops))
      throw GeometryError("arrangement region could not be linked");
    return out;
  }

  /// Counts for Euler's formula V - E + F = 1 + C.
  struct EulerCounts {
    std::size_t vertices, edges, faces, components;
  };
  EulerCounts euler() const {
    return {used_vertices_, overlay_->edges().size(), faces_.size(), components_};
  }

 private:
  void build() {
    const auto& verts = overlay_->vertices();
    const auto& edges = overlay_->edges();
    const std::size_t nh = 2 * edges.size();
    std::vector<int> tail(nh);
    std::vector<detail::Heading> heading(nh);
    std::vector<std::vector<int>> around(verts.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
      tail[2 * e] = edges[e].v0;
      tail[2 * e + 1] = edges[e].v1;
      heading[2 * e] = detail::leaving(edges[e].geom);
      heading[2 * e + 1] = detail::leaving(edges[e].geom.reversed());
      around[edges[e].v0].push_back(static_cast<int>(2 * e));
      around[edges[e].v1].push_back(static_cast<int>(2 * e + 1));
    }

    // Counter-clockwise order of outgoing half-edges at every vertex.
    std::vector<int> pos(nh);
    for (auto& list : around) {
      if (list.empty()) continue;
      ++used_vertices_;
      sort_ccw(list, heading);
      for (std::size_t i = 0; i < list.size(); ++i) pos[list[i]] = static_cast<int>(i);
    }
    std::vector<int> next(nh);
    for (std::size_t h = 0; h < nh; ++h) {
      const int twin = static_cast<int>(h ^ 1);
      const auto& list = around[tail[twin]];
      const int k = pos[twin];
      next[h] = list[(k + static_cast<int>(list.size()) - 1) % list.size()];
    }

    // Trace boundary cycles.
    std::vector<int> cycle_of(nh, -1);
    for (std::size_t h = 0; h < nh; ++h) {
      if (cycle_of[h] >= 0) continue;
      const int c = static_cast<int>(cycles_.size());
      cycles_.emplace_back();
      Loop loop;
      int cur = static_cast<int>(h);
      do {
        cycle_of[cur] = c;
        cycles_[c].push_back(cur);
        loop.edges.push_back(halfedge_geom(cur));
        cur = next[cur];
      } while (cur != static_cast<int>(h) && cycle_of[cur] < 0);
      cycle_boxes_.push_back(loop.bbox());
      cycle_loops_.push_back(std::move(loop));
    }

    // Connected components of the edge graph.
    detail::DisjointSets comp(verts.size());
    for (const DirectedEdge& d : edges) comp.unite(d.v0, d.v1);
    std::vector<int> comp_id(verts.size(), -1);
    for (std::size_t v = 0; v < verts.size(); ++v) {
      if (around[v].empty()) continue;
      const int r = comp.find(static_cast<int>(v));
      if (comp_id[r] < 0) comp_id[r] = static_cast<int>(components_++);
    }
    auto component_of_cycle = [&](int c) {
      return comp_id[comp.find(tail[cycles_[c][0]])];
    };

    // Positive cycles bound faces; every other cycle is a hole of the
    // smallest positive cycle of another component that contains it.
    std::vector<double> area(cycles_.size());
    for (std::size_t c = 0; c < cycles_.size(); ++c)
      area[c] = cycle_loops_[c].signed_area();
    std::vector<int> face_of_cycle(cycles_.size(), -1);
    for (std::size_t c = 0; c < cycles_.size(); ++c) {
      if (area[c] <= 0.0) continue;
      Face f;
      f.id = static_cast<int>(faces_.size());
      f.bounded = true;
      f.cycles.push_back(static_cast<int>(c));
      face_of_cycle[c] = f.id;
      faces_.push_back(std::move(f));
    }
    unbounded_ = static_cast<int>(faces_.size());
    {
      Face f;
      f.id = unbounded_;
      faces_.push_back(std::move(f));
    }
    for (std::size_t c = 0; c < cycles_.size(); ++c) {
      if (area[c] > 0.0) continue;
      const Point probe = overlay_->sample(cycles_[c][0] / 2);
      const int comp_c = component_of_cycle(static_cast<int>(c));
      int best = -1;
      for (std::size_t o = 0; o < cycles_.size(); ++o) {
        if (area[o] <= 0.0 || component_of_cycle(static_cast<int>(o)) == comp_c)
          continue;
        if (!cycle_boxes_[o].contains(probe)) continue;
        if (cycle_loops_[o].winding(probe) != 1) continue;
        if (best < 0 || area[o] < area[best]) best = static_cast<int>(o);
      }
      const int f = best < 0 ? unbounded_ : face_of_cycle[best];
      faces_[f].cycles.push_back(static_cast<int>(c));
      face_of_cycle[c] = f;
    }
    face_of_.assign(nh, -1);
    for (std::size_t c = 0; c < cycles_.size(); ++c)
      for (int h : cycles_[c]) face_of_[h] = face_of_cycle[c];

    adjacency_.assign(faces_.size(), {});
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const int a = face_of_[2 * e];
      const int b = face_of_[2 * e + 1];
      if (a == b) continue;
      adjacency_[a].push_back(b);
      adjacency_[b].push_back(a);
    }
    for (auto& adj : adjacency_) {
      std::sort(adj.begin(), adj.end());
      adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }

    Box all;
    for (const Box& b : cycle_boxes_) all.add(b);
    for (Face& f : faces_) {
      for (int c : f.cycles) f.area += area[c];
      if (!f.bounded) {
        f.rep = all.empty() ? Point{0, 0} : Point{all.min_x - 1.0, all.min_y - 1.0};
        continue;
      }
      const int h = cycles_[f.cycles[0]][0];
      for (int k = 0; k < overlay_->labels(); ++k)
        if (covers_left(h, k)) f.shapes.push_back(k);
      f.rep = representative(f);
    }
  }

  static void sort_ccw(std::vector<int>& list,
                       const std::vector<detail::Heading>& heading) {
    std::sort(list.begin(), list.end(), [&](int a, int b) {
      return heading[a].angle < heading[b].angle;
    });
    if (list.size() < 2) return;
    // Start after the widest angular gap so near-equal angles never straddle
    // the 0/2pi seam, then order tangent ties by curvature.
    std::size_t start = 0;
    double widest = -1.0;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const double a = heading[list[i]].angle;
      const double prev = heading[list[(i + list.size() - 1) % list.size()]].angle;
      const double gap = wrap_positive(a - prev);
      if (gap > widest) {
        widest = gap;
        start = i;
      }
    }
    std::rotate(list.begin(), list.begin() + static_cast<long>(start), list.end());
    const double base = heading[list[0]].angle;
    auto rel = [&](int h) { return wrap_positive(heading[h].angle - base); };
    std::size_t i = 0;
    while (i < list.size()) {
      std::size_t j = i + 1;
      while (j < list.size() && rel(list[j]) - rel(list[j - 1]) <= detail::kAngleTol) ++j;
      std::sort(list.begin() + static_cast<long>(i), list.begin() + static_cast<long>(j),
                [&](int a, int b) { return heading[a].curvature < heading[b].curvature; });
      i = j;
    }
  }

  double clearance(const Face& f, Point p) const {
    double d = std::numeric_limits<double>::infinity();
    for (int c : f.cycles) d = std::min(d, cycle_loops_[c].distance(p));
    return d;
  }

  Point representative(const Face& f) const {
    Point best;
    double best_d = -1.0;
    const double diag = cycle_boxes_[f.cycles[0]].diagonal();
    for (int c : f.cycles) {
      for (int h : cycles_[c]) {
        const Edge g = halfedge_geom(h);
        const double len = std::min(g.length(), diag);
        for (double t : {0.5, 0.25, 0.75}) {
          const Point base = g.at(t);
          const Vec n = perp(g.tangent(t));
          for (double frac = 0.5; frac > 1e-4; frac *= 0.25) {
            const Point p = base + n * (len * frac);
            if (!inside_face(f, p)) continue;
            const double d = clearance(f, p);
            if (d > best_d) {
              best_d = d;
              best = p;
            }
            break;
          }
        }
      }
    }
    if (best_d < 0.0) {
      const Edge g = halfedge_geom(cycles_[f.cycles[0]][0]);
      best = g.at(0.5) + perp(g.tangent(0.5)) * (4 * overlay_->tol());
    }
    return best;
  }

  std::unique_ptr<Overlay> overlay_;
  std::vector<Face> faces_;
  int unbounded_ = -1;
  std::vector<std::vector<int>> cycles_;
  std::vector<Loop> cycle_loops_;
  std::vector<Box> cycle_boxes_;
  std::vector<int> face_of_;
  std::vector<std::vector<int>> adjacency_;
  std::size_t used_vertices_ = 0;
  std::size_t components_ = 0;
};

}  // namespace setshapes::geo
