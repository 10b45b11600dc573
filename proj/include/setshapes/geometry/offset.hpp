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
#include <vector>

#include "setshapes/geometry/boolean.hpp"

namespace setshapes::geo {

inline ArcShape dilate(Point p, double r) { return disk_shape({p, r}); }

/// The r-neighbourhood of segment ab (a "stadium").
inline Loop stadium_loop(Point a, Point b, double r) {
  const Vec d = unit(b - a);
  const Vec n{d.y, -d.x};  // right-hand normal
  Loop l;
  l.edges.push_back(Edge::segment(a + n * r, b + n * r));
  l.edges.push_back(Edge::arc(b, r, angle_of(n), kPi));
  l.edges.back().a = b + n * r;
  l.edges.back().b = b - n * r;
  l.edges.push_back(Edge::segment(b - n * r, a - n * r));
  l.edges.push_back(Edge::arc(a, r, angle_of(n) + kPi, kPi));
  l.edges.back().a = a - n * r;
  l.edges.back().b = a + n * r;
  return l;
}

/// Union of the stadiums of consecutive polyline vertices, left as
/// overlapping loops (positive winding = inside).
inline ArcShape dilate_polyline_loops(const std::vector<Point>& pts, double r) {
  if (pts.size() == 1) return dilate(pts[0], r);
  ArcShape soup;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    soup.loops.push_back(stadium_loop(pts[i], pts[i + 1], r));
  return soup;
}

inline ArcShape dilate_polyline(const std::vector<Point>& pts, double r) {
  if (pts.size() <= 2) return dilate_polyline_loops(pts, r);
  return regularize(dilate_polyline_loops(pts, r));
}

/// Dilation of a convex polygon given by its counter-clockwise hull: edges
/// shift outward by r and every corner becomes an arc of radius r.
inline ArcShape dilate_convex(const std::vector<Point>& hull, double r) {
  if (hull.size() == 1) return dilate(hull[0], r);
  if (hull.size() == 2) return ArcShape::from_loop(stadium_loop(hull[0], hull[1], r));
  const std::size_t k = hull.size();
  std::vector<Vec> normal(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Vec d = unit(hull[(i + 1) % k] - hull[i]);
    normal[i] = {d.y, -d.x};
  }
  Loop l;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = (i + 1) % k;
    const Point c = hull[j];
    l.edges.push_back(Edge::segment(hull[i] + normal[i] * r, c + normal[i] * r));
    const double sweep =
        wrap_positive(angle_of(normal[j]) - angle_of(normal[i]));
    Edge arc = Edge::arc(c, r, angle_of(normal[i]), sweep);
    arc.a = c + normal[i] * r;
    arc.b = c + normal[j] * r;
    l.edges.push_back(arc);
  }
  return ArcShape::from_loop(std::move(l));
}

/// The r-neighbourhood of the boundary of `s`, as overlapping loops: one
/// sweep per edge plus a disk at every vertex.
inline ArcShape boundary_sweeps(const ArcShape& s, double r) {
  const double tol = tolerance_for(s.bbox());
  ArcShape out;
  std::vector<Point> corners;
  for (const Loop& l : s.loops) {
    for (const Edge& e : l.edges) {
      if (e.length() <= tol) continue;
      if (e.is_segment()) {
        const Vec n = perp(unit(e.b - e.a));
        out.loops.push_back(polygon_loop(
            {e.a - n * r, e.b - n * r, e.b + n * r, e.a + n * r}));
      } else {
        const Point c = e.center;
        const double big = e.radius + r;
        if (e.full_circle()) {
          Loop outer;
          outer.edges.push_back(Edge::circle(c, big));
          out.loops.push_back(std::move(outer));
          if (e.radius > r + tol) {
            Loop inner;
            inner.edges.push_back(Edge::circle(c, e.radius - r, false));
            out.loops.push_back(std::move(inner));
          }
          continue;
        }
        const double sweep = std::abs(e.sweep);
        const double start = e.sweep > 0 ? e.start_angle : e.start_angle + e.sweep;
        const Edge outer = Edge::arc(c, big, start, sweep);
        Loop l;
        l.edges.push_back(outer);
        if (e.radius > r + tol) {
          const Edge inner = Edge::arc(c, e.radius - r, start + sweep, -sweep);
          l.edges.push_back(Edge::segment(outer.b, inner.a));
          l.edges.push_back(inner);
          l.edges.push_back(Edge::segment(inner.b, outer.a));
        } else {
          l.edges.push_back(Edge::segment(outer.b, c));
          l.edges.push_back(Edge::segment(c, outer.a));
        }
        out.loops.push_back(std::move(l));
      }
      corners.push_back(e.a);
      corners.push_back(e.b);
    }
  }
  std::sort(corners.begin(), corners.end(), [](Point p, Point q) {
    return p.x < q.x || (p.x == q.x && p.y < q.y);
  });
  corners.erase(std::unique(corners.begin(), corners.end()), corners.end());
  for (Point p : corners) {
    Loop disk;
    disk.edges.push_back(Edge::circle(p, r));
    out.loops.push_back(std::move(disk));
  }
  return out;
}

/// Minkowski sum with a disk of radius r.
inline ArcShape dilate(const ArcShape& s, double r) {
  if (s.empty() || r <= 0.0) return s;
  const ArcShape sweeps = boundary_sweeps(s, r);
  return overlay_region({&s, &sweeps},
                        [](const int* w) { return w[0] > 0 || w[1] > 0; });
}

/// Minkowski difference with a disk of radius r: points whose r-disk lies
/// inside `s`. May be empty.
inline ArcShape erode(const ArcShape& s, double r) {
  if (s.empty() || r <= 0.0) return s;
  const ArcShape sweeps = boundary_sweeps(s, r);
  return overlay_region({&s, &sweeps},
                        [](const int* w) { return w[0] > 0 && w[1] <= 0; });
}

inline ArcShape opening(const ArcShape& s, double r) {
  return dilate(erode(s, r), r);
}

inline ArcShape closing(const ArcShape& s, double r) {
  return erode(dilate(s, r), r);
}

}  // namespace setshapes::geo
