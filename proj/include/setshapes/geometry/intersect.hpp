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

#include <cmath>
#include <vector>

#include "setshapes/geometry/edge.hpp"

namespace setshapes::geo {

namespace detail {

// Whether p, assumed to lie on the supporting line/circle of e, lies on e.
inline bool within_extent(const Edge& e, Point p, double tol) {
  if (e.is_segment()) {
    const double len = dist(e.a, e.b);
    if (len == 0.0) return dist(p, e.a) <= tol;
    const double s = tol / len;
    const double t = e.param_of(p);
    return t >= -s && t <= 1.0 + s;
  }
  const double slack = e.radius > 0.0 ? tol / e.radius : kPi;
  return e.contains_angle(angle_of(p - e.center), slack);
}

inline void push_if_on_both(const Edge& e, const Edge& f, Point p, double tol,
                            std::vector<Point>& out) {
  if (within_extent(e, p, tol) && within_extent(f, p, tol)) out.push_back(p);
}

inline void segment_segment(const Edge& e, const Edge& f, double tol,
                            std::vector<Point>& out) {
  const Vec d1 = e.b - e.a;
  const Vec d2 = f.b - f.a;
  const double den = cross(d1, d2);
  const double scale = norm(d1) * norm(d2);
  if (std::abs(den) <= 1e-12 * scale) return;  // parallel; endpoints cover it
  const double t = cross(f.a - e.a, d2) / den;
  push_if_on_both(e, f, e.a + d1 * t, tol, out);
}

inline void segment_arc(const Edge& s, const Edge& c, double tol,
                        std::vector<Point>& out) {
  const double len = dist(s.a, s.b);
  if (len == 0.0) return;
  const Vec u = (s.b - s.a) / len;
  const double along = dot(c.center - s.a, u);
  const Point foot = s.a + u * along;
  const double h = std::abs(cross(u, c.center - s.a));
  const double r = c.radius;
  if (std::abs(h - r) <= tol) {
    push_if_on_both(s, c, foot, tol, out);
  } else if (h < r) {
    const double w = std::sqrt(r * r - h * h);
    push_if_on_both(s, c, foot - u * w, tol, out);
    push_if_on_both(s, c, foot + u * w, tol, out);
  }
}

inline void arc_arc(const Edge& e, const Edge& f, double tol,
                    std::vector<Point>& out) {
  const Vec delta = f.center - e.center;
  const double d = norm(delta);
  const double r1 = e.radius;
  const double r2 = f.radius;
  if (d <= tol) return;  // concentric or coincident; endpoints cover overlap
  if (d > r1 + r2 + tol || d < std::abs(r1 - r2) - tol) return;
  const Vec u = delta / d;
  const double a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
  if (std::abs(d - (r1 + r2)) <= tol || std::abs(d - std::abs(r1 - r2)) <= tol) {
    push_if_on_both(e, f, e.center + u * std::clamp(a, -r1, r1), tol, out);
    return;
  }
  const double h = std::sqrt(std::max(0.0, r1 * r1 - a * a));
  const Point base = e.center + u * a;
  push_if_on_both(e, f, base + perp(u) * h, tol, out);
  push_if_on_both(e, f, base - perp(u) * h, tol, out);
}

}  // namespace detail

/// Appends the points where edges e and f meet: proper crossings, tangencies
/// (reported once) and endpoints of either edge lying on the other.
inline void edge_intersections(const Edge& e, const Edge& f, double tol,
                               std::vector<Point>& out) {
  if (e.is_segment() && f.is_segment()) {
    detail::segment_segment(e, f, tol, out);
  } else if (e.is_segment()) {
    detail::segment_arc(e, f, tol, out);
  } else if (f.is_segment()) {
    detail::segment_arc(f, e, tol, out);
  } else {
    detail::arc_arc(e, f, tol, out);
  }
  for (Point p : {e.a, e.b})
    if (f.distance(p) <= tol) out.push_back(p);
  for (Point p : {f.a, f.b})
    if (e.distance(p) <= tol) out.push_back(p);
}

}  // namespace setshapes::geo
