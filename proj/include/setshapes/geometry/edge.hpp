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
#include <limits>
#include <utility>
#include <vector>

#include "setshapes/geometry/point.hpp"

namespace setshapes::geo {

enum class EdgeKind : std::uint8_t { kSegment, kArc };

/// A boundary piece: a straight segment or a circular arc.
///
/// Arcs keep their exact circle (center, radius) together with a start angle
/// and a signed sweep (positive = counter-clockwise). The endpoints `a` and
/// `b` are stored explicitly so consecutive edges of a loop share bit-equal
/// vertices. A sweep of magnitude 2pi denotes a full circle with a == b.
struct Edge {
  EdgeKind kind = EdgeKind::kSegment;
  Point a;
  Point b;
  Point center;
  double radius = 0.0;
  double start_angle = 0.0;
  double sweep = 0.0;

  static Edge segment(Point a, Point b) {
    Edge e;
    e.kind = EdgeKind::kSegment;
    e.a = a;
    e.b = b;
    return e;
  }

  static Edge arc(Point c, double r, double start_angle, double sweep) {
    Edge e;
    e.kind = EdgeKind::kArc;
    e.center = c;
    e.radius = r;
    e.start_angle = start_angle;
    e.sweep = sweep;
    e.a = c + dir(start_angle) * r;
    e.b = std::abs(sweep) >= kTwoPi ? e.a : c + dir(start_angle + sweep) * r;
    return e;
  }

  /// Arc from `a` to `b` around `c`; endpoints are kept verbatim.
  static Edge arc_between(Point c, double r, Point a, Point b, bool ccw) {
    Edge e;
    e.kind = EdgeKind::kArc;
    e.center = c;
    e.radius = r;
    e.a = a;
    e.b = b;
    e.start_angle = angle_of(a - c);
    const double end = angle_of(b - c);
    e.sweep = ccw ? wrap_positive(end - e.start_angle)
                  : -wrap_positive(e.start_angle - end);
    return e;
  }

  static Edge circle(Point c, double r, bool ccw = true,
                     double start_angle = 0.0) {
    return arc(c, r, start_angle, ccw ? kTwoPi : -kTwoPi);
  }

  bool is_arc() const { return kind == EdgeKind::kArc; }
  bool is_segment() const { return kind == EdgeKind::kSegment; }
  bool ccw() const { return sweep > 0.0; }
  bool full_circle() const { return is_arc() && std::abs(sweep) >= kTwoPi; }
  double end_angle() const { return start_angle + sweep; }

  double length() const {
    return is_arc() ? radius * std::abs(sweep) : dist(a, b);
  }

  Point at(double t) const {
    if (!is_arc()) return lerp(a, b, t);
    if (t <= 0.0) return a;
    if (t >= 1.0) return b;
    return center + dir(start_angle + sweep * t) * radius;
  }

  Point mid() const { return at(0.5); }

  /// Unit tangent in the direction of travel.
  Vec tangent(double t) const {
    if (!is_arc()) return unit(b - a);
    const Vec radial = dir(start_angle + sweep * t);
    return ccw() ? perp(radial) : -perp(radial);
  }

  /// Signed curvature: +1/r for counter-clockwise arcs, -1/r for clockwise.
  double curvature() const {
    if (!is_arc() || radius <= 0.0) return 0.0;
    return ccw() ? 1.0 / radius : -1.0 / radius;
  }

  Edge reversed() const {
    Edge e = *this;
    std::swap(e.a, e.b);
    if (is_arc()) {
      e.start_angle = start_angle + sweep;
      e.sweep = -sweep;
    }
    return e;
  }

  /// Sub-edge between parameters t0 < t1 whose endpoints are snapped to pa/pb.
  Edge sub(double t0, double t1, Point pa, Point pb) const {
    Edge e = *this;
    e.a = pa;
    e.b = pb;
    if (is_arc()) {
      e.start_angle = start_angle + sweep * t0;
      e.sweep = sweep * (t1 - t0);
    }
    return e;
  }

  Box bbox() const {
    Box box;
    box.add(a);
    box.add(b);
    if (is_arc()) {
      for (int k = 0; k < 4; ++k) {
        const double theta = k * (kPi / 2);
        if (contains_angle(theta, 0.0)) box.add(center + dir(theta) * radius);
      }
    }
    return box;
  }

  /// Contribution to the enclosed area of a loop (Green's theorem).
  double area_term() const {
    if (!is_arc()) return 0.5 * cross(a, b);
    const double t0 = start_angle;
    const double t1 = start_angle + sweep;
    const double r = radius;
    return 0.5 * (r * center.x * (std::sin(t1) - std::sin(t0)) -
                  r * center.y * (std::cos(t1) - std::cos(t0)) + r * r * sweep);
  }

  /// Angular offset of `theta` from the start, measured along the sweep, in
  /// [0, 2pi).
  double angular_offset(double theta) const {
    return ccw() ? wrap_positive(theta - start_angle)
                 : wrap_positive(start_angle - theta);
  }

  /// Whether the ray at angle `theta` from the center meets the arc, allowing
  /// `tol` radians of slack at either end.
  bool contains_angle(double theta, double tol) const {
    if (full_circle()) return true;
    const double off = angular_offset(theta);
    const double span = std::abs(sweep);
    return off <= span + tol || off >= kTwoPi - tol;
  }

  /// Parameter of the point of the underlying curve closest to p. Values may
  /// fall slightly outside [0, 1] near the ends.
  double param_of(Point p) const {
    if (!is_arc()) {
      const Vec d = b - a;
      const double len2 = norm2(d);
      return len2 > 0.0 ? dot(p - a, d) / len2 : 0.0;
    }
    const double span = std::abs(sweep);
    double off = angular_offset(angle_of(p - center));
    if (!full_circle() && off > span + 0.5 * (kTwoPi - span)) off -= kTwoPi;
    return off / span;
  }

  Point closest(Point p) const {
    if (!is_arc()) {
      const Vec d = b - a;
      const double len2 = norm2(d);
      if (len2 == 0.0) return a;
      return a + d * std::clamp(dot(p - a, d) / len2, 0.0, 1.0);
    }
    const Vec v = p - center;
    if (norm2(v) == 0.0) return a;
    const double theta = angle_of(v);
    if (contains_angle(theta, 0.0)) return center + unit(v) * radius;
    return dist2(p, a) <= dist2(p, b) ? a : b;
  }

  double distance(Point p) const { return dist(p, closest(p)); }

  /// Signed angle subtended at p while travelling along the edge. p must not
  /// lie on the edge.
  double winding_angle(Point p) const {
    if (!is_arc()) return std::atan2(cross(a - p, b - p), dot(a - p, b - p));
    const int pieces =
        std::max(1, static_cast<int>(std::ceil(std::abs(sweep) / (kPi / 2))));
    const double step = sweep / pieces;
    const bool inside_circle = dist2(p, center) < radius * radius;
    double total = 0.0;
    Point u = a;
    for (int k = 0; k < pieces; ++k) {
      const double th1 = start_angle + step * (k + 1);
      const Point v =
          (k + 1 == pieces) ? b : center + dir(th1) * radius;
      const Point w = center + dir(start_angle + step * (k + 0.5)) * radius;
      const double cr = cross(u - p, v - p);
      const double dt = dot(u - p, v - p);
      const double scale = norm2(v - u);
      if (inside_circle) {
        const double side_p = cross(v - u, p - u);
        const double side_w = cross(v - u, w - u);
        if (std::abs(side_p) <= 1e-14 * scale && dt < 0.0) {
          // p sits on the chord: the arc sweeps exactly half a turn.
          total += sweep > 0 ? kPi : -kPi;
        } else {
          double phi = std::atan2(cr, dt);
          if (side_p * side_w > 0.0) phi += sweep > 0 ? kTwoPi : -kTwoPi;
          total += phi;
        }
      } else {
        total += std::atan2(cr, dt);
      }
      u = v;
    }
    return total;
  }
};

/// A closed chain of edges; consecutive endpoints coincide.
struct Loop {
  std::vector<Edge> edges;

  double signed_area() const {
    double s = 0.0;
    for (const Edge& e : edges) s += e.area_term();
    return s;
  }
  double length() const {
    double s = 0.0;
    for (const Edge& e : edges) s += e.length();
    return s;
  }
  Box bbox() const {
    Box b;
    for (const Edge& e : edges) b.add(e.bbox());
    return b;
  }
  Loop reversed() const {
    Loop l;
    l.edges.reserve(edges.size());
    for (auto it = edges.rbegin(); it != edges.rend(); ++it)
      l.edges.push_back(it->reversed());
    return l;
  }
  double winding_angle(Point p) const {
    double s = 0.0;
    for (const Edge& e : edges) s += e.winding_angle(p);
    return s;
  }
  int winding(Point p) const {
    return static_cast<int>(std::lround(winding_angle(p) / kTwoPi));
  }
  double distance(Point p) const {
    double d = std::numeric_limits<double>::infinity();
    for (const Edge& e : edges) d = std::min(d, e.distance(p));
    return d;
  }
  bool closed(double tol = kSnap) const {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Edge& next = edges[(i + 1) % edges.size()];
      if (dist(edges[i].b, next.a) > tol) return false;
    }
    return !edges.empty();
  }
};

/// A region bounded by segments and circular arcs. Outer loops run
/// counter-clockwise and holes clockwise; the region is the set of points
/// with positive winding number. An empty loop list is the empty region.
struct ArcShape {
  std::vector<Loop> loops;

  bool empty() const { return loops.empty(); }

  double area() const {
    double s = 0.0;
    for (const Loop& l : loops) s += l.signed_area();
    return s;
  }
  double perimeter() const {
    double s = 0.0;
    for (const Loop& l : loops) s += l.length();
    return s;
  }
  Box bbox() const {
    Box b;
    for (const Loop& l : loops) b.add(l.bbox());
    return b;
  }
  std::size_t edge_count() const {
    std::size_t n = 0;
    for (const Loop& l : loops) n += l.edges.size();
    return n;
  }
  int winding(Point p) const {
    double s = 0.0;
    for (const Loop& l : loops)
      if (l.bbox().inflated(kEps).contains(p)) s += l.winding_angle(p);
    return static_cast<int>(std::lround(s / kTwoPi));
  }
  bool contains(Point p) const { return winding(p) > 0; }
  double boundary_distance(Point p) const {
    double d = std::numeric_limits<double>::infinity();
    for (const Loop& l : loops) d = std::min(d, l.distance(p));
    return d;
  }

  static ArcShape from_loop(Loop l) {
    ArcShape s;
    s.loops.push_back(std::move(l));
    return s;
  }
};

inline ArcShape disk_shape(const Disk& d) {
  Loop l;
  l.edges.push_back(Edge::circle(d.center, d.radius));
  return ArcShape::from_loop(std::move(l));
}

inline Loop polygon_loop(const std::vector<Point>& pts) {
  Loop l;
  for (std::size_t i = 0; i < pts.size(); ++i)
    l.edges.push_back(Edge::segment(pts[i], pts[(i + 1) % pts.size()]));
  return l;
}

inline ArcShape polygon_shape(const std::vector<Point>& pts) {
  return ArcShape::from_loop(polygon_loop(pts));
}

/// Rotation about the origin by `angle` followed by a translation.
inline Edge rigid_transform(const Edge& e, double angle, Vec shift) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  auto map = [&](Point p) {
    return Point{c * p.x - s * p.y + shift.x, s * p.x + c * p.y + shift.y};
  };
  Edge out = e;
  out.a = map(e.a);
  out.b = map(e.b);
  if (e.is_arc()) {
    out.center = map(e.center);
    out.start_angle = e.start_angle + angle;
  }
  return out;
}

inline ArcShape rigid_transform(const ArcShape& shape, double angle,
                                Vec shift) {
  ArcShape out;
  for (const Loop& l : shape.loops) {
    Loop m;
    for (const Edge& e : l.edges) m.edges.push_back(rigid_transform(e, angle, shift));
    out.loops.push_back(std::move(m));
  }
  return out;
}

}  // namespace setshapes::geo
