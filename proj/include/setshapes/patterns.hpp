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
#include <string>
#include <vector>

#include "setshapes/error.hpp"
#include "setshapes/geometry.hpp"

namespace setshapes {

using geo::Point;

struct CategoricalPoint {
  int id = 0;
  Point pos;
  int category = 0;
};

enum class PatternKind { kSingleton, kBank, kIsland };

inline const char* kind_name(PatternKind k) {
  switch (k) {
    case PatternKind::kSingleton:
      return "singleton";
    case PatternKind::kBank:
      return "bank";
    case PatternKind::kIsland:
      return "island";
  }
  return "?";
}

/// Shape limits for banks. Angles in radians.
struct BankLimits {
  double max_turn = 70.0 * geo::kPi / 180.0;
  double max_total_turn = 180.0 * geo::kPi / 180.0;
  int max_bends = 2;
};

/// A singleton, bank (polyline in `points` order) or island (convex hull).
struct Pattern {
  PatternKind kind = PatternKind::kSingleton;
  int category = 0;
  std::vector<int> points;
  // Region outline: the point, the polyline, or the ccw hull vertices.
  std::vector<Point> outline;

  bool operator==(const Pattern&) const = default;
};

/// Signed angle between directions x->y and y->z, in (-pi, pi]; positive
/// for a counter-clockwise turn.
inline double turning_angle(Point x, Point y, Point z) {
  const geo::Vec u = y - x;
  const geo::Vec v = z - y;
  if (geo::norm2(u) == 0.0 || geo::norm2(v) == 0.0)
    throw GeometryError("turning angle of a zero-length segment");
  double a = std::atan2(geo::cross(u, v), geo::dot(u, v));
  if (a <= -geo::kPi) a = geo::kPi;
  return a;
}

inline std::vector<double> turning_angles(const std::vector<Point>& line) {
  std::vector<double> out;
  for (std::size_t i = 1; i + 1 < line.size(); ++i)
    out.push_back(turning_angle(line[i - 1], line[i], line[i + 1]));
  return out;
}

/// Maximal runs of equally-signed turning angles; zero angles (up to
/// rounding noise) neither extend nor break a run.
inline int count_bends_of_angles(const std::vector<double>& angles) {
  int bends = 0;
  int sign = 0;
  for (double a : angles) {
    const int s = (a > geo::kEps) - (a < -geo::kEps);
    if (s == 0) continue;
    if (s != sign) ++bends;
    sign = s;
  }
  return bends;
}

inline int count_bends(const std::vector<Point>& line) {
  return count_bends_of_angles(turning_angles(line));
}

namespace detail {

inline double segment_gap(Point a, Point b, Point c, Point d) {
  if (geo::segments_cross(a, b, c, d, 0.0)) return 0.0;
  return std::min({geo::segment_distance(a, c, d), geo::segment_distance(b, c, d),
                   geo::segment_distance(c, a, b), geo::segment_distance(d, a, b)});
}

}  // namespace detail

/// No two non-adjacent segments touch and no adjacent pair folds back.
inline bool is_simple_polyline(const std::vector<Point>& line) {
  const std::size_t m = line.size();
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (line[i] == line[i + 1]) return false;
    for (std::size_t j = i + 2; j + 1 < m; ++j)
      if (detail::segment_gap(line[i], line[i + 1], line[j], line[j + 1]) <= geo::kEps)
        return false;
  }
  for (std::size_t i = 1; i + 1 < m; ++i) {
    const geo::Vec u = line[i] - line[i - 1];
    const geo::Vec v = line[i + 1] - line[i];
    if (std::abs(geo::cross(u, v)) <= geo::kEps * geo::norm(u) * geo::norm(v) &&
        geo::dot(u, v) < 0.0)
      return false;
  }
  return true;
}

inline bool is_valid_bank(const std::vector<Point>& line,
                          const BankLimits& limits = {}) {
  if (line.size() < 2) return false;
  if (!is_simple_polyline(line)) return false;
  const std::vector<double> angles = turning_angles(line);
  double total = 0.0;
  for (double a : angles) {
    if (std::abs(a) > limits.max_turn) return false;
    total += std::abs(a);
  }
  if (total > limits.max_total_turn) return false;
  return count_bends_of_angles(angles) <= limits.max_bends;
}

/// Largest distance from a point of the hull of `members` to its nearest
/// member.
inline double island_cover_radius(const std::vector<Point>& members) {
  double r = 0.0;
  for (const geo::VoronoiVertex& v : geo::voronoi_clipped_to_hull(members))
    r = std::max(r, v.dist);
  return r;
}

inline double bank_cover_radius(const std::vector<Point>& line) {
  double r = 0.0;
  for (std::size_t i = 0; i + 1 < line.size(); ++i)
    r = std::max(r, 0.5 * geo::dist(line[i], line[i + 1]));
  return r;
}

inline Pattern make_singleton(const CategoricalPoint& p) {
  return {PatternKind::kSingleton, p.category, {p.id}, {p.pos}};
}

inline Pattern make_bank(int category, std::vector<int> ids,
                         const std::vector<CategoricalPoint>& pts) {
  Pattern p{PatternKind::kBank, category, std::move(ids), {}};
  for (int id : p.points) p.outline.push_back(pts[id].pos);
  return p;
}

inline Pattern make_island(int category, std::vector<int> ids,
                           const std::vector<CategoricalPoint>& pts) {
  std::sort(ids.begin(), ids.end());
  Pattern p{PatternKind::kIsland, category, std::move(ids), {}};
  std::vector<Point> pos;
  for (int id : p.points) pos.push_back(pts[id].pos);
  p.outline = geo::convex_hull(pos);
  return p;
}

/// Member positions of a pattern, in member order.
inline std::vector<Point> member_positions(const Pattern& p,
                                           const std::vector<CategoricalPoint>& pts) {
  std::vector<Point> out;
  for (int id : p.points) out.push_back(pts[id].pos);
  return out;
}

inline double cover_radius(const Pattern& p,
                           const std::vector<CategoricalPoint>& pts) {
  switch (p.kind) {
    case PatternKind::kSingleton:
      return 0.0;
    case PatternKind::kBank:
      return bank_cover_radius(p.outline);
    case PatternKind::kIsland:
      return island_cover_radius(member_positions(p, pts));
  }
  return 0.0;
}

/// Distance from q to the pattern's region (point, polyline or hull).
inline double region_distance(const Pattern& p, Point q) {
  if (p.kind == PatternKind::kIsland) return geo::hull_distance(p.outline, q);
  if (p.outline.size() == 1) return geo::dist(p.outline[0], q);
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < p.outline.size(); ++i)
    d = std::min(d, geo::segment_distance(q, p.outline[i], p.outline[i + 1]));
  return d;
}

/// Segments bounding (island) or forming (bank) the region.
inline std::vector<std::pair<Point, Point>> region_segments(const Pattern& p) {
  std::vector<std::pair<Point, Point>> out;
  const std::size_t m = p.outline.size();
  if (m < 2) return out;
  const bool closed = p.kind == PatternKind::kIsland && m > 2;
  for (std::size_t i = 0; i + 1 < m + (closed ? 1 : 0); ++i)
    out.push_back({p.outline[i], p.outline[(i + 1) % m]});
  return out;
}

inline geo::Box region_box(const Pattern& p) {
  geo::Box b;
  for (Point q : p.outline) b.add(q);
  return b;
}

/// Whether the regions of two point-disjoint patterns cross. Containment
/// cannot occur between patterns that respect the proximity rule, so a
/// proper crossing of their outlines is the only way to overlap.
inline bool regions_cross(const Pattern& a, const Pattern& b) {
  if (!region_box(a).intersects(region_box(b))) return false;
  for (auto [p, q] : region_segments(a))
    for (auto [r, s] : region_segments(b))
      if (geo::segments_cross(p, q, r, s)) return true;
  return false;
}

/// The pattern's region dilated by r.
inline geo::ArcShape dilate_pattern(const Pattern& p, double r) {
  if (p.kind == PatternKind::kIsland) return geo::dilate_convex(p.outline, r);
  return geo::dilate_polyline(p.outline, r);
}

}  // namespace setshapes
