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
#include <vector>

#include "setshapes/geometry/hull.hpp"

namespace setshapes::geo {

struct VoronoiVertex {
  Point pos;
  double dist = 0.0;  // distance to the nearest site
};

namespace detail {

struct Triangle {
  int v[3];
  Point center;
  double r2;
};

inline Triangle make_triangle(const std::vector<Point>& p, int a, int b, int c) {
  Triangle t{{a, b, c}, {}, std::numeric_limits<double>::infinity()};
  const Vec ab = p[b] - p[a];
  const Vec ac = p[c] - p[a];
  const double d = 2.0 * cross(ab, ac);
  if (std::abs(d) <= 1e-300) {
    t.center = {std::numeric_limits<double>::quiet_NaN(), 0.0};
    return t;
  }
  const double ux = (norm2(ab) * ac.y - norm2(ac) * ab.y) / d;
  const double uy = (norm2(ac) * ab.x - norm2(ab) * ac.x) / d;
  t.center = p[a] + Vec{ux, uy};
  t.r2 = ux * ux + uy * uy;
  return t;
}

/// Bowyer-Watson Delaunay triangulation; returns triangles over input
/// indices only.
inline std::vector<Triangle> delaunay(const std::vector<Point>& sites) {
  Box box;
  for (Point p : sites) box.add(p);
  const double span = std::max(1.0, box.diagonal()) * 1e5;
  const Point c = box.center();
  std::vector<Point> p = sites;
  const int n = static_cast<int>(sites.size());
  p.push_back(c + Vec{-span, -span});
  p.push_back(c + Vec{span, -span});
  p.push_back(c + Vec{0.0, span});
  std::vector<Triangle> tris{make_triangle(p, n, n + 1, n + 2)};
  std::vector<std::pair<int, int>> boundary;
  for (int i = 0; i < n; ++i) {
    std::vector<Triangle> keep;
    std::vector<Triangle> bad;
    for (const Triangle& t : tris) {
      const bool inside = !std::isfinite(t.r2) || std::isnan(t.center.x) ||
                          dist2(t.center, p[i]) < t.r2;
      (inside ? bad : keep).push_back(t);
    }
    boundary.clear();
    for (const Triangle& t : bad) {
      for (int k = 0; k < 3; ++k) {
        const int a = t.v[k];
        const int b = t.v[(k + 1) % 3];
        auto it = std::find_if(boundary.begin(), boundary.end(), [&](auto e) {
          return e.first == b && e.second == a;
        });
        if (it != boundary.end()) {
          boundary.erase(it);
        } else {
          boundary.push_back({a, b});
        }
      }
    }
    for (auto [a, b] : boundary) keep.push_back(make_triangle(p, a, b, i));
    tris = std::move(keep);
  }
  std::vector<Triangle> out;
  for (const Triangle& t : tris)
    if (t.v[0] < n && t.v[1] < n && t.v[2] < n) out.push_back(t);
  return out;
}

}  // namespace detail

/// Vertices of the Voronoi diagram of `sites` clipped to their convex hull:
/// hull vertices, crossings of Voronoi edges with hull edges and Voronoi
/// vertices inside the hull, each with its distance to the nearest site.
inline std::vector<VoronoiVertex> voronoi_clipped_to_hull(
    const std::vector<Point>& sites) {
  const std::vector<Point> hull = convex_hull(sites);
  std::vector<VoronoiVertex> out;
  for (Point h : hull) out.push_back({h, 0.0});
  if (hull.size() == 1) return out;

  // Walk the lower envelope of squared site distances along each hull edge.
  // Along p + s(q - p) the squared distances differ by linear terms only.
  const std::size_t edges = hull.size() == 2 ? 1 : hull.size();
  const std::size_t n = sites.size();
  std::vector<double> g0(n);
  std::vector<double> slope(n);
  for (std::size_t e = 0; e < edges; ++e) {
    const Point p = hull[e];
    const Vec len = hull[(e + 1) % hull.size()] - p;
    for (std::size_t i = 0; i < n; ++i) {
      g0[i] = dist2(p, sites[i]);
      slope[i] = 2.0 * dot(len, p - sites[i]);
    }
    std::size_t cur = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (g0[i] < g0[cur] || (g0[i] == g0[cur] && slope[i] < slope[cur])) cur = i;
    double s = 0.0;
    while (true) {
      double best_s = 1.0;
      std::size_t best = cur;
      for (std::size_t j = 0; j < n; ++j) {
        if (slope[j] >= slope[cur]) continue;
        const double cross_s = (g0[j] - g0[cur]) / (slope[cur] - slope[j]);
        if (cross_s >= s && (cross_s < best_s ||
                             (cross_s == best_s && slope[j] < slope[best]))) {
          best_s = cross_s;
          best = j;
        }
      }
      if (best == cur || best_s >= 1.0) break;
      const double d2 = g0[cur] + slope[cur] * best_s + best_s * best_s * norm2(len);
      out.push_back({p + len * best_s, std::sqrt(std::max(0.0, d2))});
      cur = best;
      s = best_s;
    }
  }

  if (hull.size() >= 3) {
    Box box;
    for (Point q : sites) box.add(q);
    const double tol = 64 * tolerance_for(box);
    for (const detail::Triangle& t : detail::delaunay(sites)) {
      if (std::isnan(t.center.x) || !std::isfinite(t.r2)) continue;
      if (hull_contains(hull, t.center, tol)) out.push_back({t.center, std::sqrt(t.r2)});
    }
  }
  return out;
}

}  // namespace setshapes::geo
