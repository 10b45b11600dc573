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

#include "setshapes/error.hpp"
#include "setshapes/geometry/edge.hpp"
#include "setshapes/geometry/overlay.hpp"

namespace setshapes::geo {

/// Extreme points in counter-clockwise order, starting from the lowest-left
/// point. Collinear boundary points are dropped.
inline std::vector<Point> convex_hull(std::vector<Point> pts) {
  if (pts.empty()) throw DataError("empty point set");
  std::sort(pts.begin(), pts.end(), [](Point a, Point b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  Box box;
  for (Point p : pts) box.add(p);
  const double tol = tolerance_for(box) * std::max(1.0, box.diagonal());
  std::vector<Point> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && orient(h[k - 2], h[k - 1], pts[i]) <= tol) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orient(h[k - 2], h[k - 1], pts[i]) <= tol) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

/// Whether p lies in the closed convex polygon `hull` (ccw), within tol.
inline bool hull_contains(const std::vector<Point>& hull, Point p,
                          double tol = kEps) {
  if (hull.size() == 1) return dist(hull[0], p) <= tol;
  if (hull.size() == 2) return segment_distance(p, hull[0], hull[1]) <= tol;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point a = hull[i];
    const Point b = hull[(i + 1) % hull.size()];
    if (cross(b - a, p - a) < -tol * dist(a, b)) return false;
  }
  return true;
}

/// Distance from p to the convex region spanned by `hull` (0 inside).
inline double hull_distance(const std::vector<Point>& hull, Point p) {
  if (hull.size() >= 3 && hull_contains(hull, p, 0.0)) return 0.0;
  if (hull.size() == 1) return dist(hull[0], p);
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < hull.size(); ++i)
    d = std::min(d, segment_distance(p, hull[i], hull[(i + 1) % hull.size()]));
  return d;
}

namespace detail {

// A circle (possibly of radius zero) that supports the hull only for
// outward normals in [lo, lo + span], or for all normals when `full`.
struct SupportSite {
  Point c;
  double r = 0.0;
  bool full = true;
  double lo = 0.0;
  double span = kTwoPi;

  double support(double theta) const {
    if (!full && wrap_positive(theta - lo) > span)
      return -std::numeric_limits<double>::infinity();
    return dot(c, dir(theta)) + r;
  }
};

inline ArcShape hull_of_sites(const std::vector<SupportSite>& sites,
                              double tol) {
  if (sites.empty()) return {};
  std::vector<double> cuts{0.0};
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (!sites[i].full) {
      cuts.push_back(wrap_positive(sites[i].lo));
      cuts.push_back(wrap_positive(sites[i].lo + sites[i].span));
    }
    for (std::size_t j = i + 1; j < sites.size(); ++j) {
      const Vec v = sites[i].c - sites[j].c;
      const double rho = norm(v);
      if (rho <= tol) continue;
      const double k = (sites[j].r - sites[i].r) / rho;
      if (std::abs(k) > 1.0) continue;
      const double phi = angle_of(v);
      const double a = std::acos(k);
      cuts.push_back(wrap_positive(phi + a));
      cuts.push_back(wrap_positive(phi - a));
    }
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> uniq;
  for (double c : cuts)
    if (uniq.empty() || c - uniq.back() > 1e-12) uniq.push_back(c);
  if (uniq.size() > 1 && uniq.front() + kTwoPi - uniq.back() <= 1e-12)
    uniq.pop_back();

  // Winner of every elementary angular interval.
  struct Run {
    int site;
    double from;
    double to;
  };
  std::vector<Run> runs;
  const std::size_t m = uniq.size();
  for (std::size_t k = 0; k < m; ++k) {
    const double from = uniq[k];
    const double to = k + 1 < m ? uniq[k + 1] : uniq[0] + kTwoPi;
    if (to - from <= 1e-12) continue;
    const double mid = 0.5 * (from + to);
    int best = -1;
    double best_h = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < sites.size(); ++i) {
      const double h = sites[i].support(mid);
      if (best < 0 || h > best_h + tol ||
          (h > best_h - tol && sites[i].r > sites[best].r + tol)) {
        best = static_cast<int>(i);
        best_h = h;
      }
    }
    if (!runs.empty() && runs.back().site == best) {
      runs.back().to = to;
    } else {
      runs.push_back({best, from, to});
    }
  }
  if (runs.size() > 1 && runs.front().site == runs.back().site) {
    runs.front().from = runs.back().from - kTwoPi;
    runs.pop_back();
  }
  if (runs.size() == 1) {
    const SupportSite& s = sites[runs[0].site];
    if (s.r <= tol) return {};
    return disk_shape({s.c, s.r});
  }

  Loop loop;
  auto point_at = [&](int site, double theta) {
    const SupportSite& s = sites[site];
    return s.r > 0.0 ? s.c + dir(theta) * s.r : s.c;
  };
  for (std::size_t k = 0; k < runs.size(); ++k) {
    const Run& run = runs[k];
    const Run& next = runs[(k + 1) % runs.size()];
    const Point p0 = point_at(run.site, run.from);
    const Point p1 = point_at(run.site, run.to);
    if (sites[run.site].r > tol) {
      Edge arc = Edge::arc(sites[run.site].c, sites[run.site].r, run.from,
                           run.to - run.from);
      arc.a = p0;
      arc.b = p1;
      loop.edges.push_back(arc);
    }
    const Point q = point_at(next.site, run.to);
    if (dist(p1, q) > tol) loop.edges.push_back(Edge::segment(p1, q));
  }
  // Stitch pieces so consecutive endpoints coincide exactly.
  for (std::size_t k = 0; k < loop.edges.size(); ++k) {
    Edge& e = loop.edges[k];
    Edge& f = loop.edges[(k + 1) % loop.edges.size()];
    f.a = e.b;
  }
  simplify_loop(loop, 64 * tol);
  if (loop.edges.size() < 2 && !(loop.edges.size() == 1 && loop.edges[0].full_circle()))
    return {};
  return ArcShape::from_loop(std::move(loop));
}

}  // namespace detail

/// Smallest convex region containing all disks; its boundary alternates
/// arcs of input circles and bitangent segments.
inline ArcShape convex_hull_of_disks(const std::vector<Disk>& disks) {
  if (disks.empty()) throw DataError("empty disk set");
  Box box;
  for (const Disk& d : disks) {
    if (!(d.radius >= 0.0)) throw DataError("negative disk radius");
    box.add(d.center);
    box.add(d.center + Vec{d.radius, d.radius});
    box.add(d.center - Vec{d.radius, d.radius});
  }
  const double tol = tolerance_for(box);
  std::vector<detail::SupportSite> sites;
  sites.reserve(disks.size());
  for (const Disk& d : disks) {
    // Drop disks contained in another one; they never support the hull.
    bool inside = false;
    for (const Disk& o : disks) {
      if (&o == &d) continue;
      const double gap = dist(o.center, d.center) + d.radius - o.radius;
      if (gap < -tol || (gap <= tol && (o.radius > d.radius ||
                                        (o.radius == d.radius && &o < &d)))) {
        inside = true;
        break;
      }
    }
    if (!inside) sites.push_back({d.center, d.radius});
  }
  return detail::hull_of_sites(sites, tol);
}

/// Exact convex hull of a region bounded by segments and arcs.
inline ArcShape convex_hull_of_shape(const ArcShape& shape) {
  const double tol = tolerance_for(shape.bbox());
  std::vector<detail::SupportSite> arcs;
  std::vector<Point> samples;
  std::vector<Point> ends;
  for (const Loop& l : shape.loops) {
    for (const Edge& e : l.edges) {
      ends.push_back(e.a);
      samples.push_back(e.a);
      if (e.is_arc() && e.sweep > 0.0) {
        detail::SupportSite s{e.center, e.radius, e.full_circle(),
                              e.start_angle, e.sweep};
        arcs.push_back(s);
        for (int k = 1; k < 16; ++k) samples.push_back(e.at(k / 16.0));
      }
    }
  }
  if (ends.empty()) return {};
  const std::vector<Point> outline = convex_hull(samples);
  std::vector<detail::SupportSite> sites = arcs;
  std::sort(ends.begin(), ends.end(), [](Point a, Point b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  for (Point p : ends)
    if (std::find(outline.begin(), outline.end(), p) != outline.end())
      sites.push_back({p, 0.0});
  return detail::hull_of_sites(sites, tol);
}

}  // namespace setshapes::geo
