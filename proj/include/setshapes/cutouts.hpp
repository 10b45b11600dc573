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
#include <functional>
#include <limits>
#include <queue>
#include <tuple>
#include <vector>

#include "setshapes/error.hpp"
#include "setshapes/geometry.hpp"
#include "setshapes/log.hpp"
#include "setshapes/patterns.hpp"
#include "setshapes/stacking.hpp"

namespace setshapes {

/// Radii used when modifying shapes: r_c for exclusion disks, r_s for
/// smoothing.
struct SmoothingParams {
  double rd = 1.0;
  double rc = 0.625;
  double rs = 0.2;

  static SmoothingParams from_rd(double rd) { return {rd, rd * 5.0 / 8.0, rd / 5.0}; }
};

/// Exclusion disks X (around points to expose) and inclusion disks Y
/// (around points that must stay covered).
struct GrownDisks {
  std::vector<geo::Disk> exclusion;
  std::vector<geo::Disk> inclusion;
};

/// Grows a disk at every red and green point at unit rate. A red and a green
/// disk stop when they touch; reds stop at r_c and greens at r_d on their
/// own.
inline GrownDisks grow_disks(const std::vector<Point>& reds,
                             const std::vector<Point>& greens,
                             const SmoothingParams& prm) {
  const std::size_t nr = reds.size();
  const std::size_t n = nr + greens.size();
  auto pos = [&](std::size_t k) { return k < nr ? reds[k] : greens[k - nr]; };
  auto cap = [&](std::size_t k) { return k < nr ? prm.rc : prm.rd; };

  // Only opposite-colored disks closer than r_c + r_d can ever touch.
  const double reach = prm.rc + prm.rd;
  std::vector<std::vector<std::pair<std::size_t, double>>> near(n);
  std::vector<std::size_t> order(greens.size());
  for (std::size_t g = 0; g < greens.size(); ++g) order[g] = g;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return greens[a].x < greens[b].x; });
  for (std::size_t r = 0; r < nr; ++r) {
    auto lo = std::lower_bound(order.begin(), order.end(), reds[r].x - reach,
                               [&](std::size_t g, double x) { return greens[g].x < x; });
    for (auto it = lo; it != order.end() && greens[*it].x <= reds[r].x + reach; ++it) {
      const double d = geo::dist(reds[r], greens[*it]);
      if (d >= reach) continue;
      if (d <= geo::kEps)
        throw GeometryError("exclusion and inclusion points coincide");
      near[r].push_back({nr + *it, d});
      near[nr + *it].push_back({r, d});
    }
  }

  // Events: (radius, a, b); b < 0 means a stops alone, otherwise a and b
  // stop together provided both are still growing.
  using Event = std::tuple<double, long, long>;
  std::priority_queue<Event, std::vector<Event>, std::greater<>> events;
  for (std::size_t k = 0; k < n; ++k) {
    events.push({cap(k), static_cast<long>(k), -1});
    for (auto [m, d] : near[k])
      if (k < m && d / 2 <= std::min(cap(k), cap(m)))
        events.push({d / 2, static_cast<long>(k), static_cast<long>(m)});
  }
  std::vector<double> radius(n, -1.0);
  auto stop = [&](std::size_t k, double r) {
    radius[k] = r;
    for (auto [m, d] : near[k])
      if (radius[m] < 0) events.push({std::min(d - r, cap(m)), static_cast<long>(m), -1});
  };
  while (!events.empty()) {
    auto [r, a, b] = events.top();
    events.pop();
    if (radius[a] >= 0) continue;
    if (b >= 0) {
      if (radius[b] >= 0) continue;
      radius[a] = radius[b] = r;
      stop(a, r);
      stop(b, r);
    } else {
      stop(a, r);
    }
  }
  GrownDisks out;
  for (std::size_t k = 0; k < n; ++k)
    (k < nr ? out.exclusion : out.inclusion).push_back({pos(k), radius[k]});
  return out;
}

namespace detail {

inline geo::ArcShape disk_soup(const std::vector<geo::Disk>& disks) {
  geo::ArcShape s;
  for (const geo::Disk& d : disks)
    if (d.radius > 0) s.loops.push_back(geo::disk_shape(d).loops[0]);
  return s;
}

inline bool touches_arc(const geo::ArcShape& shape, const geo::Disk& d) {
  for (const geo::Loop& l : shape.loops)
    for (const geo::Edge& e : l.edges)
      if (e.is_arc() && e.distance(d.center) < d.radius) return true;
  return false;
}

inline geo::Point closest_boundary_point(const geo::ArcShape& s, Point p) {
  Point best = p;
  double bd = std::numeric_limits<double>::infinity();
  for (const geo::Loop& l : s.loops)
    for (const geo::Edge& e : l.edges) {
      const Point q = e.closest(p);
      const double d = geo::dist(p, q);
      if (d < bd) {
        bd = d;
        best = q;
      }
    }
  return best;
}

// Thin rectangle from the center of d to q, reaching a little past q.
inline geo::ArcShape slit(const geo::Disk& d, Point q, double half_width) {
  const geo::Vec u = geo::unit(q - d.center);
  const geo::Vec n = geo::perp(u) * half_width;
  const Point far = q + u * half_width;
  return geo::polygon_shape({d.center - n, far - n, far + n, d.center + n});
}

}  // namespace detail

/// Regions to cut out of `shape` inside component region `comp`. Disks that
/// meet only straight boundary pieces are grouped when their r_s-expansions
/// overlap and cut as the hull of the group; the others are cut one by one.
/// Inclusion disks are never part of a cut.
inline std::vector<geo::ArcShape> group_cut_regions(const GrownDisks& disks,
                                                    const geo::ArcShape& shape,
                                                    const geo::ArcShape& comp,
                                                    const SmoothingParams& prm) {
  std::vector<geo::Disk> xs;
  for (const geo::Disk& d : disks.exclusion) {
    if (d.radius <= 0) continue;
    const bool inside = comp.contains(d.center);
    if (!inside && comp.boundary_distance(d.center) >= d.radius) continue;
    xs.push_back(d);
  }
  const geo::ArcShape ys = detail::disk_soup(disks.inclusion);
  auto minus_y = [&](const geo::ArcShape& s) {
    return ys.empty() ? s : geo::subtract(s, ys);
  };

  std::vector<char> candidate(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k)
    candidate[k] = !detail::touches_arc(shape, xs[k]);

  geo::detail::DisjointSets groups(xs.size());
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = a + 1; b < xs.size(); ++b)
      if (candidate[a] && candidate[b] &&
          geo::dist(xs[a].center, xs[b].center) < xs[a].radius + xs[b].radius + 2 * prm.rs)
        groups.unite(static_cast<int>(a), static_cast<int>(b));

  std::vector<geo::ArcShape> out;
  std::vector<char> done(xs.size(), 0);
  for (std::size_t a = 0; a < xs.size(); ++a) {
    if (done[a]) continue;
    std::vector<geo::Disk> members;
    for (std::size_t b = a; b < xs.size(); ++b)
      if (!done[b] && (b == a || (candidate[a] && groups.find(static_cast<int>(b)) == groups.find(static_cast<int>(a))))) {
        members.push_back(xs[b]);
        done[b] = 1;
      }
    out.push_back(minus_y(members.size() == 1 ? geo::disk_shape(members[0])
                                              : geo::convex_hull_of_disks(members)));
    // A disk enclosed by the component would leave an island of the upper
    // shape around it; open a slit towards the component boundary.
    for (const geo::Disk& d : members) {
      if (!comp.contains(d.center) || comp.boundary_distance(d.center) <= d.radius) continue;
      const Point q = detail::closest_boundary_point(comp, d.center);
      out.push_back(minus_y(detail::slit(d, q, prm.rs / 4)));
    }
  }
  return out;
}

/// Cuts `cuts` (restricted to component region `comp`) out of `shape` and
/// rounds the new corners with an opening followed by a closing of radius
/// r_s. Only the 2 r_s-neighbourhood of the cuts is affected; inclusion
/// disks are added back afterwards.
inline geo::ArcShape subtract_and_smooth(const geo::ArcShape& shape,
                                         const geo::ArcShape& comp,
                                         const std::vector<geo::ArcShape>& cuts,
                                         const std::vector<geo::Disk>& inclusion,
                                         const SmoothingParams& prm) {
  if (cuts.empty()) return shape;
  geo::ArcShape soup;
  for (const geo::ArcShape& c : cuts)
    soup.loops.insert(soup.loops.end(), c.loops.begin(), c.loops.end());
  const geo::ArcShape cut = geo::overlay_region(
      {&soup, &comp, &shape}, [](const int* w) { return w[0] > 0 && w[1] > 0 && w[2] > 0; });
  if (cut.empty()) return shape;

  const geo::ArcShape bare = geo::subtract(shape, cut);
  const geo::ArcShape near = geo::dilate(cut, 2 * prm.rs);
  const geo::Box wb = near.bbox().inflated(3 * prm.rs);
  const geo::ArcShape window = geo::polygon_shape(
      {{wb.min_x, wb.min_y}, {wb.max_x, wb.min_y}, {wb.max_x, wb.max_y}, {wb.min_x, wb.max_y}});
  const geo::ArcShape local = geo::intersect(bare, window);
  geo::ArcShape smooth = geo::closing(geo::opening(local, prm.rs), prm.rs);
  if (smooth.empty()) {
    log::warn("smoothing removed a whole cut neighbourhood; keeping the unsmoothed cut");
    smooth = local;
  }

  std::vector<geo::Disk> keep;
  for (const geo::Disk& d : inclusion)
    if (d.radius > 0 && wb.intersects(geo::disk_shape(d).bbox())) keep.push_back(d);
  const geo::ArcShape ys = detail::disk_soup(keep);
  return geo::overlay_region({&smooth, &near, &bare, &ys}, [](const int* w) {
    return (w[0] > 0 && w[1] > 0) || (w[2] > 0 && w[1] <= 0) || w[3] > 0;
  });
}

/// One modification of an upper shape inside an overlap component.
struct Modification {
  int shape = -1;
  int component = -1;  // index into Components::singles
  std::vector<int> lower;           // shapes below `shape` somewhere in it
  std::vector<int> exclusion_ids;   // point id of each exclusion disk
  GrownDisks disks;
  std::vector<geo::ArcShape> cuts;
};

struct ModifyResult {
  std::vector<geo::ArcShape> shapes;
  std::vector<Modification> modifications;
};

/// Modifies every dilated shape inside each of its overlap components so
/// that points of the shapes below it stay visible.
inline ModifyResult modify_all(const StackingInput& in, const StackingResult& st,
                               const SmoothingParams& prm) {
  ModifyResult out;
  out.shapes = in.dilated;
  const geo::Arrangement& arr = *in.arrangement;
  for (const OverlapComponent& c : st.components.singles) {
    const int i = c.i;
    std::vector<int> lower;
    for (int f : c.faces) {
      const auto& order = st.face_order[f];
      auto it = std::find(order.begin(), order.end(), i);
      if (it != order.end()) lower.insert(lower.end(), it + 1, order.end());
    }
    std::sort(lower.begin(), lower.end());
    lower.erase(std::unique(lower.begin(), lower.end()), lower.end());
    if (lower.empty()) continue;

    Modification m;
    m.shape = i;
    m.component = c.id;
    m.lower = lower;
    std::vector<Point> reds;
    std::vector<Point> greens;
    for (int k : lower)
      for (int id : in.patterns[k].points) {
        reds.push_back(in.points[id].pos);
        m.exclusion_ids.push_back(id);
      }
    for (int id : in.patterns[i].points) greens.push_back(in.points[id].pos);
    m.disks = grow_disks(reds, greens, prm);

    const geo::ArcShape region = arr.region_of(c.faces);
    m.cuts = group_cut_regions(m.disks, out.shapes[i], region, prm);
    if (!m.cuts.empty())
      out.shapes[i] = subtract_and_smooth(out.shapes[i], region, m.cuts,
                                          m.disks.inclusion, prm);
    out.modifications.push_back(std::move(m));
  }
  return out;
}

}  // namespace setshapes
