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
#include <queue>
#include <vector>

#include "setshapes/log.hpp"
#include "setshapes/patterns.hpp"

namespace setshapes {

struct PartitionConfig {
  double rd = 1.0;  // dilation radius
  bool intersection_delay = true;
  BankLimits limits;
};

struct Merge {
  double time = 0.0;            // event time: c(P*) + delays
  double effective_time = 0.0;  // simulation clock when executed
  int source1 = -1;
  int source2 = -1;
  int target = -1;  // pattern id
};

/// Sequence of merges turning the all-singleton partition into coarser
/// ones. Pattern ids 0..n-1 are the singletons of points 0..n-1; the k-th
/// merge creates pattern n + k.
struct Filtration {
  PartitionConfig config;
  std::vector<CategoricalPoint> points;
  std::vector<Pattern> patterns;
  std::vector<Merge> merges;

  /// Ids of the patterns alive after all merges up to time t.
  std::vector<int> partition_ids_at(double t) const {
    std::vector<char> alive(patterns.size(), 0);
    for (std::size_t i = 0; i < points.size(); ++i) alive[i] = 1;
    for (const Merge& m : merges) {
      if (m.effective_time > t) break;
      alive[m.source1] = alive[m.source2] = 0;
      alive[m.target] = 1;
    }
    std::vector<int> out;
    for (std::size_t i = 0; i < alive.size(); ++i)
      if (alive[i]) out.push_back(static_cast<int>(i));
    return out;
  }

  std::vector<Pattern> partition_at(double t) const {
    std::vector<Pattern> out;
    for (int id : partition_ids_at(t)) out.push_back(patterns[id]);
    return out;
  }
};

inline double regularity_delay(double c1, double c2, double c_star,
                               bool both_singletons) {
  if (both_singletons) return 0.0;
  const double d = c_star - std::max(c1, c2);
  if (d < 0.0) {
    if (d < -1e-9 * std::max(1.0, c_star))
      log::warn("negative regularity delay clamped to zero");
    return 0.0;
  }
  return d;
}

/// True iff every point outside `target` is farther than rd/2 from its
/// region.
inline bool proximity_admissible(const Pattern& target,
                                 const std::vector<CategoricalPoint>& pts,
                                 double rd) {
  const double limit = 0.5 * rd;
  const geo::Box box = region_box(target).inflated(limit);
  std::vector<int> members = target.points;
  std::sort(members.begin(), members.end());
  for (const CategoricalPoint& p : pts) {
    if (!box.contains(p.pos)) continue;
    if (std::binary_search(members.begin(), members.end(), p.id)) continue;
    if (region_distance(target, p.pos) <= limit) return false;
  }
  return true;
}

/// sqrt(a / pi) with a the area of (D* \ (D1 u D2)) n D_U, where D are
/// rd-dilations and D_U the union of rd-disks around data points.
inline double intersection_delay(const Pattern& target, const Pattern& p1,
                                 const Pattern& p2,
                                 const std::vector<CategoricalPoint>& pts,
                                 double rd) {
  const geo::Box near = region_box(target).inflated(2.0 * rd);
  std::vector<int> members = target.points;
  std::sort(members.begin(), members.end());
  geo::ArcShape disks;
  for (const CategoricalPoint& p : pts) {
    if (!near.contains(p.pos)) continue;
    if (std::binary_search(members.begin(), members.end(), p.id)) continue;
    if (region_distance(target, p.pos) >= 2.0 * rd) continue;
    disks.loops.push_back(geo::disk_shape({p.pos, rd}).loops[0]);
  }
  if (disks.empty()) return 0.0;
  const geo::ArcShape star = target.kind == PatternKind::kIsland
                                 ? geo::dilate_convex(target.outline, rd)
                                 : geo::dilate_polyline_loops(target.outline, rd);
  geo::ArcShape sources;
  for (const Pattern* s : {&p1, &p2}) {
    const geo::ArcShape d = s->kind == PatternKind::kIsland
                                ? geo::dilate_convex(s->outline, rd)
                                : geo::dilate_polyline_loops(s->outline, rd);
    sources.loops.insert(sources.loops.end(), d.loops.begin(), d.loops.end());
  }
  const double a = geo::overlay_area({&star, &sources, &disks}, [](const int* w) {
    return w[0] > 0 && w[1] <= 0 && w[2] > 0;
  });
  return std::sqrt(std::max(0.0, a) / geo::kPi);
}

struct MergeEvent {
  double time = 0.0;
  std::uint64_t seq = 0;
  int source1 = -1;
  int source2 = -1;
  Pattern target;
  double cover = 0.0;
  double delay_regularity = 0.0;
  double delay_intersection = 0.0;
  bool intersection_done = false;
};

namespace detail {

inline bool same_polyline(const std::vector<int>& a, const std::vector<int>& b) {
  return a == b || std::equal(a.begin(), a.end(), b.rbegin(), b.rend());
}

}  // namespace detail

/// Candidate merges of two same-category patterns (without the intersection
/// delay, which is filled in lazily by the simulation).
inline std::vector<MergeEvent> create_events(const Pattern& p1, int id1,
                                             double c1, const Pattern& p2,
                                             int id2, double c2,
                                             const std::vector<CategoricalPoint>& pts,
                                             const PartitionConfig& cfg) {
  std::vector<Pattern> targets;
  std::vector<int> all = p1.points;
  all.insert(all.end(), p2.points.begin(), p2.points.end());
  const bool any_island =
      p1.kind == PatternKind::kIsland || p2.kind == PatternKind::kIsland;
  if (!any_island) {
    std::vector<std::vector<int>> lines;
    for (int r1 = 0; r1 < 2; ++r1) {
      for (int r2 = 0; r2 < 2; ++r2) {
        std::vector<int> a = p1.points;
        std::vector<int> b = p2.points;
        if (r1) std::reverse(a.begin(), a.end());
        if (r2) std::reverse(b.begin(), b.end());
        a.insert(a.end(), b.begin(), b.end());
        bool dup = false;
        for (const auto& l : lines) dup = dup || detail::same_polyline(l, a);
        if (!dup) lines.push_back(std::move(a));
      }
    }
    for (auto& l : lines) {
      Pattern bank = make_bank(p1.category, l, pts);
      if (is_valid_bank(bank.outline, cfg.limits)) targets.push_back(std::move(bank));
    }
  }
  Pattern island = make_island(p1.category, all, pts);
  bool island_dup = all.size() == 2;
  if (island.outline.size() <= 2) {
    for (const Pattern& b : targets) {
      std::vector<Point> ends{b.outline.front(), b.outline.back()};
      const bool straight = count_bends(b.outline) == 0;
      island_dup = island_dup ||
                   (straight && (geo::convex_hull(ends) == island.outline));
    }
  }
  if (!island_dup) targets.push_back(std::move(island));

  std::vector<MergeEvent> out;
  const bool singletons =
      p1.kind == PatternKind::kSingleton && p2.kind == PatternKind::kSingleton;
  for (Pattern& t : targets) {
    if (!proximity_admissible(t, pts, cfg.rd)) continue;
    MergeEvent e;
    e.source1 = id1;
    e.source2 = id2;
    e.cover = cover_radius(t, pts);
    e.delay_regularity = regularity_delay(c1, c2, e.cover, singletons);
    e.time = e.cover + e.delay_regularity;
    e.intersection_done = !cfg.intersection_delay;
    e.target = std::move(t);
    out.push_back(std::move(e));
  }
  return out;
}

namespace detail {

class Simulation {
 public:
  Simulation(const std::vector<CategoricalPoint>& pts, const PartitionConfig& cfg) {
    f_.config = cfg;
    f_.points = pts;
    for (const CategoricalPoint& p : pts) {
      f_.patterns.push_back(make_singleton(p));
      cover_.push_back(0.0);
      alive_.push_back(1);
    }
  }

  Filtration run() {
    const std::size_t n = f_.points.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (f_.points[i].category == f_.points[j].category)
          for (MergeEvent& e : make(static_cast<int>(i), static_cast<int>(j)))
            queue_.push(std::move(e));
    while (!queue_.empty()) {
      MergeEvent e = queue_.top();
      queue_.pop();
      if (!sources_alive(e)) continue;
      if (!e.intersection_done) {
        finish_delay(e);
        if (e.delay_intersection > 0.0) {
          queue_.push(std::move(e));
          continue;
        }
      }
      clock_ = std::max(clock_, e.time);
      handle(e);
    }
    return std::move(f_);
  }

 private:
  struct Later {
    bool operator()(const MergeEvent& a, const MergeEvent& b) const {
      if (a.time != b.time) return a.time > b.time;
      return a.seq > b.seq;
    }
  };

  std::vector<MergeEvent> make(int a, int b) {
    std::vector<MergeEvent> es = create_events(f_.patterns[a], a, cover_[a],
                                               f_.patterns[b], b, cover_[b],
                                               f_.points, f_.config);
    for (MergeEvent& e : es) e.seq = seq_++;
    return es;
  }

  bool sources_alive(const MergeEvent& e) const {
    return alive_[e.source1] && alive_[e.source2];
  }

  void finish_delay(MergeEvent& e) const {
    e.delay_intersection =
        intersection_delay(e.target, f_.patterns[e.source1], f_.patterns[e.source2],
                           f_.points, f_.config.rd);
    e.time += e.delay_intersection;
    e.intersection_done = true;
  }

  void handle(MergeEvent& e) {
    if (!sources_alive(e)) return;
    // Lone points cannot overlap a region: proximity keeps them clear.
    for (int id : live_ids_) {
      if (id == e.source1 || id == e.source2) continue;
      if (regions_cross(e.target, f_.patterns[id])) return;
    }
    const int id = static_cast<int>(f_.patterns.size());
    alive_[e.source1] = alive_[e.source2] = 0;
    std::erase(live_ids_, e.source1);
    std::erase(live_ids_, e.source2);
    f_.patterns.push_back(e.target);
    cover_.push_back(e.cover);
    alive_.push_back(1);
    live_ids_.push_back(id);
    f_.merges.push_back({e.time, clock_, e.source1, e.source2, id});

    std::vector<MergeEvent> past;
    for (std::size_t q = 0; q < f_.patterns.size(); ++q) {
      if (!alive_[q] || static_cast<int>(q) == id ||
          f_.patterns[q].category != e.target.category)
        continue;
      for (MergeEvent& ne : make(id, static_cast<int>(q))) {
        if (ne.time < clock_ && !ne.intersection_done) finish_delay(ne);
        if (ne.time < clock_) {
          past.push_back(std::move(ne));
        } else {
          queue_.push(std::move(ne));
        }
      }
    }
    std::sort(past.begin(), past.end(), [](const MergeEvent& a, const MergeEvent& b) {
      return Later{}(b, a);
    });
    for (MergeEvent& pe : past) handle(pe);
  }

  Filtration f_;
  std::vector<double> cover_;
  std::vector<char> alive_;
  std::vector<int> live_ids_;  // merged (non-singleton) patterns still alive
  std::priority_queue<MergeEvent, std::vector<MergeEvent>, Later> queue_;
  std::uint64_t seq_ = 0;
  double clock_ = 0.0;
};

}  // namespace detail

/// Runs the merge simulation to completion.
inline Filtration run_simulation(const std::vector<CategoricalPoint>& pts,
                                 const PartitionConfig& cfg) {
  if (!(cfg.rd > 0.0)) throw UsageError("dilation radius must be positive");
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (pts[i].id != static_cast<int>(i))
      throw DataError("point ids must be 0..n-1 in order");
  return detail::Simulation(pts, cfg).run();
}

}  // namespace setshapes
