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

#include <vector>

#include "setshapes/cutouts.hpp"
#include "setshapes/error.hpp"
#include "setshapes/metrics.hpp"
#include "setshapes/partition.hpp"
#include "setshapes/render.hpp"
#include "setshapes/stacking.hpp"

namespace setshapes {

/// r_d used when none is given: 1/40 of the bounding-box diagonal.
inline double default_rd(const std::vector<CategoricalPoint>& points) {
  geo::Box box;
  for (const CategoricalPoint& p : points) box.add(p.pos);
  const double d = box.diagonal();
  return d > 0 ? d / 40.0 : 1.0;
}

/// Default drawing time: 3.5 r_d.
inline double default_time(double rd) { return 3.5 * rd; }

/// A partition turned into final shapes, together with everything needed
/// to render and measure it.
struct Drawing {
  double t = 0.0;
  std::vector<Pattern> patterns;
  StackingInput stacking;
  StackingResult order;
  ModifyResult modified;
};

inline Drawing draw_patterns(const std::vector<Pattern>& patterns,
                             const std::vector<CategoricalPoint>& points, double rd) {
  Drawing d;
  d.patterns = patterns;
  d.stacking = prepare_stacking(patterns, points, rd);
  d.order = compute_stacking(d.stacking);
  d.modified = modify_all(d.stacking, d.order, SmoothingParams::from_rd(rd));
  return d;
}

inline Drawing draw_at(const Filtration& f, double t) {
  if (!(t >= 0)) throw UsageError("time must be non-negative");
  Drawing d = draw_patterns(f.partition_at(t), f.points, f.config.rd);
  d.t = t;
  return d;
}

inline Scene scene_of(const Drawing& d) {
  Scene s;
  s.shapes = d.modified.shapes;
  for (const Pattern& p : d.patterns) s.category.push_back(p.category);
  s.stacking_arrangement = d.stacking.arrangement.get();
  s.face_order = &d.order.face_order;
  s.points = d.stacking.points;
  return s;
}

inline std::string render_svg(const Drawing& d, const RenderStyle& style) {
  return render_svg(scene_of(d), style);
}

/// Measures with the default sampling: spacing r_d / 4.
inline MetricsReport measure(const Drawing& d) {
  SamplingParams prm;
  prm.spacing = d.stacking.rd / 4.0;
  prm.adapt_short_loops = true;
  return report(d.patterns, d.modified.shapes, d.stacking.points, prm);
}

}  // namespace setshapes
