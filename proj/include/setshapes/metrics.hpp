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
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "setshapes/error.hpp"
#include "setshapes/geometry.hpp"
#include "setshapes/patterns.hpp"

namespace setshapes {

enum class Turn { kClockwise = -1, kStraight = 0, kCounterClockwise = 1 };

struct BoundarySample {
  Point pos;
  double turn = 0.0;  // signed turning angle at pos
  Turn kind = Turn::kStraight;
};

struct SamplingParams {
  double spacing = 0.25;
  double straight = 1e-3;  // |turn| below this counts as straight
  // Loops too short for three samples get three evenly spaced ones instead
  // of being rejected.
  bool adapt_short_loops = false;
};

/// Equidistant samples along every loop of `shape`, one vector per loop.
inline std::vector<std::vector<BoundarySample>> sample_boundary(const geo::ArcShape& shape,
                                                                const SamplingParams& prm) {
  if (!(prm.spacing > 0)) throw DataError("sampling spacing must be positive");
  std::vector<std::vector<BoundarySample>> out;
  for (const geo::Loop& l : shape.loops) {
    const double len = l.length();
    double step = prm.spacing;
    auto m = static_cast<std::size_t>(std::floor(len / step + 1e-9));
    if (m < 3 && prm.adapt_short_loops && len > 0) {
      m = 3;
      step = len / 3;
    }
    if (prm.spacing > len && !prm.adapt_short_loops)
      throw DataError("sampling spacing exceeds a boundary length");
    if (m < 3) throw DataError("too few boundary samples for the sampling spacing");
    std::vector<BoundarySample> s(m);
    std::size_t e = 0;
    double before = 0.0;  // arc length up to the start of edge e
    for (std::size_t k = 0; k < m; ++k) {
      const double target = static_cast<double>(k) * step;
      while (e + 1 < l.edges.size() && before + l.edges[e].length() < target) {
        before += l.edges[e].length();
        ++e;
      }
      const double el = l.edges[e].length();
      const double t = el > 0 ? std::clamp((target - before) / el, 0.0, 1.0) : 0.0;
      s[k].pos = l.edges[e].at(t);
    }
    for (std::size_t k = 0; k < m; ++k) {
      const Point x = s[(k + m - 1) % m].pos;
      const Point z = s[(k + 1) % m].pos;
      const double a = turning_angle(x, s[k].pos, z);
      s[k].turn = a;
      s[k].kind = std::abs(a) < prm.straight ? Turn::kStraight
                  : a > 0                    ? Turn::kCounterClockwise
                                             : Turn::kClockwise;
    }
    out.push_back(std::move(s));
  }
  return out;
}

/// Sign changes of the sampled curvature, cyclic per loop, straight samples
/// skipped. Holes count too.
inline int inflections(const std::vector<std::vector<BoundarySample>>& loops) {
  int n = 0;
  for (const auto& l : loops) {
    std::vector<Turn> signs;
    for (const BoundarySample& s : l)
      if (s.kind != Turn::kStraight) signs.push_back(s.kind);
    for (std::size_t k = 0; k < signs.size(); ++k)
      n += signs[k] != signs[(k + 1) % signs.size()] ? 1 : 0;
  }
  return n;
}

/// Total absolute turning over all loops, minus 2 pi once per shape.
inline double total_curvature(const std::vector<std::vector<BoundarySample>>& loops) {
  double sum = 0.0;
  for (const auto& l : loops)
    for (const BoundarySample& s : l) sum += std::abs(s.turn);
  return sum - geo::kTwoPi;
}

struct ShapeRatios {
  double perimeter = 1.0;  // perimeter / hull perimeter
  double area = 1.0;       // hull area / area
};

inline ShapeRatios shape_ratios(const geo::ArcShape& shape) {
  const double a = shape.area();
  if (!(a > 0)) throw DataError("shape has zero area");
  const geo::ArcShape hull = geo::convex_hull_of_shape(shape);
  return {shape.perimeter() / hull.perimeter(), hull.area() / a};
}

inline geo::Box point_box(const std::vector<CategoricalPoint>& points) {
  geo::Box box;
  for (const CategoricalPoint& p : points) box.add(p.pos);
  return box;
}

/// Area of the union of `shapes` as a percentage of the points' bounding box.
inline double covered_area(const std::vector<geo::ArcShape>& shapes,
                           const std::vector<CategoricalPoint>& points) {
  const geo::Box box = point_box(points);
  if (!(box.area() > 0)) throw DataError("points have a degenerate bounding box");
  return 100.0 * geo::union_all(shapes).area() / box.area();
}

struct AvgMax {
  double avg = 0.0;
  double max = 0.0;
};

inline AvgMax avg_max(const std::vector<double>& v) {
  AvgMax out;
  if (v.empty()) return out;
  double sum = 0.0;
  out.max = v.front();
  for (double x : v) {
    sum += x;
    out.max = std::max(out.max, x);
  }
  out.avg = sum / static_cast<double>(v.size());
  return out;
}

/// Per set: |share of the points - share of the covered area|.
inline std::vector<double> density_distortions(const std::vector<double>& set_area,
                                               const std::vector<int>& set_points) {
  double total_area = 0.0;
  double total_points = 0.0;
  for (double a : set_area) total_area += a;
  for (int n : set_points) total_points += n;
  std::vector<double> out;
  for (std::size_t s = 0; s < set_area.size(); ++s) {
    const double pa = total_area > 0 ? set_area[s] / total_area : 0.0;
    const double pn = total_points > 0 ? set_points[s] / total_points : 0.0;
    out.push_back(std::abs(pn - pa));
  }
  return out;
}

inline AvgMax density_distortion(const std::vector<double>& set_area,
                                 const std::vector<int>& set_points) {
  return avg_max(density_distortions(set_area, set_points));
}

struct ShapeMetrics {
  int inflections = 0;
  double perimeter_ratio = 1.0;
  double area_ratio = 1.0;
  double curvature = 0.0;  // total absolute curvature minus 2 pi
};

struct MetricsReport {
  int inflections = 0;
  AvgMax perimeter_ratio;
  AvgMax area_ratio;
  AvgMax curvature;
  int shapes = 0;
  double covered_area_pct = 0.0;
  AvgMax density_distortion;
  AvgMax cover_radius;
  std::vector<ShapeMetrics> per_shape;
  std::vector<double> per_set_distortion;
};

inline ShapeMetrics measure_shape(const geo::ArcShape& shape, const SamplingParams& prm) {
  ShapeMetrics m;
  const auto samples = sample_boundary(shape, prm);
  m.inflections = inflections(samples);
  m.curvature = total_curvature(samples);
  const ShapeRatios r = shape_ratios(shape);
  m.perimeter_ratio = r.perimeter;
  m.area_ratio = r.area;
  return m;
}

/// All measures for a drawing: `shapes[k]` is the final shape of
/// `patterns[k]`.
inline MetricsReport report(const std::vector<Pattern>& patterns,
                            const std::vector<geo::ArcShape>& shapes,
                            const std::vector<CategoricalPoint>& points,
                            const SamplingParams& prm) {
  if (patterns.size() != shapes.size())
    throw DataError("metrics need one shape per pattern");
  MetricsReport out;
  std::vector<double> pr, ar, cu, cr;
  for (const geo::ArcShape& s : shapes) {
    out.per_shape.push_back(measure_shape(s, prm));
    const ShapeMetrics& m = out.per_shape.back();
    out.inflections += m.inflections;
    pr.push_back(m.perimeter_ratio);
    ar.push_back(m.area_ratio);
    cu.push_back(m.curvature);
  }
  out.perimeter_ratio = avg_max(pr);
  out.area_ratio = avg_max(ar);
  out.curvature = avg_max(cu);
  out.shapes = static_cast<int>(shapes.size());
  out.covered_area_pct = covered_area(shapes, points);

  std::map<int, std::vector<geo::ArcShape>> by_set;
  std::map<int, int> counts;
  for (const CategoricalPoint& p : points) ++counts[p.category];
  for (std::size_t k = 0; k < patterns.size(); ++k)
    by_set[patterns[k].category].push_back(shapes[k]);
  std::vector<double> areas;
  std::vector<int> ns;
  for (auto [c, n] : counts) {
    areas.push_back(by_set.count(c) ? geo::union_all(by_set[c]).area() : 0.0);
    ns.push_back(n);
  }
  out.per_set_distortion = density_distortions(areas, ns);
  out.density_distortion = avg_max(out.per_set_distortion);

  for (const Pattern& p : patterns) cr.push_back(cover_radius(p, points));
  out.cover_radius = avg_max(cr);
  return out;
}

inline std::string csv_header() {
  return "inflections,perimeter_ratio_avg,perimeter_ratio_max,area_ratio_avg,area_ratio_max,"
         "curvature_avg,curvature_max,shapes,covered_area_pct,density_distortion_avg,"
         "density_distortion_max,cover_radius_avg,cover_radius_max";
}

inline std::string csv_row(const MetricsReport& r) {
  std::ostringstream s;
  auto f = [](double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return std::string(buf == std::string("-0.000000") ? "0.000000" : buf);
  };
  s << r.inflections << ',' << f(r.perimeter_ratio.avg) << ',' << f(r.perimeter_ratio.max) << ','
    << f(r.area_ratio.avg) << ',' << f(r.area_ratio.max) << ',' << f(r.curvature.avg) << ','
    << f(r.curvature.max) << ',' << r.shapes << ',' << f(r.covered_area_pct) << ','
    << f(r.density_distortion.avg) << ',' << f(r.density_distortion.max) << ','
    << f(r.cover_radius.avg) << ',' << f(r.cover_radius.max);
  return s.str();
}

}  // namespace setshapes
