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
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "setshapes/io.hpp"

namespace setshapes {

/// Parameters of a clustered categorical point set.
struct SyntheticSpec {
  std::string name = "synthetic";
  int points = 50;
  int categories = 3;
  int clusters_per_category = 2;
  double spread = 6.0;          // cluster standard deviation
  double noise_fraction = 0.2;  // share of uniformly scattered points
  double width = 100.0;
  double height = 100.0;
  double min_separation = 0.75;  // between any two points
  std::uint32_t seed = 1;
};

namespace detail {

// Uniform in (0, 1) straight from the engine, so the stream is identical on
// every standard library.
inline double unit_open(std::mt19937& rng) {
  return (static_cast<double>(rng()) + 0.5) / 4294967296.0;
}

inline double normal(std::mt19937& rng) {
  const double u = unit_open(rng);
  const double v = unit_open(rng);
  return std::sqrt(-2.0 * std::log(u)) * std::cos(geo::kTwoPi * v);
}

}  // namespace detail

/// Deterministic clustered point set: each category owns a few Gaussian
/// clusters, plus some uniform noise. Points closer than min_separation to
/// an earlier point are redrawn.
inline Dataset synthetic_dataset(const SyntheticSpec& spec) {
  std::mt19937 rng(spec.seed);
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * detail::unit_open(rng); };
  std::vector<std::vector<Point>> centers(spec.categories);
  for (auto& cs : centers)
    for (int k = 0; k < spec.clusters_per_category; ++k)
      cs.push_back({uniform(0.1 * spec.width, 0.9 * spec.width),
                    uniform(0.1 * spec.height, 0.9 * spec.height)});

  Dataset ds;
  ds.name = spec.name;
  for (int c = 0; c < spec.categories; ++c) ds.labels.push_back("c" + std::to_string(c));
  while (static_cast<int>(ds.points.size()) < spec.points) {
    const int c = static_cast<int>(ds.points.size()) % spec.categories;
    Point p;
    if (detail::unit_open(rng) < spec.noise_fraction) {
      p = {uniform(0, spec.width), uniform(0, spec.height)};
    } else {
      const Point m = centers[c][rng() % centers[c].size()];
      p = {m.x + spec.spread * detail::normal(rng), m.y + spec.spread * detail::normal(rng)};
    }
    if (p.x < 0 || p.y < 0 || p.x > spec.width || p.y > spec.height) continue;
    bool clear = true;
    for (const CategoricalPoint& q : ds.points)
      clear = clear && geo::dist(p, q.pos) >= spec.min_separation;
    if (!clear) continue;
    // Round so the TSV text is short and round-trips exactly.
    p = {std::round(p.x * 1000) / 1000, std::round(p.y * 1000) / 1000};
    ds.points.push_back({static_cast<int>(ds.points.size()), p, c});
  }
  return ds;
}

/// 55 points in 4 categories.
inline SyntheticSpec mills_like() {
  SyntheticSpec s;
  s.name = "mills-like";
  s.points = 55;
  s.categories = 4;
  s.clusters_per_category = 2;
  s.spread = 7.0;
  s.noise_fraction = 0.25;
  s.seed = 1855;
  return s;
}

/// 96 points in 3 categories.
inline SyntheticSpec nyc_like() {
  SyntheticSpec s;
  s.name = "nyc-like";
  s.points = 96;
  s.categories = 3;
  s.clusters_per_category = 3;
  s.spread = 6.0;
  s.noise_fraction = 0.2;
  s.seed = 1996;
  return s;
}

/// 516 points in 21 categories.
inline SyntheticSpec hdn_like() {
  SyntheticSpec s;
  s.name = "hdn-like";
  s.points = 516;
  s.categories = 21;
  s.clusters_per_category = 2;
  s.spread = 4.0;
  s.noise_fraction = 0.1;
  s.seed = 2516;
  return s;
}

}  // namespace setshapes
