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

// Constructed overlap fixtures: two patterns of different categories whose
// dilations overlap with data points inside the overlap, and a Monte-Carlo
// check that cut-outs keep points visible.

#pragma once

#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "setshapes/pipeline.hpp"

namespace oracle {

struct OverlapFixture {
  std::vector<setshapes::Pattern> patterns;
  std::vector<setshapes::CategoricalPoint> points;
  double rd = 1.0;
};

/// An upper candidate (bank or island, category 0) crossed by a lower
/// candidate (singleton, bank or island, category 1). Points of the two
/// patterns keep at least 0.35 rd apart.
inline OverlapFixture overlap_fixture(std::mt19937& rng) {
  using namespace setshapes;
  std::uniform_real_distribution<double> u(0, 1);
  OverlapFixture fx;
  auto add = [&](Point p, int c) {
    fx.points.push_back({static_cast<int>(fx.points.size()), p, c});
    return fx.points.back().id;
  };
  auto far_from_others = [&](Point p, int c) {
    for (const auto& q : fx.points)
      if (std::hypot(q.pos.x - p.x, q.pos.y - p.y) < (q.category == c ? 0.5 : 0.35) * fx.rd)
        return false;
    return true;
  };
  // Pattern A: a horizontal-ish bank or a small island around the origin.
  std::vector<int> a;
  const bool a_island = u(rng) < 0.5;
  if (a_island) {
    for (int k = 0; k < 4; ++k) {
      const double t = 2 * geo::kPi * (k + 0.3 * u(rng)) / 4;
      a.push_back(add({2.2 * std::cos(t), 1.6 * std::sin(t)}, 0));
    }
  } else {
    const int n = 2 + static_cast<int>(3 * u(rng));
    for (int k = 0; k < n; ++k) a.push_back(add({-3 + 6.0 * k / (n - 1), 0.3 * (u(rng) - 0.5)}, 0));
  }
  fx.patterns.push_back(a_island ? make_island(0, a, fx.points) : make_bank(0, a, fx.points));
  // Pattern B: points scattered across A's dilation and beyond.
  std::vector<int> b;
  const int kind = static_cast<int>(3 * u(rng));  // 0 singleton, 1 bank, 2 island
  const int want = kind == 0 ? 1 : 3;
  const double ang = geo::kPi / 2 + 0.6 * (u(rng) - 0.5);
  const double shift = 2.0 * (u(rng) - 0.5);
  for (int tries = 0; static_cast<int>(b.size()) < want && tries < 1000; ++tries) {
    const double s = kind == 0 ? 0.4 + 0.5 * u(rng) : -2.5 + 5.0 * b.size() / 2 + 0.3 * u(rng);
    const Point p{shift + s * std::cos(ang) + 0.2 * (u(rng) - 0.5),
                  s * std::sin(ang) + (a_island ? 1.2 : 0.0) + 0.2 * (u(rng) - 0.5)};
    if (far_from_others(p, 1)) b.push_back(add(p, 1));
  }
  if (b.size() == 1) {
    fx.patterns.push_back(make_singleton(fx.points[b[0]]));
  } else if (kind == 1 || b.size() == 2) {
    fx.patterns.push_back(make_bank(1, b, fx.points));
  } else {
    fx.patterns.push_back(make_island(1, b, fx.points));
  }
  return fx;
}

struct VisibilityStats {
  int foreign_points = 0;
  int own_points = 0;
  std::string failures;
};

/// For every modification of `d`: each lower point inside the component
/// keeps a disk of radius 0.95 (r_X - r_s) free of the upper shape in at
/// least 99% of samples; each own point keeps its whole inclusion disk.
inline VisibilityStats check_visibility(const setshapes::Drawing& d, std::uint32_t seed,
                                        int samples = 400) {
  using namespace setshapes;
  VisibilityStats st;
  std::ostringstream err;
  const double rs = SmoothingParams::from_rd(d.stacking.rd).rs;
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> ur(0, 1);
  auto disk_sample = [&](Point c, double r) {
    const double rr = r * std::sqrt(ur(rng)), t = 2 * kPi * ur(rng);
    return Point{c.x + rr * std::cos(t), c.y + rr * std::sin(t)};
  };
  for (const Modification& m : d.modified.modifications) {
    const Classifier upper({d.modified.shapes[m.shape]}, 1e-3);
    const Classifier original({d.stacking.dilated[m.shape]}, 1e-3);
    const geo::ArcShape region =
        d.stacking.arrangement->region_of(d.order.components.singles[m.component].faces);
    const Classifier comp({region}, 1e-3);
    for (std::size_t k = 0; k < m.disks.exclusion.size(); ++k) {
      const geo::Disk x = m.disks.exclusion[k];
      if (!comp.inside(0, x.center) || !original.inside(0, x.center)) continue;
      const double r = 0.95 * (x.radius - rs);
      if (r <= 0) continue;
      ++st.foreign_points;
      int covered = 0;
      for (int s = 0; s < samples; ++s) covered += upper.inside(0, disk_sample(x.center, r)) ? 1 : 0;
      if (covered > 0.01 * samples)
        err << "shape " << m.shape << ": point " << m.exclusion_ids[k] << " covered in "
            << covered << "/" << samples << " samples\n";
    }
    for (const geo::Disk& y : m.disks.inclusion) {
      if (y.radius <= 0) continue;
      ++st.own_points;
      int missing = 0;
      for (int s = 0; s < samples; ++s)
        missing += upper.inside(0, disk_sample(y.center, 0.999 * y.radius)) ? 0 : 1;
      if (missing > 0)
        err << "shape " << m.shape << ": inclusion disk at (" << y.center.x << ", "
            << y.center.y << ") lost " << missing << "/" << samples << " samples\n";
    }
  }
  st.failures = err.str();
  return st;
}

}  // namespace oracle
