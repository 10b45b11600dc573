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

#include "setshapes/error.hpp"
#include "setshapes/geometry/overlay.hpp"
#include "setshapes/log.hpp"

namespace setshapes::geo {

enum class BoolOp { kUnion, kIntersection, kDifference };

namespace detail {

inline double tolerance_for(const std::vector<const ArcShape*>& shapes) {
  Box box;
  for (const ArcShape* s : shapes) box.add(s->bbox());
  return tolerance_for(box);
}

}  // namespace detail

/// Extracts {p : pred(windings at p)} from the overlay of `shapes`. If the
/// boundary does not link up, the overlay is rebuilt with a coarser
/// tolerance before giving up.
template <class Pred>
ArcShape overlay_region(const std::vector<const ArcShape*>& shapes, Pred pred) {
  double tol = detail::tolerance_for(shapes);
  for (int attempt = 0; attempt < 3; ++attempt) {
    Overlay ov(shapes, tol);
    ArcShape out;
    if (ov.extract(pred, out)) return out;
    log::debug("overlay linking failed; retrying with a coarser tolerance");
    tol *= 16;
  }
  throw GeometryError("boolean operation failed: boundary could not be linked");
}

template <class Pred>
double overlay_area(const std::vector<const ArcShape*>& shapes, Pred pred) {
  Overlay ov(shapes, detail::tolerance_for(shapes));
  return ov.area(pred);
}

namespace detail {

inline auto op_predicate(BoolOp op) {
  return [op](const int* w) {
    const bool a = w[0] > 0;
    const bool b = w[1] > 0;
    switch (op) {
      case BoolOp::kUnion:
        return a || b;
      case BoolOp::kIntersection:
        return a && b;
      case BoolOp::kDifference:
        return a && !b;
    }
    return false;
  };
}

inline ArcShape concat(const ArcShape& a, const ArcShape& b) {
  ArcShape out = a;
  out.loops.insert(out.loops.end(), b.loops.begin(), b.loops.end());
  return out;
}

}  // namespace detail

inline ArcShape boolean(const ArcShape& a, const ArcShape& b, BoolOp op) {
  if (a.empty() || b.empty() || !a.bbox().intersects(b.bbox())) {
    switch (op) {
      case BoolOp::kUnion:
        return detail::concat(a, b);
      case BoolOp::kIntersection:
        return {};
      case BoolOp::kDifference:
        return a;
    }
  }
  return overlay_region({&a, &b}, detail::op_predicate(op));
}

inline double boolean_area(const ArcShape& a, const ArcShape& b, BoolOp op) {
  if (a.empty() || b.empty() || !a.bbox().intersects(b.bbox())) {
    switch (op) {
      case BoolOp::kUnion:
        return a.area() + b.area();
      case BoolOp::kIntersection:
        return 0.0;
      case BoolOp::kDifference:
        return a.area();
    }
  }
  return overlay_area({&a, &b}, detail::op_predicate(op));
}

inline ArcShape unite(const ArcShape& a, const ArcShape& b) {
  return boolean(a, b, BoolOp::kUnion);
}
inline ArcShape intersect(const ArcShape& a, const ArcShape& b) {
  return boolean(a, b, BoolOp::kIntersection);
}
inline ArcShape subtract(const ArcShape& a, const ArcShape& b) {
  return boolean(a, b, BoolOp::kDifference);
}

/// Rewrites a loop soup (loops may overlap) as a proper region: the set of
/// points with positive total winding number.
inline ArcShape regularize(const ArcShape& s) {
  if (s.empty()) return s;
  return overlay_region({&s}, [](const int* w) { return w[0] > 0; });
}

inline ArcShape union_all(const std::vector<ArcShape>& shapes) {
  ArcShape soup;
  for (const ArcShape& s : shapes)
    soup.loops.insert(soup.loops.end(), s.loops.begin(), s.loops.end());
  return regularize(soup);
}

}  // namespace setshapes::geo
