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
#include <numbers>

namespace setshapes::geo {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Global geometric tolerance in world units.
inline constexpr double kEps = 1e-9;

/// Distance below which two computed points are considered the same vertex.
inline constexpr double kSnap = 64.0 * kEps;

struct Point {
  double x = 0.0;
  double y = 0.0;

  constexpr Point operator+(Point o) const { return {x + o.x, y + o.y}; }
  constexpr Point operator-(Point o) const { return {x - o.x, y - o.y}; }
  constexpr Point operator-() const { return {-x, -y}; }
  constexpr Point operator*(double s) const { return {x * s, y * s}; }
  constexpr Point operator/(double s) const { return {x / s, y / s}; }
  constexpr Point& operator+=(Point o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr bool operator==(const Point&) const = default;
};

using Vec = Point;

constexpr Point operator*(double s, Point p) { return {p.x * s, p.y * s}; }

constexpr double dot(Vec a, Vec b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec a, Vec b) { return a.x * b.y - a.y * b.x; }
constexpr double norm2(Vec a) { return dot(a, a); }
inline double norm(Vec a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }
constexpr double dist2(Point a, Point b) { return norm2(a - b); }

/// Rotates by +90 degrees.
constexpr Vec perp(Vec a) { return {-a.y, a.x}; }

inline Vec unit(Vec a) {
  const double n = norm(a);
  return n > 0.0 ? a / n : Vec{};
}

inline Vec dir(double angle) { return {std::cos(angle), std::sin(angle)}; }
inline double angle_of(Vec a) { return std::atan2(a.y, a.x); }
constexpr Point lerp(Point a, Point b, double t) { return a + (b - a) * t; }
constexpr Point midpoint(Point a, Point b) { return (a + b) * 0.5; }

/// Maps an angle into [0, 2pi).
inline double wrap_positive(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a -= kTwoPi;
  return a;
}

/// Maps an angle into (-pi, pi].
inline double wrap_signed(double a) {
  a = wrap_positive(a);
  return a > kPi ? a - kTwoPi : a;
}

inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Orientation of (a, b, c): > 0 for a left turn.
constexpr double orient(Point a, Point b, Point c) { return cross(b - a, c - a); }

struct Box {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  bool empty() const { return min_x > max_x || min_y > max_y; }
  void add(Point p) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  void add(const Box& b) {
    if (b.empty()) return;
    add(Point{b.min_x, b.min_y});
    add(Point{b.max_x, b.max_y});
  }
  Box inflated(double d) const {
    if (empty()) return *this;
    return {min_x - d, min_y - d, max_x + d, max_y + d};
  }
  bool contains(Point p) const {
    return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
  }
  bool intersects(const Box& o) const {
    return !(o.min_x > max_x || o.max_x < min_x || o.min_y > max_y ||
             o.max_y < min_y);
  }
  double width() const { return empty() ? 0.0 : max_x - min_x; }
  double height() const { return empty() ? 0.0 : max_y - min_y; }
  double area() const { return width() * height(); }
  double diagonal() const { return std::hypot(width(), height()); }
  Point center() const { return {(min_x + max_x) / 2, (min_y + max_y) / 2}; }
};

struct Disk {
  Point center;
  double radius = 0.0;
};

/// Distance from p to the closed segment [a, b].
inline double segment_distance(Point p, Point a, Point b) {
  const Vec d = b - a;
  const double len2 = norm2(d);
  if (len2 == 0.0) return dist(p, a);
  const double t = std::clamp(dot(p - a, d) / len2, 0.0, 1.0);
  return dist(p, a + d * t);
}

/// True when the open segments (a, b) and (c, d) cross at a single interior
/// point of both.
inline bool segments_cross(Point a, Point b, Point c, Point d,
                           double tol = kEps) {
  const double o1 = orient(a, b, c);
  const double o2 = orient(a, b, d);
  const double o3 = orient(c, d, a);
  const double o4 = orient(c, d, b);
  const double s1 = tol * dist(a, b);
  const double s2 = tol * dist(c, d);
  return ((o1 > s1 && o2 < -s1) || (o1 < -s1 && o2 > s1)) &&
         ((o3 > s2 && o4 < -s2) || (o3 < -s2 && o4 > s2));
}

}  // namespace setshapes::geo
