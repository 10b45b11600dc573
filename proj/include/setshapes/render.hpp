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
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "setshapes/error.hpp"
#include "setshapes/geometry.hpp"
#include "setshapes/patterns.hpp"

namespace setshapes {

struct CategoryColors {
  std::string fill;    // shape interior
  std::string stroke;  // shape outline and point glyph
};

struct RenderStyle {
  std::vector<CategoryColors> palette;  // indexed by category id
  std::string background = "#ffffff";
  std::string point_outline = "#1a1a1a";
  double point_radius = 1.0 / 3.0;
  double stroke_width = 0.1;
  double padding = 1.0;
};

namespace detail {

struct Rgb {
  double r, g, b;
};

inline Rgb parse_hex(const std::string& s) {
  auto bad = [&] { return DataError("not a #rrggbb color: '" + s + "'"); };
  if (s.size() != 7 || s[0] != '#') throw bad();
  unsigned v = 0;
  for (std::size_t k = 1; k < 7; ++k) {
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(s[k])));
    v <<= 4;
    if (c >= '0' && c <= '9') {
      v |= static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      v |= static_cast<unsigned>(c - 'a' + 10);
    } else {
      throw bad();
    }
  }
  return {((v >> 16) & 0xff) / 255.0, ((v >> 8) & 0xff) / 255.0, (v & 0xff) / 255.0};
}

inline std::string to_hex(Rgb c) {
  auto byte = [](double x) {
    return static_cast<unsigned>(std::lround(std::clamp(x, 0.0, 1.0) * 255.0));
  };
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", byte(c.r), byte(c.g), byte(c.b));
  return buf;
}

inline Rgb hsv(double h, double s, double v) {
  h = std::fmod(h, 360.0) / 60.0;
  const int k = static_cast<int>(h);
  const double f = h - k;
  const double p = v * (1 - s), q = v * (1 - s * f), t = v * (1 - s * (1 - f));
  switch (k) {
    case 0: return {v, t, p};
    case 1: return {q, v, p};
    case 2: return {p, v, t};
    case 3: return {p, q, v};
    case 4: return {t, p, v};
    default: return {v, p, q};
  }
}

inline std::string tint(const std::string& base, double amount) {
  const Rgb c = parse_hex(base);
  return to_hex({c.r + (1 - c.r) * amount, c.g + (1 - c.g) * amount,
                 c.b + (1 - c.b) * amount});
}

// Six decimals, no negative zero.
inline std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

}  // namespace detail

/// Colorblind-safe base colors; categories past the eighth get hues spaced
/// by the golden angle.
inline std::string base_color(int category) {
  static const char* kBase[] = {"#e69f00", "#56b4e9", "#009e73", "#f0e442",
                                "#0072b2", "#d55e00", "#cc79a7", "#999999"};
  if (category < 8) return kBase[category];
  return detail::to_hex(detail::hsv(category * 137.50776405, 0.65, 0.80));
}

inline CategoryColors colors_for(const std::string& base) {
  return {detail::tint(base, 0.45), base};
}

/// Default style for `categories` categories, sized for dilation radius rd.
inline RenderStyle default_style(int categories, double rd) {
  RenderStyle s;
  for (int c = 0; c < categories; ++c) s.palette.push_back(colors_for(base_color(c)));
  s.point_radius = rd / 3.0;
  s.stroke_width = rd / 12.0;
  s.padding = rd;
  return s;
}

/// What the renderer draws: final shapes with their categories, and the
/// stacking information used to decide which shape is on top where.
struct Scene {
  std::vector<geo::ArcShape> shapes;
  std::vector<int> category;  // per shape
  const geo::Arrangement* stacking_arrangement = nullptr;
  const std::vector<std::vector<int>>* face_order = nullptr;  // top first
  std::vector<CategoricalPoint> points;
};

/// For every face of `arr`, the index of the shape visible there (-1 when
/// uncovered).
inline std::vector<int> visible_shapes(const geo::Arrangement& arr, const Scene& scene) {
  std::vector<int> top(arr.faces().size(), -1);
  for (const geo::Face& f : arr.faces()) {
    if (!f.bounded || f.shapes.empty()) continue;
    top[f.id] = f.shapes.front();
    if (f.shapes.size() == 1 || scene.stacking_arrangement == nullptr) continue;
    const int g = scene.stacking_arrangement->locate(f.rep);
    for (int k : (*scene.face_order)[g]) {
      if (std::find(f.shapes.begin(), f.shapes.end(), k) != f.shapes.end()) {
        top[f.id] = k;
        break;
      }
    }
  }
  return top;
}

namespace detail {

class PathWriter {
 public:
  PathWriter(double min_x, double max_y, double pad) : min_x_(min_x), max_y_(max_y), pad_(pad) {}

  std::string xy(Point p) const {
    return num(p.x - min_x_ + pad_) + " " + num(max_y_ - p.y + pad_);
  }

  void move(Point p) { out_ << 'M' << xy(p); }
  void close() { out_ << 'Z'; }

  void edge(const geo::Edge& e) {
    if (e.is_segment()) {
      out_ << 'L' << xy(e.b);
      return;
    }
    // Halves keep the large-arc flag unambiguous; the y flip turns a
    // counter-clockwise world arc into a negative-sweep SVG arc.
    const int pieces = std::abs(e.sweep) > geo::kPi ? 2 : 1;
    for (int k = 1; k <= pieces; ++k) {
      const Point q = k == pieces ? e.b : e.at(static_cast<double>(k) / pieces);
      out_ << 'A' << num(e.radius) << ' ' << num(e.radius) << " 0 0 " << (e.ccw() ? 0 : 1)
           << ' ' << xy(q);
    }
  }

  void loop(const geo::Loop& l) {
    if (l.edges.empty()) return;
    move(l.edges.front().a);
    for (const geo::Edge& e : l.edges) edge(e);
    close();
  }

  std::string str() const { return out_.str(); }
  bool empty() const { return out_.str().empty(); }

 private:
  double min_x_, max_y_, pad_;
  std::ostringstream out_;
};

}  // namespace detail

/// SVG drawing of a scene: every covered face is filled with the color of
/// the shape on top there, visible outlines are stroked, points go last.
inline std::string render_svg(const Scene& scene, const RenderStyle& style) {
  for (int c : scene.category)
    if (c < 0 || c >= static_cast<int>(style.palette.size()))
      throw DataError("style has no color for category " + std::to_string(c));
  for (const CategoricalPoint& p : scene.points)
    if (p.category < 0 || p.category >= static_cast<int>(style.palette.size()))
      throw DataError("style has no color for category " + std::to_string(p.category));

  geo::Box box;
  for (const geo::ArcShape& s : scene.shapes) box.add(s.bbox());
  for (const CategoricalPoint& p : scene.points) box.add(p.pos);
  if (box.empty()) box.add(Point{0, 0});
  const double pad = style.padding;
  const double width = box.width() + 2 * pad;
  const double height = box.height() + 2 * pad;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << detail::num(width) << "\" height=\"" << detail::num(height) << "\" viewBox=\"0 0 "
      << detail::num(width) << ' ' << detail::num(height) << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"" << style.background << "\"/>\n";

  if (!scene.shapes.empty()) {
    const geo::Arrangement arr(scene.shapes);
    const std::vector<int> top = visible_shapes(arr, scene);
    const int n = static_cast<int>(scene.shapes.size());

    svg << "<g fill-rule=\"evenodd\" stroke=\"none\">\n";
    for (int k = 0; k < n; ++k) {
      std::vector<int> faces;
      for (std::size_t f = 0; f < top.size(); ++f)
        if (top[f] == k) faces.push_back(static_cast<int>(f));
      if (faces.empty()) continue;
      detail::PathWriter w(box.min_x, box.max_y, pad);
      for (const geo::Loop& l : arr.region_of(faces).loops) w.loop(l);
      svg << "<path fill=\"" << style.palette[scene.category[k]].fill << "\" d=\"" << w.str()
          << "\"/>\n";
    }
    svg << "</g>\n";

    // An outline piece of shape k shows when k is on top on its inner side.
    svg << "<g fill=\"none\" stroke-width=\"" << detail::num(style.stroke_width)
        << "\" stroke-linejoin=\"round\" stroke-linecap=\"round\">\n";
    const auto& edges = arr.overlay().edges();
    for (int k = 0; k < n; ++k) {
      detail::PathWriter w(box.min_x, box.max_y, pad);
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (!arr.on_boundary(e, k)) continue;
        const int h = arr.covers_left(static_cast<int>(2 * e), k) ? static_cast<int>(2 * e)
                                                                  : static_cast<int>(2 * e + 1);
        if (top[arr.face_of(h)] != k) continue;
        const geo::Edge g = arr.halfedge_geom(h);
        w.move(g.a);
        w.edge(g);
      }
      if (w.empty()) continue;
      svg << "<path stroke=\"" << style.palette[scene.category[k]].stroke << "\" d=\""
          << w.str() << "\"/>\n";
    }
    svg << "</g>\n";
  }

  svg << "<g stroke=\"" << style.point_outline << "\" stroke-width=\""
      << detail::num(style.stroke_width / 2) << "\">\n";
  for (const CategoricalPoint& p : scene.points) {
    detail::PathWriter w(box.min_x, box.max_y, pad);
    const std::string c = w.xy(p.pos);
    const auto space = c.find(' ');
    svg << "<circle cx=\"" << c.substr(0, space) << "\" cy=\"" << c.substr(space + 1)
        << "\" r=\"" << detail::num(style.point_radius) << "\" fill=\""
        << style.palette[p.category].stroke << "\"/>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace setshapes
