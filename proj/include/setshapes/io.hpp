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
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "setshapes/error.hpp"
#include "setshapes/metrics.hpp"
#include "setshapes/partition.hpp"
#include "setshapes/render.hpp"
#include "setshapes/stacking.hpp"

namespace setshapes {

using Json = nlohmann::ordered_json;

struct Dataset {
  std::string name;
  std::vector<CategoricalPoint> points;
  std::vector<std::string> labels;  // category id -> label
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path + "'");
  out << text;
}

inline std::string stem(const std::string& path) {
  const auto slash = path.find_last_of("/\\");
  std::string s = slash == std::string::npos ? path : path.substr(slash + 1);
  const auto dot = s.rfind('.');
  return dot == std::string::npos || dot == 0 ? s : s.substr(0, dot);
}

// Adds a point, assigning dense category ids in order of first appearance.
class DatasetBuilder {
 public:
  explicit DatasetBuilder(std::string name) { ds_.name = std::move(name); }

  void add(double x, double y, const std::string& label, const std::string& where) {
    if (!std::isfinite(x) || !std::isfinite(y))
      throw DataError(where + ": coordinates must be finite");
    if (label.empty()) throw DataError(where + ": empty category label");
    auto [it, fresh] = ids_.emplace(label, static_cast<int>(ds_.labels.size()));
    if (fresh) ds_.labels.push_back(label);
    if (!seen_.insert({x, y, it->second}).second)
      throw DataError(where + ": duplicate point (" + label + ")");
    const int id = static_cast<int>(ds_.points.size());
    ds_.points.push_back({id, {x, y}, it->second});
  }

  void declare(const std::string& label, const std::string& where) {
    if (!ids_.emplace(label, static_cast<int>(ds_.labels.size())).second)
      throw DataError(where + ": duplicate category label '" + label + "'");
    ds_.labels.push_back(label);
  }

  Dataset finish() {
    if (ds_.points.empty()) throw DataError("dataset '" + ds_.name + "' has no points");
    return std::move(ds_);
  }

 private:
  Dataset ds_;
  std::map<std::string, int> ids_;
  std::set<std::tuple<double, double, int>> seen_;
};

inline double parse_number(const std::string& s, const std::string& where) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw DataError(where + ": not a number: '" + s + "'");
  return v;
}

inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

/// Rows "x<TAB>y<TAB>label". Blank lines and lines starting with '#' are
/// ignored.
inline Dataset parse_tsv(const std::string& text, const std::string& name = "dataset") {
  detail::DatasetBuilder b(name);
  std::istringstream in(text);
  std::string line;
  for (int no = 1; std::getline(in, line); ++no) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::size_t start = 0;
    for (std::size_t tab; (tab = line.find('\t', start)) != std::string::npos; start = tab + 1)
      cols.push_back(line.substr(start, tab - start));
    cols.push_back(line.substr(start));
    const std::string where = name + ":" + std::to_string(no);
    if (cols.size() != 3) throw DataError(where + ": expected 3 tab-separated columns");
    b.add(detail::parse_number(cols[0], where), detail::parse_number(cols[1], where), cols[2],
          where);
  }
  return b.finish();
}

inline std::string to_tsv(const Dataset& ds) {
  std::string out;
  for (const CategoricalPoint& p : ds.points)
    out += detail::fmt17(p.pos.x) + '\t' + detail::fmt17(p.pos.y) + '\t' +
           ds.labels[p.category] + '\n';
  return out;
}

inline Json points_json(const Dataset& ds) {
  Json pts = Json::array();
  for (const CategoricalPoint& p : ds.points)
    pts.push_back({{"id", p.id}, {"x", p.pos.x}, {"y", p.pos.y},
                   {"category", ds.labels[p.category]}});
  return pts;
}

inline Json dataset_json(const Dataset& ds) {
  return {{"format", "setshapes-points"},
          {"version", 1},
          {"name", ds.name},
          {"categories", ds.labels},
          {"points", points_json(ds)}};
}

namespace detail {

inline Dataset dataset_from_json(const Json& j, const std::string& name) {
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
    throw DataError(name + ": missing 'points' array");
  DatasetBuilder b(j.value("name", name));
  // Declared categories keep their order even if unused by the points.
  if (j.contains("categories"))
    for (const std::string& label : j["categories"].get<std::vector<std::string>>())
      b.declare(label, name);
  std::size_t k = 0;
  for (const Json& p : j["points"]) {
    const std::string where = name + ": point " + std::to_string(k);
    if (p.contains("id") && p["id"].get<long>() != static_cast<long>(k))
      throw DataError(where + ": ids must be 0..n-1 in order");
    b.add(p.at("x").get<double>(), p.at("y").get<double>(),
          p.at("category").get<std::string>(), where);
    ++k;
  }
  return b.finish();
}

}  // namespace detail

inline Dataset parse_dataset_json(const std::string& text, const std::string& name = "dataset") {
  try {
    return detail::dataset_from_json(Json::parse(text), name);
  } catch (const Json::exception& e) {
    throw DataError(name + ": " + e.what());
  }
}

/// Reads a dataset; `format` is "tsv", "json" or "auto" (by extension).
inline Dataset read_dataset(const std::string& path, std::string format = "auto") {
  if (format == "auto") {
    const auto dot = path.rfind('.');
    format = dot != std::string::npos && path.substr(dot) == ".json" ? "json" : "tsv";
  }
  const std::string text = detail::read_file(path);
  if (format == "tsv") return parse_tsv(text, detail::stem(path));
  if (format == "json") return parse_dataset_json(text, detail::stem(path));
  throw UsageError("unknown dataset format '" + format + "'");
}

// ---------------------------------------------------------------------------
// Filtrations

inline Json filtration_json(const Filtration& f, const std::vector<std::string>& labels) {
  Json merges = Json::array();
  for (const Merge& m : f.merges) {
    const Pattern& t = f.patterns[m.target];
    merges.push_back({{"time", m.time},
                      {"effective_time", m.effective_time},
                      {"source_ids", {m.source1, m.source2}},
                      {"target", {{"id", m.target},
                                  {"kind", kind_name(t.kind)},
                                  {"point_ids", t.points}}}});
  }
  Dataset ds{"", f.points, labels};
  return {{"format", "setshapes-filtration"},
          {"version", 1},
          {"config", {{"rd", f.config.rd},
                      {"intersection_delay", f.config.intersection_delay},
                      {"max_turn_deg", f.config.limits.max_turn * 180.0 / geo::kPi},
                      {"max_total_turn_deg", f.config.limits.max_total_turn * 180.0 / geo::kPi},
                      {"max_bends", f.config.limits.max_bends}}},
          {"categories", labels},
          {"points", points_json(ds)},
          {"merges", merges}};
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

struct LoadedFiltration {
  Filtration filtration;
  Dataset dataset;
};

inline LoadedFiltration parse_filtration(const std::string& text,
                                         const std::string& name = "filtration") {
  try {
    const Json j = Json::parse(text);
    if (j.value("format", "") != "setshapes-filtration")
      throw DataError(name + ": not a filtration document");
    if (j.value("version", 0) != 1) throw DataError(name + ": unsupported version");
    LoadedFiltration out;
    out.dataset = detail::dataset_from_json(j, name);
    Filtration& f = out.filtration;
    const Json& c = j.at("config");
    f.config.rd = c.at("rd").get<double>();
    f.config.intersection_delay = c.at("intersection_delay").get<bool>();
    f.config.limits.max_turn = c.at("max_turn_deg").get<double>() * geo::kPi / 180.0;
    f.config.limits.max_total_turn = c.at("max_total_turn_deg").get<double>() * geo::kPi / 180.0;
    f.config.limits.max_bends = c.at("max_bends").get<int>();
    f.points = out.dataset.points;
    for (const CategoricalPoint& p : f.points) f.patterns.push_back(make_singleton(p));
    const int n = static_cast<int>(f.points.size());
    for (const Json& m : j.at("merges")) {
      Merge mg;
      mg.time = m.at("time").get<double>();
      mg.effective_time = m.at("effective_time").get<double>();
      const auto src = m.at("source_ids").get<std::vector<int>>();
      const Json& t = m.at("target");
      mg.target = t.at("id").get<int>();
      if (src.size() != 2 || mg.target != static_cast<int>(f.patterns.size()))
        throw DataError(name + ": malformed merge");
      mg.source1 = src[0];
      mg.source2 = src[1];
      for (int s : src)
        if (s < 0 || s >= mg.target) throw DataError(name + ": merge source out of range");
      const auto ids = t.at("point_ids").get<std::vector<int>>();
      for (int id : ids)
        if (id < 0 || id >= n) throw DataError(name + ": point id out of range");
      const std::string kind = t.at("kind").get<std::string>();
      const int cat = f.points[ids.at(0)].category;
      if (kind == "bank") {
        f.patterns.push_back(make_bank(cat, ids, f.points));
      } else if (kind == "island") {
        f.patterns.push_back(make_island(cat, ids, f.points));
      } else {
        throw DataError(name + ": unknown pattern kind '" + kind + "'");
      }
      f.merges.push_back(mg);
    }
    return out;
  } catch (const Json::exception& e) {
    throw DataError(name + ": " + e.what());
  }
}

inline LoadedFiltration read_filtration(const std::string& path) {
  return parse_filtration(detail::read_file(path), detail::stem(path));
}

// ---------------------------------------------------------------------------
// Styles

/// Style document: optional sizes and colors plus a color entry for every
/// category label:
///   {"background": "#ffffff", "point_radius": 0.3,
///    "categories": {"mill": {"fill": "#f5c97a", "stroke": "#e69f00"}}}
/// Sizes left out are derived from rd.
inline RenderStyle parse_style(const std::string& text, const std::vector<std::string>& labels,
                               double rd) {
  RenderStyle s = default_style(static_cast<int>(labels.size()), rd);
  try {
    const Json j = Json::parse(text);
    s.background = j.value("background", s.background);
    s.point_outline = j.value("point_outline", s.point_outline);
    s.point_radius = j.value("point_radius", s.point_radius);
    s.stroke_width = j.value("stroke_width", s.stroke_width);
    s.padding = j.value("padding", s.padding);
    const Json& cats = j.at("categories");
    for (std::size_t c = 0; c < labels.size(); ++c) {
      if (!cats.contains(labels[c]))
        throw DataError("style has no color for category '" + labels[c] + "'");
      const Json& e = cats[labels[c]];
      s.palette[c].stroke = e.at("stroke").get<std::string>();
      s.palette[c].fill = e.value("fill", detail::tint(s.palette[c].stroke, 0.45));
    }
  } catch (const Json::exception& e) {
    throw DataError(std::string("style: ") + e.what());
  }
  for (const CategoryColors& c : s.palette) {
    detail::parse_hex(c.fill);
    detail::parse_hex(c.stroke);
  }
  detail::parse_hex(s.background);
  detail::parse_hex(s.point_outline);
  if (!(s.point_radius > 0) || !(s.stroke_width >= 0) || !(s.padding >= 0))
    throw DataError("style sizes must be non-negative");
  return s;
}

// ---------------------------------------------------------------------------
// Metrics

inline Json metrics_json(const MetricsReport& r) {
  auto am = [](const AvgMax& a) { return Json{{"avg", a.avg}, {"max", a.max}}; };
  Json shapes = Json::array();
  for (const ShapeMetrics& m : r.per_shape)
    shapes.push_back({{"inflections", m.inflections},
                      {"perimeter_ratio", m.perimeter_ratio},
                      {"area_ratio", m.area_ratio},
                      {"curvature", m.curvature}});
  return {{"inflections", r.inflections},
          {"perimeter_ratio", am(r.perimeter_ratio)},
          {"area_ratio", am(r.area_ratio)},
          {"curvature", am(r.curvature)},
          {"shapes", r.shapes},
          {"covered_area_pct", r.covered_area_pct},
          {"density_distortion", am(r.density_distortion)},
          {"cover_radius", am(r.cover_radius)},
          {"per_set_distortion", r.per_set_distortion},
          {"per_shape", shapes}};
}

// ---------------------------------------------------------------------------
// Stacking (debug dump)

inline Json stacking_json(const StackingResult& st) {
  auto name = [](Order o) {
    return o == Order::kAbove ? "above" : o == Order::kBelow ? "below" : "equal";
  };
  Json rel = Json::array();
  for (const StackingRelation& r : st.relations)
    rel.push_back({{"i", r.i},
                   {"j", r.j},
                   {"component", r.component},
                   {"preferred", name(r.preferred)},
                   {"rule", r.rule},
                   {"value", name(r.value)},
                   {"flipped", r.flipped}});
  Json faces = Json::array();
  for (std::size_t f = 0; f < st.face_order.size(); ++f)
    if (st.face_order[f].size() > 1)
      faces.push_back({{"face", f}, {"order", st.face_order[f]}});
  return {{"relations", rel}, {"hyperedges", st.hyperedges}, {"flips", st.flips},
          {"face_orders", faces}};
}

}  // namespace setshapes
