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

// Command-line front end: partition a dataset, draw or measure a partition,
// and sweep over several times.
//
// Exit codes: 0 ok, 1 usage error, 2 data error, 3 geometry/internal error.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "setshapes/setshapes.hpp"

namespace {

using namespace setshapes;

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    detail::write_file(path, text);
  }
}

struct Options {
  std::string input;
  std::string format = "auto";
  double rd = 0.0;
  bool no_delay = false;
  std::vector<double> t;
  std::string style;
  std::string out;
  std::string dump_stacking;
};

double check_time(double t) {
  if (!(t >= 0)) throw UsageError("--t must be non-negative");
  return t;
}

Filtration partition(const Dataset& ds, const Options& o) {
  PartitionConfig cfg;
  cfg.rd = o.rd > 0 ? o.rd : default_rd(ds.points);
  cfg.intersection_delay = !o.no_delay;
  const auto start = std::chrono::steady_clock::now();
  Filtration f = run_simulation(ds.points, cfg);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  log::info("partitioned " + std::to_string(ds.points.size()) + " points with " +
            std::to_string(f.merges.size()) + " merges in " + std::to_string(ms) + " ms");
  return f;
}

RenderStyle style_for(const Options& o, const std::vector<std::string>& labels, double rd) {
  if (o.style.empty()) return default_style(static_cast<int>(labels.size()), rd);
  return parse_style(detail::read_file(o.style), labels, rd);
}

int cmd_partition(const Options& o) {
  const Dataset ds = read_dataset(o.input, o.format);
  emit(o.out, dump(filtration_json(partition(ds, o), ds.labels)));
  return 0;
}

int cmd_draw(const Options& o) {
  const LoadedFiltration lf = read_filtration(o.input);
  const double rd = lf.filtration.config.rd;
  const double t = o.t.empty() ? default_time(rd) : check_time(o.t.front());
  const Drawing d = draw_at(lf.filtration, t);
  if (!o.dump_stacking.empty()) emit(o.dump_stacking, dump(stacking_json(d.order)));
  emit(o.out, render_svg(d, style_for(o, lf.dataset.labels, rd)));
  return 0;
}

int cmd_metrics(const Options& o) {
  const LoadedFiltration lf = read_filtration(o.input);
  const double rd = lf.filtration.config.rd;
  const double t = o.t.empty() ? default_time(rd) : check_time(o.t.front());
  const MetricsReport r = measure(draw_at(lf.filtration, t));
  if (o.format == "json") {
    emit(o.out, dump(metrics_json(r)));
  } else if (o.format == "csv" || o.format == "auto") {
    emit(o.out, csv_header() + "\n" + csv_row(r) + "\n");
  } else {
    throw UsageError("unknown metrics format '" + o.format + "'");
  }
  return 0;
}

int cmd_sweep(const Options& o) {
  if (o.out.empty() || o.out == "-") throw UsageError("sweep needs --out DIR");
  const Dataset ds = read_dataset(o.input, o.format);
  const Filtration f = partition(ds, o);  // computed once for every t
  const double rd = f.config.rd;
  std::vector<double> times = o.t;
  if (times.empty())
    for (double k : {2.5, 3.5, 4.5, 6.0}) times.push_back(k * rd);
  for (double t : times) check_time(t);

  std::filesystem::create_directories(o.out);
  const std::filesystem::path dir(o.out);
  detail::write_file((dir / (ds.name + ".filtration.json")).string(),
                     dump(filtration_json(f, ds.labels)));
  const RenderStyle style = style_for(o, ds.labels, rd);
  std::string csv = "t," + csv_header() + "\n";
  for (std::size_t k = 0; k < times.size(); ++k) {
    const Drawing d = draw_at(f, times[k]);
    detail::write_file((dir / (ds.name + "-t" + std::to_string(k) + ".svg")).string(),
                       render_svg(d, style));
    csv += detail::num(times[k]) + "," + csv_row(measure(d)) + "\n";
  }
  detail::write_file((dir / (ds.name + "-metrics.csv")).string(), csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simple set shapes for categorical point data"};
  app.require_subcommand(1);
  Options o;

  auto input = [&](CLI::App* c, const char* what) {
    c->add_option("input", o.input, what)->required();
  };
  auto sizes = [&](CLI::App* c) {
    c->add_option("--rd", o.rd, "Dilation radius (default: 1/40 of the bounding-box diagonal)")
        ->check(CLI::PositiveNumber);
    c->add_flag("--no-intersection-delay", o.no_delay, "Disable the intersection delay");
  };

  CLI::App* part = app.add_subcommand("partition", "Compute the filtration of a dataset");
  input(part, "Dataset (TSV x<TAB>y<TAB>label, or JSON)");
  part->add_option("--format", o.format, "Dataset format: auto, tsv or json");
  sizes(part);
  part->add_option("--out", o.out, "Filtration file (default: stdout)");

  CLI::App* draw = app.add_subcommand("draw", "Render the partition at time t as SVG");
  input(draw, "Filtration file");
  draw->add_option("--t", o.t, "Time (default: 3.5 rd)")->expected(1);
  draw->add_option("--style", o.style, "Style file (JSON)");
  draw->add_option("--out", o.out, "SVG file (default: stdout)");
  draw->add_option("--dump-stacking", o.dump_stacking, "Write stacking relations as JSON");

  CLI::App* met = app.add_subcommand("metrics", "Measure the drawing at time t");
  input(met, "Filtration file");
  met->add_option("--t", o.t, "Time (default: 3.5 rd)")->expected(1);
  met->add_option("--format", o.format, "Output format: csv or json");
  met->add_option("--out", o.out, "Output file (default: stdout)");

  CLI::App* sweep = app.add_subcommand("sweep", "Draw and measure a dataset at several times");
  input(sweep, "Dataset (TSV or JSON)");
  sweep->add_option("--format", o.format, "Dataset format: auto, tsv or json");
  sizes(sweep);
  sweep->add_option("--t", o.t, "Times (default: 2.5, 3.5, 4.5 and 6 rd)");
  sweep->add_option("--style", o.style, "Style file (JSON)");
  sweep->add_option("--out", o.out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (part->parsed()) return cmd_partition(o);
    if (draw->parsed()) return cmd_draw(o);
    if (met->parsed()) return cmd_metrics(o);
    if (sweep->parsed()) return cmd_sweep(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return 2;
  } catch (const GeometryError& e) {
    std::cerr << "geometry error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 1;
}
