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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "filtration_oracle.hpp"
#include "oracles.hpp"
#include "setshapes/io.hpp"
#include "setshapes/pipeline.hpp"

namespace {

using namespace setshapes;
namespace fs = std::filesystem;

std::string env(const char* name, const char* fallback) {
  const char* v = std::getenv(name);
  return v && *v ? v : fallback;
}

// --- datasets ------------------------------------------------------------------

TEST(Tsv, ThreeLinesDeduplicateCategories) {
  const Dataset ds = parse_tsv("0\t0\tb\n1\t0\ta\n2\t0.5\tb\n", "three");
  ASSERT_EQ(ds.points.size(), 3u);
  EXPECT_EQ(ds.labels, (std::vector<std::string>{"b", "a"}));
  EXPECT_EQ(ds.points[0].category, 0);
  EXPECT_EQ(ds.points[1].category, 1);
  EXPECT_EQ(ds.points[2].category, 0);
  EXPECT_EQ(ds.points[2].pos, (Point{2, 0.5}));
  EXPECT_EQ(ds.points[2].id, 2);
}

TEST(Tsv, CommentsBlankLinesAndCrlf) {
  const Dataset ds = parse_tsv("# x y label\n\n0\t0\tmill\r\n1\t1\tmill\r\n");
  EXPECT_EQ(ds.points.size(), 2u);
  EXPECT_EQ(ds.labels, std::vector<std::string>{"mill"});
}

TEST(Tsv, Errors) {
  EXPECT_THROW(parse_tsv(""), DataError);
  EXPECT_THROW(parse_tsv("# only a comment\n"), DataError);
  EXPECT_THROW(parse_tsv("0\t0\ta\n0\t0\ta\n"), DataError);
  EXPECT_NO_THROW(parse_tsv("0\t0\ta\n0\t0\tb\n"));
  EXPECT_THROW(parse_tsv("0\t0\n"), DataError);
  EXPECT_THROW(parse_tsv("0\tzero\ta\n"), DataError);
  EXPECT_THROW(parse_tsv("0\tnan\ta\n"), DataError);
  EXPECT_THROW(parse_tsv("0\t0\t\n"), DataError);
  try {
    parse_tsv("0\t0\ta\n1\t1\n", "bad");
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("bad:2"), std::string::npos) << e.what();
  }
}

TEST(Tsv, RoundTripIsIdentity) {
  std::mt19937 rng(3);
  const auto pts = oracle::random_instance(rng, 40, 4);
  Dataset ds;
  ds.points = pts;
  int cats = 0;
  for (const auto& p : pts) cats = std::max(cats, p.category + 1);
  for (int c = 0; c < cats; ++c) ds.labels.push_back("c" + std::to_string(c));
  // Labels are re-numbered by first appearance; compare through the labels.
  const Dataset back = parse_tsv(to_tsv(ds));
  ASSERT_EQ(back.points.size(), ds.points.size());
  for (std::size_t k = 0; k < pts.size(); ++k) {
    EXPECT_EQ(back.points[k].pos, ds.points[k].pos);
    EXPECT_EQ(back.labels[back.points[k].category], ds.labels[ds.points[k].category]);
  }
  EXPECT_EQ(to_tsv(parse_tsv(to_tsv(back))), to_tsv(back));
}

TEST(Tsv, FullPrecisionSurvives) {
  Dataset ds;
  ds.labels = {"a"};
  ds.points = {{0, {0.1, 1.0 / 3.0}, 0}, {1, {-1e-300, 123456789.123456789}, 0}};
  const Dataset back = parse_tsv(to_tsv(ds));
  EXPECT_EQ(back.points[0].pos, ds.points[0].pos);
  EXPECT_EQ(back.points[1].pos, ds.points[1].pos);
}

TEST(JsonDataset, RoundTripAndDeclaredCategories) {
  const Dataset ds = parse_tsv("0\t0\tb\n1\t0\ta\n2\t0.5\tb\n", "three");
  const Dataset back = parse_dataset_json(dump(dataset_json(ds)));
  EXPECT_EQ(back.name, "three");
  EXPECT_EQ(back.labels, ds.labels);
  ASSERT_EQ(back.points.size(), 3u);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_EQ(back.points[k].pos, ds.points[k].pos);
    EXPECT_EQ(back.points[k].category, ds.points[k].category);
  }
  const Dataset declared = parse_dataset_json(
      R"({"categories": ["x", "y"], "points": [{"x": 0, "y": 0, "category": "y"}]})");
  EXPECT_EQ(declared.labels, (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(declared.points[0].category, 1);
}

TEST(JsonDataset, Errors) {
  EXPECT_THROW(parse_dataset_json("{"), DataError);
  EXPECT_THROW(parse_dataset_json("{}"), DataError);
  EXPECT_THROW(parse_dataset_json(R"({"points": []})"), DataError);
  EXPECT_THROW(parse_dataset_json(R"({"points": [{"id": 1, "x": 0, "y": 0, "category": "a"}]})"),
               DataError);
  EXPECT_THROW(parse_dataset_json(R"({"points": [{"x": 0, "category": "a"}]})"), DataError);
}

// --- filtrations ---------------------------------------------------------------------

TEST(FiltrationFile, RoundTripIsByteIdentical) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    const auto pts = oracle::random_instance(rng, 40, 4);
    std::vector<std::string> labels;
    for (int c = 0; c < 4; ++c) labels.push_back("c" + std::to_string(c));
    PartitionConfig cfg;
    cfg.rd = 0.8;
    const Filtration f = run_simulation(pts, cfg);
    const std::string text = dump(filtration_json(f, labels));
    const LoadedFiltration lf = parse_filtration(text);
    EXPECT_EQ(dump(filtration_json(lf.filtration, lf.dataset.labels)), text);
    EXPECT_EQ(lf.filtration.config.rd, 0.8);
    for (double t : {0.0, 0.5, 1.0, 2.0, 4.0, 100.0})
      EXPECT_EQ(lf.filtration.partition_ids_at(t), f.partition_ids_at(t)) << t;
  }
}

TEST(FiltrationFile, Errors) {
  EXPECT_THROW(parse_filtration("[]"), DataError);
  EXPECT_THROW(parse_filtration(R"({"format": "other", "version": 1})"), DataError);
  std::mt19937 rng(2);
  const auto pts = oracle::random_instance(rng, 10, 2);
  const Filtration f = run_simulation(pts, PartitionConfig{});
  Json j = filtration_json(f, {"a", "b"});
  ASSERT_FALSE(j["merges"].empty());
  Json bad = j;
  bad["version"] = 2;
  EXPECT_THROW(parse_filtration(bad.dump()), DataError);
  bad = j;
  bad["merges"][0]["target"]["id"] = 999;
  EXPECT_THROW(parse_filtration(bad.dump()), DataError);
  bad = j;
  bad["merges"][0]["target"]["kind"] = "blob";
  EXPECT_THROW(parse_filtration(bad.dump()), DataError);
  bad = j;
  bad["merges"][0]["target"]["point_ids"] = std::vector<int>{0, 1000};
  EXPECT_THROW(parse_filtration(bad.dump()), DataError);
}

// --- styles -----------------------------------------------------------------------------

TEST(Style, ColorsByLabel) {
  const RenderStyle s = parse_style(
      R"({"background": "#000000", "categories": {"a": {"stroke": "#ff0000", "fill": "#00ff00"},
                                                   "b": {"stroke": "#0000ff"}}})",
      {"a", "b"}, 2.0);
  EXPECT_EQ(s.background, "#000000");
  EXPECT_EQ(s.palette[0].stroke, "#ff0000");
  EXPECT_EQ(s.palette[0].fill, "#00ff00");
  EXPECT_EQ(s.palette[1].stroke, "#0000ff");
  EXPECT_NE(s.palette[1].fill, "#0000ff");  // a lighter tint by default
  EXPECT_DOUBLE_EQ(s.point_radius, 2.0 / 3.0);
}

TEST(Style, Errors) {
  EXPECT_THROW(parse_style(R"({"categories": {"a": {"stroke": "#ff0000"}}})", {"a", "b"}, 1),
               DataError);
  EXPECT_THROW(parse_style(R"({"categories": {"a": {"stroke": "red"}}})", {"a"}, 1), DataError);
  EXPECT_THROW(parse_style(R"({"categories": {"a": {}}})", {"a"}, 1), DataError);
  EXPECT_THROW(parse_style("not json", {"a"}, 1), DataError);
  EXPECT_THROW(parse_style(R"({"point_radius": 0, "categories": {"a": {"stroke": "#ff0000"}}})",
                           {"a"}, 1),
               DataError);
}

// --- command line ---------------------------------------------------------------------------

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    cli_ = env("SETSHAPES_CLI", SETSHAPES_CLI_PATH);
    ASSERT_TRUE(fs::exists(cli_)) << cli_;
    dir_ = fs::temp_directory_path() /
           ("setshapes-cli-" + std::to_string(::getpid()) + "-" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override {
    if (!dir_.empty()) fs::remove_all(dir_);
  }

  // Runs the CLI with `args`; returns its exit code.
  int run(const std::string& args) const {
    const std::string cmd = "'" + cli_ + "' " + args + " >'" + (dir_ / "stdout").string() +
                            "' 2>'" + (dir_ / "stderr").string() + "'";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string read(const std::string& name) const { return detail::read_file(path(name)); }
  void write(const std::string& name, const std::string& text) const {
    detail::write_file(path(name), text);
  }
  std::string stdout_text() const { return read("stdout"); }

  std::string cli_;
  fs::path dir_;
};

const char* kSmall =
    "0\t0\ta\n1.2\t0\ta\n2.4\t0.3\ta\n0\t2\tb\n1\t2.5\tb\n3\t3\tc\n3.5\t3.4\tc\n5\t0\tb\n";

TEST_F(Cli, PartitionIsDeterministic) {
  write("small.tsv", kSmall);
  ASSERT_EQ(run("partition " + path("small.tsv") + " --rd 0.5 --out " + path("f1.json")), 0);
  ASSERT_EQ(run("partition " + path("small.tsv") + " --rd 0.5 --out " + path("f2.json")), 0);
  EXPECT_EQ(read("f1.json"), read("f2.json"));
  // stdout is the default destination.
  ASSERT_EQ(run("partition " + path("small.tsv") + " --rd 0.5"), 0);
  EXPECT_EQ(stdout_text(), read("f1.json"));
  const LoadedFiltration lf = read_filtration(path("f1.json"));
  EXPECT_EQ(lf.filtration.points.size(), 8u);
  EXPECT_EQ(lf.dataset.labels, (std::vector<std::string>{"a", "b", "c"}));
}

TEST_F(Cli, ExitCodes) {
  write("small.tsv", kSmall);
  write("dup.tsv", "0\t0\ta\n0\t0\ta\n");
  write("empty.tsv", "");
  EXPECT_EQ(run(""), 1);
  EXPECT_EQ(run("frobnicate"), 1);
  EXPECT_EQ(run("partition"), 1);
  EXPECT_EQ(run("partition " + path("small.tsv") + " --rd -1"), 1);
  EXPECT_EQ(run("partition " + path("small.tsv") + " --bogus"), 1);
  EXPECT_EQ(run("partition " + path("small.tsv") + " --format xml"), 1);
  EXPECT_EQ(run("partition " + path("missing.tsv")), 2);
  EXPECT_EQ(run("partition " + path("dup.tsv")), 2);
  EXPECT_EQ(run("partition " + path("empty.tsv")), 2);
  EXPECT_NE(read("stderr").find("no points"), std::string::npos);
  ASSERT_EQ(run("partition " + path("small.tsv") + " --rd 0.5 --out " + path("f.json")), 0);
  EXPECT_EQ(run("draw " + path("f.json") + " --t -1"), 1);
  EXPECT_EQ(run("metrics " + path("f.json") + " --format xml"), 1);
  EXPECT_EQ(run("draw " + path("small.tsv")), 2);  // not a filtration
  write("style.json", R"({"categories": {"a": {"stroke": "#ff0000"}}})");
  EXPECT_EQ(run("draw " + path("f.json") + " --style " + path("style.json")), 2);
  EXPECT_EQ(run("sweep " + path("small.tsv")), 1);
}

TEST_F(Cli, DrawAtZeroShowsOneDiskPerPoint) {
  write("small.tsv", kSmall);
  ASSERT_EQ(run("partition " + path("small.tsv") + " --rd 0.2 --out " + path("f.json")), 0);
  ASSERT_EQ(run("draw " + path("f.json") + " --t 0"), 0);
  const auto doc = oracle::parse_svg(stdout_text(), 1e-3);
  EXPECT_EQ(doc.circles.size(), 8u);
  EXPECT_EQ(doc.fills.size(), 8u);
}

TEST_F(Cli, DrawDefaultTimeIsThreeAndAHalfRd) {
  write("small.tsv", kSmall);
  ASSERT_EQ(run("partition " + path("small.tsv") + " --rd 0.5 --out " + path("f.json")), 0);
  ASSERT_EQ(run("draw " + path("f.json") + " --out " + path("default.svg")), 0);
  ASSERT_EQ(run("draw " + path("f.json") + " --t 1.75 --out " + path("explicit.svg")), 0);
  ASSERT_EQ(run("draw " + path("f.json") + " --t 0 --out " + path("zero.svg")), 0);
  EXPECT_EQ(read("default.svg"), read("explicit.svg"));
  EXPECT_NE(read("default.svg"), read("zero.svg"));
  ASSERT_EQ(run("draw " + path("f.json") + " --dump-stacking " + path("st.json") + " --out " +
                path("d.svg")),
            0);
  EXPECT_EQ(read("d.svg"), read("default.svg"));
  EXPECT_NO_THROW(EXPECT_FALSE(Json::parse(read("st.json")).is_discarded()));
}

TEST_F(Cli, MetricsOfSingletonsAreTrivial) {
  write("small.tsv", kSmall);
  ASSERT_EQ(run("partition " + path("small.tsv") + " --rd 0.2 --out " + path("f.json")), 0);
  ASSERT_EQ(run("metrics " + path("f.json") + " --t 0"), 0);
  const std::string csv = stdout_text();
  std::istringstream in(csv);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header, csv_header());
  // inflections, perimeter ratio avg/max, area ratio avg/max, curvature avg/max, shapes.
  EXPECT_EQ(row.rfind("0,1.000000,1.000000,1.000000,1.000000,0.000000,0.000000,8,", 0), 0u)
      << row;
  ASSERT_EQ(run("metrics " + path("f.json") + " --t 0"), 0);
  EXPECT_EQ(stdout_text(), csv);
  ASSERT_EQ(run("metrics " + path("f.json") + " --t 0 --format json"), 0);
  const Json j = Json::parse(stdout_text());
  EXPECT_EQ(j.at("shapes").get<int>(), 8);
}

TEST_F(Cli, SweepWritesFourDrawingsWithFewerShapesOverTime) {
  write("small.tsv", kSmall);
  ASSERT_EQ(run("sweep " + path("small.tsv") + " --rd 0.5 --out " + path("out")), 0);
  for (int k = 0; k < 4; ++k)
    EXPECT_TRUE(fs::exists(path("out/small-t" + std::to_string(k) + ".svg"))) << k;
  EXPECT_FALSE(fs::exists(path("out/small-t4.svg")));
  ASSERT_EQ(run("partition " + path("small.tsv") + " --rd 0.5 --out " + path("f.json")), 0);
  EXPECT_EQ(read("out/small.filtration.json"), read("f.json"));

  std::istringstream csv(read("out/small-metrics.csv"));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "t," + csv_header());
  std::vector<double> times;
  std::vector<int> shapes;
  while (std::getline(csv, line)) {
    std::vector<std::string> cols;
    std::stringstream s(line);
    for (std::string c; std::getline(s, c, ',');) cols.push_back(c);
    ASSERT_EQ(cols.size(), 14u);
    times.push_back(std::stod(cols[0]));
    shapes.push_back(std::stoi(cols[8]));
  }
  EXPECT_EQ(times, (std::vector<double>{1.25, 1.75, 2.25, 3.0}));
  ASSERT_EQ(shapes.size(), 4u);
  for (std::size_t k = 1; k < shapes.size(); ++k) EXPECT_LE(shapes[k], shapes[k - 1]);

  // Every SVG equals a separate draw of the same filtration.
  ASSERT_EQ(run("draw " + path("f.json") + " --t 2.25 --out " + path("d.svg")), 0);
  EXPECT_EQ(read("out/small-t2.svg"), read("d.svg"));
  // And the whole sweep is reproducible.
  ASSERT_EQ(run("sweep " + path("small.tsv") + " --rd 0.5 --out " + path("again")), 0);
  for (const char* f : {"small-t0.svg", "small-t3.svg", "small-metrics.csv"})
    EXPECT_EQ(read(std::string("out/") + f), read(std::string("again/") + f)) << f;
}

TEST_F(Cli, CustomTimesAndNoDelay) {
  write("small.tsv", kSmall);
  ASSERT_EQ(run("sweep " + path("small.tsv") + " --rd 0.5 --t 0 1 --no-intersection-delay --out " +
                path("out")),
            0);
  EXPECT_TRUE(fs::exists(path("out/small-t1.svg")));
  EXPECT_FALSE(fs::exists(path("out/small-t2.svg")));
  EXPECT_FALSE(read_filtration(path("out/small.filtration.json")).filtration.config.intersection_delay);
}

// The notch fixture: the horizontal bank lies on top of the vertical one,
// whose point (3, 0.7) is then cut free. The golden SVG was accepted after
// checking the colors below against the points' categories.
TEST_F(Cli, GoldenNotchDrawing) {
  const std::string golden = env("SETSHAPES_GOLDEN", SETSHAPES_GOLDEN_DIR);
  const std::string want_filtration = detail::read_file(golden + "/notch.filtration.json");
  const std::string want_svg = detail::read_file(golden + "/notch.svg");

  const auto doc = oracle::parse_svg(want_svg, 1e-3);
  const RenderStyle style = default_style(2, 1.0);
  // World (x, y) is SVG (x + 2, 5 - y): the shapes span [-1, 7] x [-1, 4],
  // padded by r_d = 1.
  auto at = [&](double x, double y) { return oracle::paint_at(doc, {x + 2, 5 - y}); };
  EXPECT_EQ(at(3, 0.7), style.palette[1].fill);   // foreign point shows its own color
  EXPECT_EQ(at(3, 0.4), style.palette[1].fill);
  EXPECT_EQ(at(3, 0.0), style.palette[0].fill);   // own point kept by its inclusion disk
  EXPECT_EQ(at(2.5, -0.5), style.palette[0].fill);  // bank on top elsewhere in the overlap
  EXPECT_EQ(at(3, 2.5), style.palette[1].fill);
  EXPECT_EQ(at(0, 0), style.palette[0].fill);
  EXPECT_EQ(at(0, 3), "");
  EXPECT_EQ(doc.circles.size(), 5u);

  ASSERT_EQ(run("partition " + golden + "/notch.tsv --rd 1 --out " + path("notch.json")), 0);
  EXPECT_EQ(read("notch.json"), want_filtration);
  ASSERT_EQ(run("draw " + path("notch.json") + " --out " + path("notch.svg")), 0);
  EXPECT_EQ(read("notch.svg"), want_svg);
}

}  // namespace
