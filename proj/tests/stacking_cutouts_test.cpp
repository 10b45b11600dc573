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

#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "filtration_oracle.hpp"
#include "oracles.hpp"
#include "overlap_fixtures.hpp"
#include "stacking_oracle.hpp"
#include "setshapes/cutouts.hpp"
#include "setshapes/pipeline.hpp"
#include "setshapes/stacking.hpp"

namespace {

using namespace setshapes;
using geo::kPi;

std::vector<CategoricalPoint> with_categories(const std::vector<std::pair<Point, int>>& v) {
  std::vector<CategoricalPoint> pts;
  for (const auto& [p, c] : v) pts.push_back({static_cast<int>(pts.size()), p, c});
  return pts;
}

StackingInput input(const std::vector<Pattern>& patterns, const std::vector<CategoricalPoint>& pts,
                    double rd = 1.0) {
  return prepare_stacking(patterns, pts, rd);
}

// --- components -------------------------------------------------------------

TEST(Components, DisjointShapesHaveNone) {
  const auto pts = with_categories({{{0, 0}, 0}, {{5, 0}, 1}});
  const auto in = input({make_singleton(pts[0]), make_singleton(pts[1])}, pts);
  const Components c = compute_components(*in.arrangement);
  EXPECT_TRUE(c.pairs.empty());
  EXPECT_TRUE(c.singles.empty());
}

TEST(Components, LensIsOneComponentOfOneFace) {
  const auto pts = with_categories({{{0, 0}, 0}, {{1.5, 0}, 1}});
  const auto in = input({make_singleton(pts[0]), make_singleton(pts[1])}, pts);
  const Components c = compute_components(*in.arrangement);
  ASSERT_EQ(c.pairs.size(), 1u);
  EXPECT_EQ(c.pairs[0].faces.size(), 1u);
  EXPECT_EQ(c.singles.size(), 2u);
}

TEST(Components, TripleFaceJoinsThreePairComponents) {
  const auto pts = with_categories({{{0, 0}, 0}, {{1.2, 0}, 1}, {{0.6, 1.0}, 2}});
  const auto in = input(
      {make_singleton(pts[0]), make_singleton(pts[1]), make_singleton(pts[2])}, pts);
  const geo::Arrangement& arr = *in.arrangement;
  const Components c = compute_components(arr);
  ASSERT_EQ(c.pairs.size(), 3u);
  int triple = -1;
  for (const geo::Face& f : arr.faces())
    if (f.shapes.size() == 3) triple = f.id;
  ASSERT_GE(triple, 0);
  for (const OverlapComponent& p : c.pairs)
    EXPECT_TRUE(std::binary_search(p.faces.begin(), p.faces.end(), triple));
}

TEST(Components, TwoSeparateLensesAreTwoComponents) {
  // A long bank crossed twice by a U-shaped bank of another category.
  const auto pts = with_categories(
      {{{0, 0}, 0}, {{6, 0}, 0}, {{1, 2}, 1}, {{1, -2}, 1}, {{5, -2}, 1}, {{5, 2}, 1}});
  const auto in = input({make_bank(0, {0, 1}, pts), make_bank(1, {2, 3, 4, 5}, pts)}, pts, 0.6);
  const Components c = compute_components(*in.arrangement);
  EXPECT_EQ(c.pairs.size(), 2u);
}

// --- preferences ----------------------------------------------------------------

Order preference(const StackingInput& in) {
  const Components c = compute_components(*in.arrangement);
  EXPECT_EQ(c.pairs.size(), 1u);
  return pairwise_preference(in, c.pairs.at(0)).first;
}

TEST(Preference, PointsOnlyOfJInsidePutJOnTop) {
  const auto pts = with_categories({{{-2, 0.8}, 0}, {{2, 0.8}, 0}, {{0, 0}, 1}});
  const auto in = input({make_bank(0, {0, 1}, pts), make_singleton(pts[2])}, pts);
  const Components c = compute_components(*in.arrangement);
  ASSERT_EQ(c.pairs.size(), 1u);
  const auto [order, rule] = pairwise_preference(in, c.pairs[0]);
  EXPECT_EQ(order, Order::kBelow);
  EXPECT_EQ(rule, 1);
  // The chosen order needs no cut-outs at all.
  const Drawing d = draw_patterns(in.patterns, pts, 1.0);
  for (const Modification& m : d.modified.modifications) EXPECT_TRUE(m.cuts.empty());
  for (std::size_t k = 0; k < in.dilated.size(); ++k)
    EXPECT_NEAR(d.modified.shapes[k].area(), in.dilated[k].area(), 1e-12);
}

TEST(Preference, SymmetricEmptyOverlapIsEqual) {
  const auto pts = with_categories({{{0, 0}, 0}, {{1.5, 0}, 1}});
  EXPECT_EQ(preference(input({make_singleton(pts[0]), make_singleton(pts[1])}, pts)),
            Order::kEqual);
}

TEST(Preference, CutOnSegmentBeatsCutOnArc) {
  const auto pts = with_categories({{{0, 0}, 0}, {{5, 0}, 0}, {{10, 0}, 0}, {{5, 0.9}, 1}});
  const auto in = input({make_bank(0, {0, 1, 2}, pts), make_singleton(pts[3])}, pts);
  const Components c = compute_components(*in.arrangement);
  ASSERT_EQ(c.pairs.size(), 1u);
  const auto [order, rule] = pairwise_preference(in, c.pairs[0]);
  EXPECT_EQ(order, Order::kAbove);
  EXPECT_EQ(rule, 2);
}

TEST(Preference, LessCoveredArcGoesBelow) {
  // No points inside; the disk's arc inside the strip is shorter than the
  // strip's caps inside the disk would be, so the rule compares arc length.
  const auto pts = with_categories({{{0, 0}, 0}, {{4, 0}, 0}, {{2, 1.7}, 1}});
  const auto in = input({make_bank(0, {0, 1}, pts), make_singleton(pts[2])}, pts);
  const Components c = compute_components(*in.arrangement);
  ASSERT_EQ(c.pairs.size(), 1u);
  const auto [order, rule] = pairwise_preference(in, c.pairs[0]);
  EXPECT_EQ(rule, 3);
  // Shape 0 has no arc inside the disk (its boundary there is straight); the
  // disk has an arc inside the strip. Keeping the disk's arc visible wins.
  EXPECT_EQ(order, Order::kBelow);
}

// --- hypergraph -------------------------------------------------------------------

TEST(Hypergraph, SingleRelationsAreTheirOwnEdges) {
  const auto h = build_hypergraph({{}, {0}, {1}, {2}});
  EXPECT_EQ(h.size(), 3u);
}

TEST(Hypergraph, TripleFaceAbsorbsPairFaces) {
  const auto h = build_hypergraph({{0, 1, 2}, {0, 1}, {1, 2}, {0}, {2}});
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h[0], (std::vector<int>{0, 1, 2}));
}

TEST(Hypergraph, OnlyMaximalSetsKept) {
  const auto h = build_hypergraph({{1, 3}, {1, 3, 4}, {2}, {2, 5}, {1, 3}});
  EXPECT_EQ(h, (std::vector<std::vector<int>>{{1, 3, 4}, {2, 5}}));
}

// --- hyperedge resolution ---------------------------------------------------------

StackingRelation rel(int i, int j, Order pref, int rule, int comp) {
  StackingRelation r;
  r.i = i;
  r.j = j;
  r.preferred = pref;
  r.rule = rule;
  r.component = comp;
  return r;
}

using oracle::brute_force_min_flips;
using oracle::values_acyclic;

TEST(ResolveHyperedge, SingleRelationUnchanged) {
  std::vector<StackingRelation> r{rel(0, 1, Order::kAbove, 1, 0)};
  std::vector<char> fixed(1, 0);
  int flips = 0;
  ASSERT_TRUE(resolve_hyperedge({0}, r, fixed, flips, {0, 1}));
  EXPECT_EQ(r[0].value, Order::kAbove);
  EXPECT_EQ(flips, 0);
}

TEST(ResolveHyperedge, ChainFixesTheEqualPair) {
  std::vector<StackingRelation> r{rel(0, 1, Order::kAbove, 1, 0), rel(1, 2, Order::kAbove, 1, 1),
                                  rel(0, 2, Order::kEqual, 0, 2)};
  std::vector<char> fixed(3, 0);
  int flips = 0;
  ASSERT_TRUE(resolve_hyperedge({0, 1, 2}, r, fixed, flips, {2, 1, 0}));
  EXPECT_EQ(r[2].value, Order::kAbove);
  EXPECT_EQ(flips, 0);
}

TEST(ResolveHyperedge, ThreeCycleFlipsExactlyTheWeakestEdge) {
  // 0 > 1 (rule 1), 1 > 2 (rule 2), 2 > 0 (rule 3).
  std::vector<StackingRelation> r{rel(0, 1, Order::kAbove, 1, 0), rel(1, 2, Order::kAbove, 2, 1),
                                  rel(0, 2, Order::kBelow, 3, 2)};
  ASSERT_EQ(brute_force_min_flips(r, 3), 1);
  std::vector<char> fixed(3, 0);
  int flips = 0;
  ASSERT_TRUE(resolve_hyperedge({0, 1, 2}, r, fixed, flips, {0, 1, 2}));
  EXPECT_EQ(flips, 1);
  EXPECT_TRUE(r[2].flipped);
  EXPECT_FALSE(r[0].flipped);
  EXPECT_FALSE(r[1].flipped);
  EXPECT_TRUE(values_acyclic(r, 3));
}

TEST(ResolveHyperedge, MinimalFlipsOnRandomTournaments) {
  std::mt19937 rng(6);
  std::uniform_int_distribution<int> pref(-1, 1), rule(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 5;
    std::vector<StackingRelation> r;
    std::vector<int> edge;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        const int p = pref(rng);
        edge.push_back(static_cast<int>(r.size()));
        r.push_back(rel(a, b, static_cast<Order>(p), p == 0 ? 0 : rule(rng), static_cast<int>(r.size())));
      }
    const int want = brute_force_min_flips(r, n);
    std::vector<char> fixed(r.size(), 0);
    int flips = 0;
    ASSERT_TRUE(resolve_hyperedge(edge, r, fixed, flips, {0, 1, 2, 3, 4}));
    EXPECT_EQ(flips, want) << "trial " << trial;
    EXPECT_TRUE(values_acyclic(r, n));
    for (const auto& s : r) EXPECT_NE(s.value, Order::kEqual);
  }
}

TEST(ResolveHyperedge, HardCycleIsReported) {
  std::vector<StackingRelation> r{rel(0, 1, Order::kAbove, 1, 0), rel(1, 2, Order::kAbove, 1, 1),
                                  rel(0, 2, Order::kBelow, 1, 2)};
  for (auto& s : r) s.value = s.preferred;
  std::vector<char> fixed(3, 1);
  int flips = 0;
  EXPECT_FALSE(resolve_hyperedge({0, 1, 2}, r, fixed, flips, {0, 1, 2}));
}

TEST(ResolveHyperedge, TooEntangledBeyondTheCap) {
  // A 13-cycle of preferences: one flip would do, but the brute force is capped.
  std::vector<StackingRelation> r;
  std::vector<int> edge;
  for (int k = 0; k < 13; ++k) {
    edge.push_back(k);
    r.push_back(rel(std::min(k, (k + 1) % 13), std::max(k, (k + 1) % 13),
                    k < 12 ? Order::kAbove : Order::kBelow, 1, k));
  }
  std::vector<char> fixed(r.size(), 0);
  int flips = 0;
  std::vector<int> rank(13);
  std::iota(rank.begin(), rank.end(), 0);
  try {
    resolve_hyperedge(edge, r, fixed, flips, rank);
    FAIL() << "expected an error";
  } catch (const GeometryError& e) {
    EXPECT_STREQ(e.what(), "stacking too entangled");
  }
}

// --- face orders --------------------------------------------------------------------

TEST(FaceOrders, SingleShapeFace) {
  const auto pts = with_categories({{{0, 0}, 0}, {{1.5, 0}, 1}, {{9, 9}, 2}});
  const auto in = input(
      {make_singleton(pts[0]), make_singleton(pts[1]), make_singleton(pts[2])}, pts);
  const StackingResult st = compute_stacking(in);
  EXPECT_EQ(st.face_order[in.arrangement->locate({9, 9})], std::vector<int>{2});
  EXPECT_EQ(oracle::check_face_orders(in, st), "");
}

TEST(FaceOrders, ConsistentOnRandomDrawings) {
  std::mt19937 rng(44);
  for (int trial = 0; trial < 8; ++trial) {
    const auto pts = oracle::random_instance(rng, 40, 4);
    PartitionConfig cfg;
    const Filtration f = run_simulation(pts, cfg);
    const Drawing d = draw_at(f, 1.5);
    EXPECT_EQ(oracle::check_face_orders(d.stacking, d.order), "");
  }
}

// --- grown disks ----------------------------------------------------------------------

TEST(GrowDisks, IsolatedRedStopsAtRc) {
  const auto prm = SmoothingParams::from_rd(1.0);
  const GrownDisks g = grow_disks({{0, 0}}, {{10, 0}}, prm);
  EXPECT_DOUBLE_EQ(g.exclusion[0].radius, 0.625);
  EXPECT_DOUBLE_EQ(g.inclusion[0].radius, 1.0);
}

TEST(GrowDisks, RedAndGreenMeetHalfway) {
  const auto prm = SmoothingParams::from_rd(1.0);
  const GrownDisks g = grow_disks({{0, 0}}, {{1.0, 0}}, prm);
  EXPECT_DOUBLE_EQ(g.exclusion[0].radius, 0.5);
  EXPECT_DOUBLE_EQ(g.inclusion[0].radius, 0.5);
}

TEST(GrowDisks, GreenKeepsGrowingAfterRedStops) {
  // The red stops at r_c; the green continues until it touches it.
  const auto prm = SmoothingParams::from_rd(1.0);
  const GrownDisks g = grow_disks({{0, 0}}, {{1.5, 0}}, prm);
  EXPECT_DOUBLE_EQ(g.exclusion[0].radius, 0.625);
  EXPECT_DOUBLE_EQ(g.inclusion[0].radius, 0.875);
}

TEST(GrowDisks, CoincidentRedAndGreenThrow) {
  EXPECT_ANY_THROW(grow_disks({{1, 1}}, {{1, 1}}, SmoothingParams::from_rd(1.0)));
}

TEST(GrowDisks, RandomDisksAreDisjointCappedAndMaximal) {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(0, 4);
  const auto prm = SmoothingParams::from_rd(1.0);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Point> reds, greens;
    for (int k = 0; k < 6; ++k) reds.push_back({u(rng), u(rng)});
    for (int k = 0; k < 6; ++k) greens.push_back({u(rng), u(rng)});
    const GrownDisks g = grow_disks(reds, greens, prm);
    for (const auto& x : g.exclusion) EXPECT_LE(x.radius, prm.rc + 1e-12);
    for (const auto& y : g.inclusion) EXPECT_LE(y.radius, prm.rd + 1e-12);
    for (const auto& x : g.exclusion) {
      bool touches = std::abs(x.radius - prm.rc) < 1e-9;
      for (const auto& y : g.inclusion) {
        const double d = std::hypot(x.center.x - y.center.x, x.center.y - y.center.y);
        EXPECT_GE(d, x.radius + y.radius - 1e-9);
        touches = touches || std::abs(d - x.radius - y.radius) < 1e-9;
      }
      EXPECT_TRUE(touches);
    }
    for (const auto& y : g.inclusion) {
      bool touches = std::abs(y.radius - prm.rd) < 1e-9;
      for (const auto& x : g.exclusion) {
        const double d = std::hypot(x.center.x - y.center.x, x.center.y - y.center.y);
        touches = touches || std::abs(d - x.radius - y.radius) < 1e-9;
      }
      EXPECT_TRUE(touches);
    }
  }
}

// --- cut regions ------------------------------------------------------------------------

geo::ArcShape rect(double x0, double y0, double x1, double y1) {
  return geo::polygon_shape({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

TEST(CutRegions, FarCandidateIsItsOwnDisk) {
  const auto prm = SmoothingParams::from_rd(1.0);
  const geo::ArcShape shape = rect(0, 0, 10, 4);
  GrownDisks g;
  g.exclusion = {{{5, 3.8}, 0.5}};
  const auto cuts = group_cut_regions(g, shape, shape, prm);
  ASSERT_EQ(cuts.size(), 1u);
  EXPECT_NEAR(cuts[0].area(), kPi * 0.25, 1e-12);
}

TEST(CutRegions, OverlappingExpansionsMergeIntoAHull) {
  const auto prm = SmoothingParams::from_rd(1.0);
  const geo::ArcShape shape = rect(0, 0, 10, 4);
  GrownDisks g;
  g.exclusion = {{{4, 3.8}, 0.5}, {{5.2, 3.8}, 0.5}};  // gap 0.2 < 2 r_s
  const auto cuts = group_cut_regions(g, shape, shape, prm);
  ASSERT_EQ(cuts.size(), 1u);
  EXPECT_NEAR(cuts[0].area(), kPi * 0.25 + 1.2 * 1.0, 1e-9);
}

TEST(CutRegions, DisksOnAnArcAreCutSeparately) {
  const auto prm = SmoothingParams::from_rd(1.0);
  const geo::ArcShape shape = geo::disk_shape({{0, 0}, 3});
  GrownDisks g;
  g.exclusion = {{{2.8, 0.6}, 0.5}, {{2.8, -0.6}, 0.5}};
  const auto cuts = group_cut_regions(g, shape, shape, prm);
  EXPECT_EQ(cuts.size(), 2u);
}

TEST(CutRegions, InclusionDisksAreNeverCut) {
  const auto prm = SmoothingParams::from_rd(1.0);
  const geo::ArcShape shape = rect(0, 0, 10, 4);
  GrownDisks g;
  g.exclusion = {{{5, 3.8}, 0.5}};
  g.inclusion = {{{5.7, 3.8}, 0.3}};
  const auto cuts = group_cut_regions(g, shape, shape, prm);
  ASSERT_EQ(cuts.size(), 1u);
  EXPECT_NEAR(geo::intersect(cuts[0], geo::disk_shape(g.inclusion[0])).area(), 0.0, 1e-12);
}

TEST(CutRegions, EnclosedDiskGetsASlit) {
  const auto prm = SmoothingParams::from_rd(1.0);
  const geo::ArcShape shape = rect(0, 0, 10, 10);
  GrownDisks g;
  g.exclusion = {{{5, 5}, 0.5}};
  const auto cuts = group_cut_regions(g, shape, shape, prm);
  ASSERT_EQ(cuts.size(), 2u);
  // The slit reaches the boundary of the component.
  geo::ArcShape all = cuts[0];
  for (std::size_t k = 1; k < cuts.size(); ++k) all = geo::unite(all, cuts[k]);
  const geo::Box b = all.bbox();
  EXPECT_TRUE(b.min_x <= 1e-9 || b.min_y <= 1e-9 || b.max_x >= 10 - 1e-9 || b.max_y >= 10 - 1e-9);
}

// --- subtract and smooth ------------------------------------------------------------------

TEST(SubtractAndSmooth, NoCutsIsIdentity) {
  const geo::ArcShape shape = rect(0, 0, 10, 4);
  const auto out = subtract_and_smooth(shape, shape, {}, {}, SmoothingParams::from_rd(1.0));
  ASSERT_EQ(out.loops.size(), shape.loops.size());
  ASSERT_EQ(out.edge_count(), shape.edge_count());
  for (std::size_t k = 0; k < shape.loops[0].edges.size(); ++k) {
    EXPECT_EQ(out.loops[0].edges[k].a, shape.loops[0].edges[k].a);
    EXPECT_EQ(out.loops[0].edges[k].b, shape.loops[0].edges[k].b);
  }
}

// Minimum sampled curvature radius along the boundary, over the samples
// that satisfy `where`.
double min_curvature_radius(const geo::ArcShape& s, double h,
                            const std::function<bool(Point)>& where) {
  double best = 1e300;
  for (const auto& ring : oracle::flatten(s, h / 8)) {
    const auto pts = oracle::resample(ring, h);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Point q = pts[(i + 1) % pts.size()];
      if (where(q))
        best = std::min(best, oracle::sampled_radius(pts[i], q, pts[(i + 2) % pts.size()], h));
    }
  }
  return best;
}

TEST(SubtractAndSmooth, CircularCutInStraightEdgeGetsFillets) {
  const auto prm = SmoothingParams::from_rd(1.0);
  const geo::ArcShape shape = rect(0, 0, 10, 4);
  const geo::ArcShape cut = geo::disk_shape({{5, 4}, 1.0});
  const auto out = subtract_and_smooth(shape, shape, {cut}, {}, prm);
  // Fillets: near the cut no bend is tighter than r_s. The rectangle corners
  // far away stay sharp.
  EXPECT_GE(min_curvature_radius(out, 2e-3, [](Point q) { return q.x > 2 && q.x < 8 && q.y > 2; }),
            0.9 * prm.rs);
  // The bottom of the cut arc is unchanged.
  EXPECT_NEAR(out.boundary_distance({5, 3}), 0.0, 1e-9);
  EXPECT_FALSE(out.contains({5, 3.2}));
  // Outside the 2 r_s neighbourhood the boundary is the original one.
  for (double x : {0.5, 2.0, 3.5, 6.5, 8.0, 9.5})
    EXPECT_NEAR(out.boundary_distance({x, 4}), 0.0, 1e-12) << x;
  // Area: the rectangle minus the half disk, minus what the opening rounds
  // off at the two corners where the cut meets the edge. There the rolling
  // disk c touches the edge and the cut circle O from outside; the removed
  // piece is the triangle c, (c.x, 4), O minus the two sectors at c and O.
  const double R = 1.0, rs = prm.rs;
  const double cx = 5 - std::sqrt((R + rs) * (R + rs) - rs * rs), cy = 4 - rs;
  const double th = std::atan2(4 - cy, 5 - cx);
  const double corner = 0.5 * rs * (5 - cx) - 0.5 * rs * rs * (kPi / 2 - th) - 0.5 * R * R * th;
  EXPECT_NEAR(out.area(), 40 - kPi / 2 - 2 * corner, 1e-9);
}

// --- modify_all -----------------------------------------------------------------------------

int concave_runs(const geo::ArcShape& s) {
  int runs = 0;
  for (const auto& ring : oracle::flatten(s, 5e-3)) {
    const std::size_t n = ring.size();
    std::vector<int> sign(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Point p = ring[i], q = ring[(i + 1) % n], r = ring[(i + 2) % n];
      const double c = (q.x - p.x) * (r.y - q.y) - (q.y - p.y) * (r.x - q.x);
      sign[i] = c < -1e-12 ? -1 : (c > 1e-12 ? 1 : 0);
    }
    std::vector<int> nz;
    for (int v : sign)
      if (v != 0) nz.push_back(v);
    for (std::size_t i = 0; i < nz.size(); ++i)
      if (nz[i] < 0 && nz[(i + nz.size() - 1) % nz.size()] >= 0) ++runs;
  }
  return runs;
}

TEST(ModifyAll, NoOverlapsLeaveShapesUnchanged) {
  const auto pts = with_categories({{{0, 0}, 0}, {{5, 0}, 1}});
  const Drawing d = draw_patterns({make_singleton(pts[0]), make_singleton(pts[1])}, pts, 1.0);
  EXPECT_TRUE(d.modified.modifications.empty());
  for (std::size_t k = 0; k < 2; ++k)
    EXPECT_EQ(d.modified.shapes[k].edge_count(), d.stacking.dilated[k].edge_count());
}

TEST(ModifyAll, OneForeignPointMakesOneNotch) {
  // Both patterns have a point in the overlap; the horizontal bank only cuts
  // around a point near its straight edge, the vertical one would cut its
  // bottom cap, so the horizontal bank goes on top and gets a notch.
  const auto pts = with_categories(
      {{{0, 0}, 0}, {{3, 0}, 0}, {{6, 0}, 0}, {{3, 0.7}, 1}, {{3, 3}, 1}});
  const Drawing d =
      draw_patterns({make_bank(0, {0, 1, 2}, pts), make_bank(1, {3, 4}, pts)}, pts, 1.0);
  ASSERT_EQ(d.order.relations.size(), 1u);
  EXPECT_EQ(d.order.relations[0].value, Order::kAbove);
  EXPECT_EQ(d.order.relations[0].rule, 2);
  EXPECT_EQ(concave_runs(d.stacking.dilated[0]), 0);
  EXPECT_EQ(concave_runs(d.modified.shapes[0]), 1);
  EXPECT_EQ(d.modified.shapes[0].loops.size(), 1u);
  EXPECT_FALSE(d.modified.shapes[0].contains({3, 0.7}));
  EXPECT_TRUE(d.modified.shapes[0].contains({3, 0}));
  const auto vis = oracle::check_visibility(d, 1);
  EXPECT_EQ(vis.failures, "");
  EXPECT_EQ(vis.foreign_points, 1);
}

TEST(ModifyAll, ConstructedFixturesKeepPointsVisible) {
  std::mt19937 rng(1234);
  int foreign = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const auto fx = oracle::overlap_fixture(rng);
    const Drawing d = draw_patterns(fx.patterns, fx.points, fx.rd);
    const auto vis = oracle::check_visibility(d, trial);
    EXPECT_EQ(vis.failures, "") << "fixture " << trial;
    foreign += vis.foreign_points;
  }
  EXPECT_GT(foreign, 0);
}

TEST(ModifyAll, SmoothingIsLocalAndRound) {
  std::mt19937 rng(4321);
  int junctions = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const auto fx = oracle::overlap_fixture(rng);
    const Drawing d = draw_patterns(fx.patterns, fx.points, fx.rd);
    const auto st = oracle::check_smoothing(d);
    EXPECT_EQ(st.failures, "") << "fixture " << trial;
    junctions += st.junction_samples;
  }
  EXPECT_GT(junctions, 0);
}

}  // namespace
