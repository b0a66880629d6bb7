#include "kset/k_graph.hpp"

#include <gtest/gtest.h>

#include <set>

#include "kset/primal_ksets.hpp"
#include "test_support.hpp"

namespace kset {
namespace {

using testing::A;
using testing::B;
using testing::C;
using testing::D;
using testing::pt;
using testing::ptq;
using testing::q4;

std::set<std::pair<int, int>> edge_pairs(const KGraph& g) {
  std::set<std::pair<int, int>> out;
  for (const auto& e : g.edges) out.insert({e.p, e.q});
  return out;
}

TEST(KGraph, Q4LevelTwoIsStarAtD) {
  const Instance inst = q4();
  const KGraph g = build_G(inst, 2);
  EXPECT_EQ(g.t(), 3u);
  EXPECT_EQ(edge_pairs(g), (std::set<std::pair<int, int>>{{A, D}, {B, D}, {C, D}}));

  std::set<Point, bool (*)(const Point&, const Point&)> duals(
      [](const Point& p, const Point& q) { return p < q; });
  const Arrangement arr = build_arrangement(inst);
  for (const auto& e : g.edges) duals.insert(arr.vertex(e.dual_vertex).location);
  EXPECT_EQ(duals.size(), 3u);
  EXPECT_TRUE(duals.count(pt(1, 0)));
  EXPECT_TRUE(duals.count(ptq("-1/3", "-4/3")));
  EXPECT_TRUE(duals.count(pt(2, 1)));
  // the carrying lines y = x, y = -x/3 + 4/3, y = 2x - 1
  EXPECT_EQ(line_through(inst[A], inst[D]), (Line{1, 0}));
  EXPECT_EQ(line_through(inst[B], inst[D]), (Line{Rat(-1, 3), Rat(-4, 3)}));
  EXPECT_EQ(line_through(inst[C], inst[D]), (Line{2, 1}));
}

TEST(KGraph, Q4OtherLevels) {
  const Instance inst = q4();
  EXPECT_EQ(build_G(inst, 1).t(), 2u);
  const KGraph g3 = build_G(inst, 3);
  EXPECT_EQ(edge_pairs(g3), (std::set<std::pair<int, int>>{{A, B}}));
  EXPECT_THROW(build_G(inst, 0), BadK);
  EXPECT_THROW(build_G(inst, 4), BadK);
}

TEST(KGraph, CrossCheckCatchesForeignArrangement) {
  const Instance inst = q4();
  const Instance other({pt(0, 0), pt(4, 0), pt(2, -3), pt(1, 1)});
  EXPECT_THROW(build_G(inst, build_arrangement(other), 2), CrossCheckMismatch);
}

TEST(CrossingNumber, Examples) {
  EXPECT_EQ(crossing_number(build_G(q4(), 2)).x, 0u);

  const std::vector<Segment> x_shape{Segment(pt(0, 0), pt(2, 2)), Segment(pt(0, 2), pt(2, 0))};
  const auto xc = crossing_number(x_shape);
  EXPECT_EQ(xc.x, 1u);
  EXPECT_EQ(xc.records.front().at, pt(1, 1));

  // K4 on a convex quadrilateral: only the diagonals cross
  const std::vector<Point> quad{pt(0, 0), pt(3, 1), pt(4, 4), pt(1, 3)};
  std::vector<Segment> k4;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) k4.emplace_back(quad[i], quad[j]);
  EXPECT_EQ(crossing_number(k4).x, 1u);
}

TEST(CrossingLemma, Examples) {
  const auto q = crossing_lemma_check(3, 4, 0);
  EXPECT_FALSE(q.applicable);
  EXPECT_TRUE(q.holds);

  const auto easy = crossing_lemma_check(6, 10, 0);
  EXPECT_FALSE(easy.applicable);
  EXPECT_TRUE(easy.holds);

  const auto big = crossing_lemma_check(100, 20, 40);
  EXPECT_TRUE(big.applicable);
  EXPECT_EQ(big.threshold, Rat(625, 16));  // 10^6 / 25600 = 39.0625
  EXPECT_TRUE(big.holds);
  EXPECT_FALSE(crossing_lemma_check(100, 20, 39).holds);

  // t = 4n is still the easy case
  EXPECT_FALSE(crossing_lemma_check(80, 20, 0).applicable);
  EXPECT_TRUE(crossing_lemma_check(81, 20, 8).applicable);
}

TEST(CrossingToTangent, IncidenceSkeleton) {
  // segments on y = x and y = -x + 2 cross at (1,1)
  const Line l1 = line_through(pt(0, 0), pt(2, 2));
  const Line l2 = line_through(pt(0, 2), pt(2, 0));
  const Point at = intersect(l1, l2);
  EXPECT_EQ(at, pt(1, 1));
  EXPECT_EQ(point_form(l1), pt(1, 0));
  EXPECT_EQ(point_form(l2), pt(-1, -2));
  const Line dual = dualize_point(at);
  EXPECT_EQ(dual, (Line{1, 1}));  // y = x - 1
  EXPECT_EQ(side_of(dual, point_form(l1)), 0);
  EXPECT_EQ(side_of(dual, point_form(l2)), 0);
}

TEST(KGraphProperty, AgreesWithDualAndPrimalOracle) {
  for (const auto& inst : testing::random_instances(40, 3, 22, 400)) {
    const Arrangement arr = build_arrangement(inst);
    const auto sizes = arr.class_sizes();
    const PrimalOracle oracle(inst);
    for (int k = 1; k < inst.n(); ++k) {
      const KGraph g = build_G(inst, arr, k);
      EXPECT_EQ(g.t(), sizes[k - 1]);
      for (const auto& e : g.edges) EXPECT_EQ(static_cast<int>(oracle.above(e.p, e.q).size()), k - 1);
      // perturbing an edge line yields two k-sets above
      for (const auto& e : g.edges) {
        IndexSet with_p = oracle.above(e.p, e.q), with_q = oracle.above(e.p, e.q);
        with_p.push_back(e.p);
        with_q.push_back(e.q);
        std::sort(with_p.begin(), with_p.end());
        std::sort(with_q.begin(), with_q.end());
        EXPECT_TRUE(is_realizable(inst, with_p, Side::Above));
        EXPECT_TRUE(is_realizable(inst, with_q, Side::Above));
      }
    }
  }
}

TEST(KGraphProperty, NoCollinearEdges) {
  for (const auto& inst : testing::random_instances(20, 4, 20, 401)) {
    for (int k = 1; k < inst.n(); ++k) {
      const KGraph g = build_G(inst, k);
      std::set<std::pair<Rat, Rat>> lines;
      for (const auto& e : g.edges) {
        Line l = line_through(inst[e.p], inst[e.q]);
        EXPECT_TRUE(lines.insert({l.a, l.b}).second);
      }
    }
  }
}

TEST(KGraphProperty, CrossingsMapInjectivelyToTangents) {
  std::size_t crossings_seen = 0;
  for (const auto& inst : testing::random_instances(40, 6, 22, 402)) {
    const Arrangement arr = build_arrangement(inst);
    for (int k = 2; k < inst.n(); ++k) {
      const KGraph g = build_G(inst, arr, k);
      const auto cc = crossing_number(g);
      if (cc.x == 0) continue;
      crossings_seen += cc.x;
      const ChainSet cs = decompose_chains(arr, k);
      std::set<std::pair<int, int>> all;
      for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
          for (const auto& t : common_tangents(arr, cs, i, j)) all.insert({t.vertex_a, t.vertex_b});
      std::set<std::pair<int, int>> mapped;
      for (const auto& rec : cc.records) {
        Tangent t = crossing_to_tangent(rec, g, arr, cs);
        EXPECT_NE(t.chain_a, t.chain_b);
        EXPECT_EQ(t.line, rec.dual_tangent);
        EXPECT_TRUE(mapped.insert({t.vertex_a, t.vertex_b}).second);
        EXPECT_TRUE(all.count({t.vertex_a, t.vertex_b}));
      }
    }
  }
  EXPECT_GT(crossings_seen, 0u);
}

TEST(CrossingToTangent, RejectsEdgesWithoutDualVertices) {
  const Instance inst = q4();
  const Arrangement arr = build_arrangement(inst);
  KGraph g = build_primal_graph(inst, 2);
  const ChainSet cs = decompose_chains(arr, 2);
  CrossingRecord bogus{0, 1, pt(1, 1), dualize_point(pt(1, 1))};
  EXPECT_THROW(crossing_to_tangent(bogus, g, arr, cs), TangentViolation);
}

}  // namespace
}  // namespace kset
