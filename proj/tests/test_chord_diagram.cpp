#include <gtest/gtest.h>

#include <map>

#include "ortho/chord_diagram.hpp"
#include "ortho/closed_forms.hpp"
#include "ortho/lim_solver.hpp"
#include "support.hpp"

namespace ortho {
namespace {

std::size_t parallel_edge_pairs(const MetricGraph& g) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> mult;
  for (const Edge& e : g.spec().edges) ++mult[{std::min(e.u, e.v), std::max(e.u, e.v)}];
  std::size_t pairs = 0;
  for (const auto& [key, count] : mult) pairs += count * (count - 1) / 2;
  return pairs;
}

TEST(RealizeGraph, SmallestCaseIsTheta) {
  const MetricGraph g = realize_graph({1, {1.0, 1.0}, {{0, 1}}, {1.0}});
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_count(), 3u);
  for (const Edge& e : g.spec().edges) EXPECT_NE(e.u, e.v);
  EXPECT_NEAR(volume_entropy(g).h, std::log(2.0), 1e-11);
}

TEST(RealizeGraph, ArcOrientationFollowsPointOrder) {
  const MetricGraph g = realize_graph({2, {1.0, 2.0, 3.0, 4.0}, {{0, 2}, {1, 3}}, {5.0, 6.0}});
  // Arc a runs from point a-1 to point a.
  EXPECT_EQ(g.spec().edges[0].u, 3u);
  EXPECT_EQ(g.spec().edges[0].v, 0u);
  EXPECT_EQ(g.spec().edges[2].u, 1u);
  EXPECT_EQ(g.spec().edges[2].v, 2u);
  EXPECT_EQ(g.spec().edges[4].u, 0u);
  EXPECT_EQ(g.spec().edges[4].v, 2u);
  EXPECT_DOUBLE_EQ(g.spec().edges[5].length, 6.0);
}

TEST(RealizeGraph, NestedAndCrossingMatchingsDiffer) {
  const MetricGraph nested = realize_graph({2, {1, 1, 1, 1}, {{0, 1}, {2, 3}}, {1, 1}});
  const MetricGraph crossing = realize_graph({2, {1, 1, 1, 1}, {{0, 2}, {1, 3}}, {1, 1}});
  for (std::size_t v = 0; v < 4; ++v) {
    EXPECT_EQ(nested.degree(v), 3u);
    EXPECT_EQ(crossing.degree(v), 3u);
  }
  EXPECT_EQ(parallel_edge_pairs(nested), 2u);
  EXPECT_EQ(parallel_edge_pairs(crossing), 0u);
}

TEST(RealizeGraph, DegreeAndBetti) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const ChordDiagram cd = random_chord_diagram(1 + seed % 8, seed);
    const MetricGraph g = realize_graph(cd);
    EXPECT_EQ(betti(g), cd.n + 1);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(g.degree(v), 3u);
  }
}

TEST(RealizeGraph, ShortArcApproachesBouquet) {
  const double target = bouquet_entropy(std::vector<double>{2.0, 1.0});
  double previous_gap = INFINITY;
  for (double eps : {1e-1, 1e-2, 1e-3, 1e-4}) {
    const double h = volume_entropy(realize_graph({1, {eps, 2.0 - eps}, {{0, 1}}, {1.0}})).h;
    const double gap = std::abs(h - target);
    EXPECT_LT(gap, previous_gap);
    previous_gap = gap;
  }
  EXPECT_LT(previous_gap, 1e-3);
}

TEST(RealizeGraph, RejectsMalformedDiagrams) {
  EXPECT_THROW(realize_graph({2, {1, 1, 1, 1}, {{0, 1}, {1, 2}}, {1, 1}}), InvalidSpec);
  EXPECT_THROW(realize_graph({2, {1, 1, 1, 1}, {{0, 0}, {2, 3}}, {1, 1}}), InvalidSpec);
  EXPECT_THROW(realize_graph({2, {1, 1, 1}, {{0, 1}, {2, 3}}, {1, 1}}), InvalidSpec);
  EXPECT_THROW(realize_graph({1, {1, 1}, {{0, 1}}, {0.0}}), InvalidSpec);
  EXPECT_THROW(realize_graph({1, {1, 1}, {{0, 4}}, {1.0}}), InvalidSpec);
}

TEST(RandomChordDiagram, SingleChordHasUniqueMatching) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ChordDiagram cd = random_chord_diagram(1, seed);
    ASSERT_EQ(cd.matching.size(), 1u);
    EXPECT_EQ(cd.matching[0], (std::pair<std::size_t, std::size_t>{0, 1}));
  }
}

TEST(RandomChordDiagram, Deterministic) {
  const ChordDiagram a = random_chord_diagram(6, 1234, {0.1, 2.0}, {0.5, 3.0});
  const ChordDiagram b = random_chord_diagram(6, 1234, {0.1, 2.0}, {0.5, 3.0});
  EXPECT_EQ(a.matching, b.matching);
  EXPECT_EQ(a.arcs, b.arcs);
  EXPECT_EQ(a.chords, b.chords);
  for (double x : a.arcs) {
    EXPECT_GE(x, 0.1);
    EXPECT_LT(x, 2.0);
  }
}

TEST(RandomChordDiagram, GoldenVector) {
  const ChordDiagram cd = random_chord_diagram(2, 42);
  EXPECT_EQ(cd.matching, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {2, 3}}));
  EXPECT_EQ(cd.arcs, (std::vector<double>{3.7025371340352811, 3.9676254614143058,
                                          3.0904708687152578, 2.8910713826177665}));
  EXPECT_EQ(cd.chords, (std::vector<double>{3.4075333534483425, 3.0574288049727651}));
}

TEST(RandomChordDiagram, GeneratorGoldenVector) {
  // Cross-checked against an independent transcription of xoshiro256**.
  Xoshiro256 rng(42);
  EXPECT_EQ(rng(), 1546998764402558742ull);
  EXPECT_EQ(rng(), 6990951692964543102ull);
  EXPECT_EQ(rng(), 12544586762248559009ull);
}

TEST(RandomChordDiagram, MatchingsAreUniform) {
  constexpr int kSeeds = 10000;
  std::map<std::vector<std::pair<std::size_t, std::size_t>>, int> freq;
  for (int s = 0; s < kSeeds; ++s) ++freq[random_chord_diagram(3, s).matching];
  ASSERT_EQ(freq.size(), 15u);
  const double p = 1.0 / 15.0;
  const double sigma = std::sqrt(kSeeds * p * (1 - p));
  for (const auto& [m, count] : freq) EXPECT_NEAR(count, kSeeds * p, 3 * sigma);
}

TEST(ExtendDiagram, PreservesLengthAndOldStructure) {
  testing::Rand rng(51);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const ChordDiagram cd = random_chord_diagram(1 + seed % 5, seed);
    const std::size_t a1 = rng.index(0, cd.points() - 1);
    const std::size_t a2 = rng.index(0, cd.points() - 1);
    const ChordDiagram ext = extend_diagram(cd, 1.3, a1, a2, seed);
    validate(ext);
    EXPECT_EQ(ext.n, cd.n + 1);
    EXPECT_NEAR(ext.circle_length(), cd.circle_length(), 1e-12 * cd.circle_length());
    EXPECT_EQ(ext.chords.back(), 1.3);
    // Deleting the new chord and smoothing its endpoints gives back cd.
    GraphSpec spec = realize_graph(ext).spec();
    spec.edges.pop_back();
    const double h_sub = volume_entropy(MetricGraph(spec)).h;
    EXPECT_NEAR(h_sub, volume_entropy(realize_graph(cd)).h, 1e-11);
  }
}

TEST(ExtendDiagram, ThetaEntropyIncreases) {
  const ChordDiagram theta{1, {1.0, 1.0}, {{0, 1}}, {1.0}};
  const ChordDiagram ext = extend_diagram(theta, 1.0, 0, 1, 7);
  EXPECT_EQ(ext.n, 2u);
  EXPECT_GT(volume_entropy(realize_graph(ext)).h, volume_entropy(realize_graph(theta)).h);
}

TEST(ExtendDiagram, SameArcTwice) {
  const ChordDiagram theta{1, {1.0, 1.0}, {{0, 1}}, {1.0}};
  const ChordDiagram ext = extend_diagram(theta, 1.0, 1, 1, 3);
  validate(ext);
  EXPECT_NEAR(ext.circle_length(), 2.0, 1e-15);
}

TEST(ExtendDiagram, LongChordBarelyMatters) {
  const ChordDiagram cd = random_chord_diagram(3, 77);
  const double h = volume_entropy(realize_graph(cd)).h;
  const double h_ext = volume_entropy(realize_graph(extend_diagram(cd, 1e3, 0, 3, 1))).h;
  EXPECT_GE(h_ext, h - 1e-12);
  EXPECT_LE(h_ext - h, 1e-6);
}

TEST(ExtendDiagram, NestedChainsAreMonotone) {
  testing::Rand rng(52);
  for (int chain = 0; chain < 10; ++chain) {
    ChordDiagram cd = random_chord_diagram(1, 500 + chain);
    double h = volume_entropy(realize_graph(cd)).h;
    for (int step = 0; step < 4; ++step) {
      cd = extend_diagram(cd, rng.uniform(0.05, 4.0), rng.index(0, cd.points() - 1),
                          rng.index(0, cd.points() - 1), 600 + chain * 10 + step);
      const double next = volume_entropy(realize_graph(cd)).h;
      EXPECT_GE(next, h - 1e-10);
      h = next;
    }
  }
}

TEST(ExtendDiagram, RejectsBadInsertion) {
  const ChordDiagram theta{1, {1.0, 1.0}, {{0, 1}}, {1.0}};
  EXPECT_THROW(extend_diagram(theta, 1.0, 0, 2, 1), InvalidInsertion);
  EXPECT_THROW(extend_diagram(theta, 0.0, 0, 1, 1), InvalidInsertion);
}

}  // namespace
}  // namespace ortho
