#include <gtest/gtest.h>

#include <cmath>

#include "ortho/chord_diagram.hpp"
#include "ortho/lim_solver.hpp"
#include "ortho/oracle.hpp"

namespace ortho {
namespace {

TEST(BallVolume, CircleCoverIsALine) {
  EXPECT_NEAR(ball_volume(shapes::circle(1.0), 0, 5.0), 10.0, 1e-12);
}

TEST(BallVolume, FigureEightByHand) {
  const MetricGraph g = shapes::bouquet({1.0, 1.0});
  EXPECT_EQ(ball_volume(g, 0, 1.0), 4.0);
  EXPECT_EQ(ball_volume(g, 0, 2.0), 16.0);
  EXPECT_EQ(ball_volume(g, 0, 1.5), 4.0 + 12.0 * 0.5);
}

TEST(BallVolume, EqualLengthBouquetFollowsRegularTree) {
  // Wedge of b unit circles: the cover is the 2b-regular tree, whose k-th
  // sphere of edges has 2b (2b-1)^{k-1} members.
  for (std::size_t b = 2; b <= 4; ++b) {
    const MetricGraph g = shapes::bouquet(std::vector<double>(b, 1.0));
    double expected = 0.0;
    double sphere = 2.0 * b;
    for (int radius = 1; radius <= 5; ++radius) {
      expected += sphere;
      sphere *= 2.0 * b - 1.0;
      EXPECT_EQ(ball_volume(g, 0, radius), expected);
    }
  }
}

TEST(CountClasses, FigureEightByHand) {
  const MetricGraph g = shapes::bouquet({1.0, 1.0});
  EXPECT_EQ(count_classes(g, 0, 1.0), 5u);
  EXPECT_EQ(count_classes(g, 0, 2.0), 17u);
}

TEST(CountClasses, OnlyTrivialClassBelowShortestLoop) {
  EXPECT_EQ(count_classes(shapes::bouquet({1.0, 2.0}), 0, 0.99), 1u);
  EXPECT_EQ(count_classes(shapes::two_vertex({1.0, 1.5, 2.0}), 0, 2.4), 1u);
  EXPECT_EQ(count_classes(shapes::two_vertex({1.0, 1.5, 2.0}), 0, 2.5), 3u);
}

TEST(BallGrowth, Monotone) {
  const MetricGraph g = realize_graph(random_chord_diagram(3, 8, {0.3, 2.0}, {0.3, 2.0}));
  std::vector<double> radii;
  for (double r = 0.5; r <= 10.0; r += 0.5) radii.push_back(r);
  const BallGrowth growth = ball_growth(g, 0, radii);
  for (std::size_t i = 1; i < radii.size(); ++i) {
    EXPECT_GE(growth.volumes[i], growth.volumes[i - 1]);
    EXPECT_GE(growth.counts[i], growth.counts[i - 1]);
  }
}

TEST(BallGrowth, BudgetExceeded) {
  EXPECT_THROW(ball_volume(shapes::bouquet({1.0, 1.0}), 0, 30.0, 1000), BudgetExceeded);
}

TEST(EntropyEstimate, FigureEight) {
  const EntropyEstimate e = entropy_estimate(shapes::bouquet({1.0, 1.0}), 6.0, 12.0);
  EXPECT_NEAR(e.value, std::log(3.0), 0.05);
  EXPECT_GT(e.error_bar, 0.0);
}

TEST(EntropyEstimate, CircleGrowsLinearly) {
  EXPECT_NEAR(entropy_estimate(shapes::circle(1.0), 50.0, 100.0).value, 0.0, 0.05);
}

TEST(EntropyEstimate, Theta) {
  EXPECT_NEAR(entropy_estimate(shapes::two_vertex({1.0, 1.0, 1.0}), 8.0, 14.0).value,
              std::log(2.0), 0.05);
}

TEST(EntropyEstimate, ExponentialGrowthBand) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const MetricGraph g = realize_graph(random_chord_diagram(2, seed, {0.3, 2.0}, {0.3, 2.0}));
    const double h = volume_entropy(g).h;
    std::vector<double> radii;
    for (int i = 0; i <= 12; ++i) radii.push_back((8.0 + 0.5 * i) / h);
    const BallGrowth growth = ball_growth(g, 0, radii);
    double lo = INFINITY;
    double hi = 0.0;
    for (std::size_t i = 0; i < radii.size(); ++i) {
      const double c = growth.volumes[i] / std::exp(h * radii[i]);
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    EXPECT_LE(hi / lo, 10.0);
  }
}

TEST(EntropyEstimate, ApproachesSolverOnChordGraphs) {
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    const MetricGraph g = realize_graph(random_chord_diagram(3, seed, {0.3, 2.0}, {0.3, 2.0}));
    const double h = volume_entropy(g).h;
    EXPECT_NEAR(entropy_estimate(g, 8.0 / h, 14.0 / h).value, h, 0.05);
  }
}

}  // namespace
}  // namespace ortho
