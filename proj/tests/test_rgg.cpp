// Copyright 2026 The geotree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "geotree/reference.hpp"
#include "geotree/rgg.hpp"
#include "geotree/rng.hpp"

namespace geotree {
namespace {

PointSet line(std::vector<double> xs) { return PointSet(1, std::move(xs)); }

TEST(Sample, RejectsEmpty) { EXPECT_THROW(sample_points(0, 2, 1), PreconditionError); }

TEST(Sample, Deterministic) {
  const PointSet a = sample_points(100000, 2, 7);
  const PointSet b = sample_points(100000, 2, 7);
  ASSERT_EQ(a.size(), 100000u);
  EXPECT_TRUE(std::equal(a.coords().begin(), a.coords().end(), b.coords().begin()));
  const PointSet c = sample_points(100000, 2, 8);
  EXPECT_FALSE(std::equal(a.coords().begin(), a.coords().end(), c.coords().begin()));
}

TEST(Sample, CoordinateMeans) {
  const std::size_t n = 1000000;
  const PointSet p = sample_points(n, 3, 21);
  for (int k = 0; k < 3; ++k) {
    double sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double x = p[i][static_cast<std::size_t>(k)];
      ASSERT_GE(x, 0.0);
      ASSERT_LE(x, 1.0);
      sum += x;
    }
    EXPECT_NEAR(sum / n, 0.5, 0.002);
  }
}

TEST(PointSetTest, RejectsOutOfCube) {
  EXPECT_THROW(PointSet(1, {0.5, 1.5}), PreconditionError);
}

TEST(Graph, ClosedThreshold) {
  const GeometricGraph g(line({0.1, 0.2, 0.5}), 0.15);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}}));
  const GeometricGraph h(line({0.25, 0.5}), 0.25);
  EXPECT_TRUE(h.adjacent(0, 1));
}

TEST(Graph, RejectsNonPositiveRadius) {
  EXPECT_THROW(GeometricGraph(line({0.1}), 0.0), PreconditionError);
}

TEST(Graph, CompleteAtDiagonal) {
  for (int d = 1; d <= 3; ++d) {
    const GeometricGraph g(sample_points(60, d, 4), std::sqrt(d));
    EXPECT_EQ(g.edges().size(), 60u * 59 / 2);
  }
}

TEST(Graph, MatchesBruteForce) {
  Rng rng(99);
  for (int i = 0; i < 60; ++i) {
    const int d = 1 + static_cast<int>(uniform_below(rng, 3));
    const std::size_t n = 1 + uniform_below(rng, 500);
    const double r = 0.01 + 0.5 * uniform01(rng);
    const PointSet p = sample_points(n, d, rng());
    const GeometricGraph g(p, r);
    ASSERT_EQ(g.edges(), reference::brute_force_edges(p, r));
    const Adjacency a = g.adjacency();
    const Adjacency b = reference::brute_force_adjacency(p, r);
    EXPECT_EQ(a.offsets, b.offsets);
    EXPECT_EQ(a.targets, b.targets);
  }
}

TEST(Graph, SymmetricNoLoops) {
  const GeometricGraph g(sample_points(400, 2, 5), 0.1);
  const Adjacency a = g.adjacency();
  for (std::size_t u = 0; u < a.size(); ++u) {
    for (PointId v : a.neighbors(u)) {
      EXPECT_NE(v, u);
      const auto back = a.neighbors(v);
      EXPECT_TRUE(std::find(back.begin(), back.end(), u) != back.end());
    }
  }
}

TEST(Diameter, PathAndDisconnected) {
  const GeometricGraph g(line({0.05, 0.5, 0.95}), 0.5);
  const HopDiameter h = hop_diameter(g);
  EXPECT_TRUE(h.connected);
  EXPECT_EQ(h.hops, 2u);
  EXPECT_TRUE(h.exact);
  const GeometricGraph split(line({0.1, 0.9}), 0.5);
  EXPECT_FALSE(hop_diameter(split).connected);
}

TEST(Diameter, AboveEuclideanRatio) {
  const PointSet p = sample_points(2000, 2, 17);
  const double r = 0.08;
  const GeometricGraph g(p, r);
  const Adjacency a = g.adjacency();
  const HopDiameter h = hop_diameter(a);
  ASSERT_TRUE(h.connected);
  const HopDiameter slow = reference::all_pairs_hop_diameter(a);
  EXPECT_EQ(h.hops, slow.hops);
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const auto u = uniform_below(rng, p.size());
    const auto v = uniform_below(rng, p.size());
    const double need = std::ceil(std::sqrt(dist2(p[u], p[v])) / r - 1e-12);
    EXPECT_GE(static_cast<double>(h.hops), need);
  }
}

TEST(Diameter, SweepIsLowerBound) {
  const GeometricGraph g(sample_points(3000, 2, 8), 0.06);
  const Adjacency a = g.adjacency();
  const HopDiameter exact = hop_diameter(a);
  const HopDiameter sweep = hop_diameter(a, 100);
  EXPECT_FALSE(sweep.exact);
  EXPECT_EQ(sweep.connected, exact.connected);
  if (exact.connected) EXPECT_LE(sweep.hops, exact.hops);
}

TEST(Colors, Extremes) {
  const PointSet p = sample_points(1000, 2, 3);
  EXPECT_EQ(color_points(p, 0.0, 1).count(Color::blue), 0u);
  EXPECT_EQ(color_points(p, 1.0, 1).count(Color::red), 0u);
  EXPECT_THROW(color_points(p, 1.5, 1), PreconditionError);
}

TEST(Colors, HalfBinomial) {
  const std::size_t n = 100000;
  const PointSet p = sample_points(n, 2, 3);
  const auto c = color_points(p, 0.5, 44);
  const double blue = static_cast<double>(c.count(Color::blue));
  EXPECT_NEAR(blue, n / 2.0, 3 * std::sqrt(static_cast<double>(n)) / 2);
  EXPECT_EQ(c.colors, color_points(p, 0.5, 44).colors);
}

TEST(Count, WholeCubeAndEmpty) {
  const PointSet p = sample_points(500, 3, 2);
  const std::vector<Color> none;
  const Box cube{{0, 0, 0}, {1, 1, 1}};
  EXPECT_EQ(count_in_region(p, none, cube), 500u);
  const Box empty{{0.5, 0.5, 0.5}, {0.4, 0.6, 0.6}};
  EXPECT_EQ(count_in_region(p, none, empty), 0u);
}

TEST(Count, MatchesScan) {
  Rng rng(6);
  for (int i = 0; i < 50; ++i) {
    const int d = 1 + static_cast<int>(uniform_below(rng, 3));
    const PointSet p = sample_points(1 + uniform_below(rng, 1000), d, rng());
    const auto colors = color_points(p, 0.3, rng());
    Box box{std::vector<double>(d), std::vector<double>(d)};
    Ball ball{std::vector<double>(d), 0.3 * uniform01(rng)};
    for (int k = 0; k < d; ++k) {
      const double a = uniform01(rng);
      const double b = uniform01(rng);
      box.lo[k] = std::min(a, b);
      box.hi[k] = std::max(a, b);
      ball.centre[k] = uniform01(rng);
    }
    for (const Region& region : {Region(box), Region(ball)}) {
      EXPECT_EQ(count_in_region(p, colors.colors, region),
                reference::count_in_region(p, colors.colors, region));
      EXPECT_EQ(count_in_region(p, colors.colors, region, Color::blue),
                reference::count_in_region(p, colors.colors, region, Color::blue));
    }
  }
}

TEST(PointsCsv, RoundTrip) {
  const PointSet p = sample_points(50, 3, 9);
  const auto c = color_points(p, 0.5, 9);
  std::stringstream ss;
  write_points_csv(ss, p, c.colors);
  const LoadedPoints back = read_points_csv(ss);
  ASSERT_EQ(back.points.size(), 50u);
  EXPECT_TRUE(std::equal(p.coords().begin(), p.coords().end(), back.points.coords().begin()));
  EXPECT_EQ(back.colors.colors, c.colors);
}

}  // namespace
}  // namespace geotree
