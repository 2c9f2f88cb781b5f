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
#include <map>
#include <sstream>

#include "geotree/error.hpp"
#include "geotree/trees.hpp"

namespace geotree {
namespace {

std::vector<std::size_t> level_sizes(const Tree& t) {
  std::vector<std::size_t> sizes;
  for (auto dist : tree_distances(t, 0)) {
    if (dist >= sizes.size()) sizes.resize(dist + 1);
    ++sizes[dist];
  }
  return sizes;
}

TEST(Height, Values) {
  EXPECT_EQ(height_h(7, 3), 2u);
  EXPECT_EQ(height_h(5, 4), 2u);
  EXPECT_EQ(height_h(2, 3), 1u);
  EXPECT_EQ(height_h(8, 3), 3u);
  EXPECT_THROW(height_h(10, 2), PreconditionError);
}

TEST(Height, LogBound) {
  for (int delta = 3; delta <= 10; ++delta) {
    for (std::size_t n = 2; n < 100000; n = n * 3 / 2 + 1) {
      const double bound = std::log((delta - 2.0) * n + 1) / std::log(delta - 1.0);
      EXPECT_LE(static_cast<double>(height_h(n, delta)), bound + 1e-9);
    }
  }
}

TEST(Truncated, BinarySeven) {
  const Tree t = truncated_regular_tree(7, 3);
  EXPECT_EQ(level_sizes(t), (std::vector<std::size_t>{1, 2, 4}));
  EXPECT_EQ(tree_stats(t).diameter, 4u);
  EXPECT_EQ(truncated_regular_tree(2, 3).edges(), (std::vector<TreeEdge>{{0, 1}}));
}

TEST(Truncated, SizesAndLevels) {
  for (int delta = 3; delta <= 10; ++delta) {
    for (std::size_t n = 2; n <= 10000; n = n < 100 ? n + 1 : n * 5 / 4) {
      const Tree t = truncated_regular_tree(n, delta);
      ASSERT_EQ(t.size(), n);
      EXPECT_LE(t.max_degree(), static_cast<std::size_t>(delta));
      const std::size_t h = height_h(n, delta);
      const auto sizes = level_sizes(t);
      ASSERT_EQ(sizes.size(), h + 1);
      std::size_t expect = 1;
      for (std::size_t i = 0; i < h; ++i) {
        EXPECT_EQ(sizes[i], expect);
        expect *= static_cast<std::size_t>(delta - 1);
      }
      EXPECT_LE(tree_stats(t).diameter, 2 * h);
    }
  }
}

TEST(Prufer, StarAtOne) {
  const std::vector<Vertex> seq{1, 1};
  const Tree t = prufer_decode(seq);
  EXPECT_EQ(t.degree(1), 3u);
  EXPECT_EQ(t.edges(), (std::vector<TreeEdge>{{0, 1}, {1, 2}, {1, 3}}));
}

TEST(Prufer, DegreesExhaustive) {
  for (std::size_t n = 2; n <= 6; ++n) {
    std::vector<Vertex> seq(n - 2, 0);
    std::size_t count = 0;
    std::vector<std::vector<TreeEdge>> seen;
    while (true) {
      const Tree t = prufer_decode(seq);
      ASSERT_EQ(t.size(), n);
      for (Vertex v = 0; v < n; ++v) {
        EXPECT_EQ(t.degree(v),
                  1 + static_cast<std::size_t>(std::count(seq.begin(), seq.end(), v)));
      }
      seen.push_back(t.edges());
      ++count;
      std::size_t i = 0;
      while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
      if (i == seq.size()) break;
    }
    EXPECT_EQ(count, static_cast<std::size_t>(std::pow(n, n - 2)));
    std::sort(seen.begin(), seen.end());
    EXPECT_EQ(std::unique(seen.begin(), seen.end()), seen.end());
  }
}

TEST(Uniform, ThreeVertices) {
  std::map<std::vector<TreeEdge>, int> freq;
  for (std::uint64_t s = 0; s < 10000; ++s) ++freq[uniform_random_tree(3, s).edges()];
  ASSERT_EQ(freq.size(), 3u);
  for (const auto& [edges, c] : freq) EXPECT_NEAR(c / 10000.0, 1.0 / 3, 0.02);
}

TEST(Uniform, ValidTrees) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Tree t = uniform_random_tree(2 + s * 7, s);
    EXPECT_EQ(t.edges().size(), t.size() - 1);
  }
}

TEST(Bounded, PathAtTwo) {
  const Tree t = random_bounded_degree_tree(50, 2, 3);
  EXPECT_EQ(t.max_degree(), 2u);
  EXPECT_EQ(tree_stats(t).diameter, 49u);
}

TEST(Bounded, CapAndReplay) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Tree t = random_bounded_degree_tree(200, 3, s);
    EXPECT_LE(t.max_degree(), 3u);
  }
  EXPECT_EQ(random_bounded_degree_tree(5, 3, 12), random_bounded_degree_tree(5, 3, 12));
}

TEST(Stats, PathAndStar) {
  EXPECT_EQ(tree_stats(path_tree(5)).diameter, 4u);
  EXPECT_EQ(tree_stats(path_tree(5)).max_degree, 2u);
  EXPECT_EQ(tree_stats(star_tree(5)).diameter, 2u);
  EXPECT_EQ(tree_stats(star_tree(5)).max_degree, 4u);
  EXPECT_EQ(height_from(path_tree(5), 0), 4u);
  EXPECT_EQ(width_from(star_tree(5), 0), 4u);
}

TEST(Stats, DoubleSweepMatchesAllPairs) {
  for (std::size_t n = 2; n <= 200; n += 3) {
    const Tree t = uniform_random_tree(n, n);
    std::uint32_t best = 0;
    for (Vertex v = 0; v < n; ++v) {
      const auto dist = tree_distances(t, v);
      best = std::max(best, *std::max_element(dist.begin(), dist.end()));
    }
    EXPECT_EQ(tree_stats(t).diameter, best);
  }
}

TEST(TreeType, RejectsInvalid) {
  const std::vector<TreeEdge> cycle{{0, 1}, {1, 2}, {2, 0}};
  EXPECT_THROW(Tree(4, cycle), PreconditionError);
  const std::vector<TreeEdge> few{{0, 1}};
  EXPECT_THROW(Tree(3, few), PreconditionError);
}

TEST(TreeCsv, RoundTrip) {
  const Tree t = random_bounded_degree_tree(40, 4, 2);
  std::stringstream ss;
  write_tree_csv(ss, t);
  EXPECT_EQ(read_tree_csv(ss), t);
}

}  // namespace
}  // namespace geotree
