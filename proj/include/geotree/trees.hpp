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


#pragma once

// Labeled trees and the generators used by the experiments.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace geotree {

using Vertex = std::uint32_t;
using TreeEdge = std::pair<Vertex, Vertex>;

class Tree {
 public:
  // Validates: n >= 1, n - 1 edges, no loops or repeats, connected.
  Tree(std::size_t n, std::span<const TreeEdge> edges);

  std::size_t size() const { return adjacency_.size(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  std::size_t max_degree() const;
  // Each edge once, u < v, sorted.
  std::vector<TreeEdge> edges() const;

  bool operator==(const Tree& other) const = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
};

// The unique h with sum_{i<h} (delta-1)^i < n <= sum_{i<=h} (delta-1)^i.
std::size_t height_h(std::size_t n, int delta);

// Rooted at 0; (delta-1)^i vertices at depth i < h, the remainder at depth h
// attached left to right. Vertex ids follow BFS order.
Tree truncated_regular_tree(std::size_t n, int delta);

// Prufer sequence of length n - 2 over [0, n) decoded to its tree.
Tree prufer_decode(std::span<const Vertex> sequence);
// Uniform over the n^(n-2) labeled trees.
Tree uniform_random_tree(std::size_t n, std::uint64_t seed);

// Vertex i >= 1 attaches to a uniformly chosen earlier vertex with degree
// below delta. Not uniform over bounded-degree trees.
Tree random_bounded_degree_tree(std::size_t n, int delta, std::uint64_t seed);

Tree path_tree(std::size_t n);
Tree star_tree(std::size_t n);

std::vector<std::uint32_t> tree_distances(const Tree& tree, Vertex source);

struct TreeStats {
  std::size_t max_degree = 0;
  std::size_t diameter = 0;
};

// Diameter by double BFS, exact on trees.
TreeStats tree_stats(const Tree& tree);
// Eccentricity of v.
std::size_t height_from(const Tree& tree, Vertex v);
// Largest number of vertices at a common distance from v.
std::size_t width_from(const Tree& tree, Vertex v);

// "# vertices=<n>" line, "u,v" header, one row per edge.
void write_tree_csv(std::ostream& os, const Tree& tree);
Tree read_tree_csv(std::istream& is);

}  // namespace geotree
