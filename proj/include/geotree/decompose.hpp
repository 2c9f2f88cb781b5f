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

// Splitting a bounded-degree tree into vertex-disjoint subtrees of weight in
// [m0, m], m0 = m / (delta + 1), by cutting edges at weighted centroids.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geotree/trees.hpp"

namespace geotree {

struct Decomposition {
  // Parts in emission order; each part's vertices are sorted.
  std::vector<std::vector<Vertex>> parts;
  std::vector<std::size_t> part_of;
  // Tree edges whose endpoints lie in different parts, (u < v), sorted.
  std::vector<TreeEdge> cut_edges;
  // Endpoints of cut edges, sorted and unique.
  std::vector<Vertex> anchors;
  // Distance within the part to its nearest anchor; 0 for an anchor-free part.
  std::vector<std::uint32_t> levels;
  double m = 0;
  double m0 = 0;

  std::size_t part_count() const { return parts.size(); }
};

// Vertex minimizing the heaviest component of T - v; smallest id on ties.
Vertex weighted_centroid(const Tree& tree, std::span<const double> weights);

// Requires max degree <= delta, every weight in (0, m0] and total >= m0.
// Throws PreconditionError naming the offending vertex otherwise.
Decomposition split_tree(const Tree& tree, std::span<const double> weights,
                         double m, int delta);
// Unit weights.
Decomposition split_tree(const Tree& tree, double m, int delta);

// Multi-source BFS from each part's anchors, restricted to the part.
std::vector<std::uint32_t> compute_levels(const Decomposition& decomposition,
                                          const Tree& tree);

// Checks every structural invariant of a decomposition of `tree`; returns a
// description of the first violation.
std::optional<std::string> validate_decomposition(
    const Decomposition& decomposition, const Tree& tree,
    std::span<const double> weights);

}  // namespace geotree
