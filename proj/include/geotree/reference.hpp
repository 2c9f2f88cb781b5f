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

// Serial reference kernels. They share no code path with the parallel,
// index-backed versions in rgg.hpp and serve as test oracles and benchmark
// baselines.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "geotree/rgg.hpp"

namespace geotree::reference {

// All-pairs O(n^2) edge list, sorted, u < v.
std::vector<Edge> brute_force_edges(const PointSet& points, double r);

// Adjacency built from brute_force_edges.
Adjacency brute_force_adjacency(const PointSet& points, double r);

// Exact hop diameter by serial BFS from every vertex.
HopDiameter all_pairs_hop_diameter(const Adjacency& adj);

std::size_t count_in_region(const PointSet& points,
                            std::span<const Color> colors, const Region& region,
                            std::optional<Color> filter = std::nullopt);

}  // namespace geotree::reference
