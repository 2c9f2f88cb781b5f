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


#include "geotree/reference.hpp"

#include <algorithm>
#include <deque>

namespace geotree::reference {

std::vector<Edge> brute_force_edges(const PointSet& points, double r) {
  std::vector<Edge> out;
  const std::size_t n = points.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (within(points[u], points[v], r)) {
        out.emplace_back(static_cast<std::uint32_t>(u),
                         static_cast<std::uint32_t>(v));
      }
    }
  }
  return out;
}

Adjacency brute_force_adjacency(const PointSet& points, double r) {
  const std::size_t n = points.size();
  std::vector<std::vector<PointId>> lists(n);
  for (const auto& [u, v] : brute_force_edges(points, r)) {
    lists[u].push_back(v);
    lists[v].push_back(u);
  }
  Adjacency adj;
  adj.offsets.push_back(0);
  for (auto& list : lists) {
    std::sort(list.begin(), list.end());
    adj.targets.insert(adj.targets.end(), list.begin(), list.end());
    adj.offsets.push_back(adj.targets.size());
  }
  return adj;
}

HopDiameter all_pairs_hop_diameter(const Adjacency& adj) {
  const std::size_t n = adj.size();
  std::uint32_t best = 0;
  std::vector<std::uint32_t> dist(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    std::deque<std::size_t> queue{s};
    dist[s] = 0;
    std::size_t seen = 1;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      best = std::max(best, dist[u]);
      for (PointId v : adj.neighbors(u)) {
        if (dist[v] == kUnreached) {
          dist[v] = dist[u] + 1;
          ++seen;
          queue.push_back(v);
        }
      }
    }
    if (seen != n) return {false, 0, true};
  }
  return {true, best, true};
}

std::size_t count_in_region(const PointSet& points,
                            std::span<const Color> colors, const Region& region,
                            std::optional<Color> filter) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (filter && colors[i] != *filter) continue;
    const auto x = points[i];
    bool inside = true;
    if (const auto* box = std::get_if<Box>(&region)) {
      for (std::size_t k = 0; k < x.size() && inside; ++k) {
        inside = x[k] >= box->lo[k] && x[k] <= box->hi[k];
      }
    } else {
      const auto& ball = std::get<Ball>(region);
      double acc = 0;
      for (std::size_t k = 0; k < x.size(); ++k) {
        acc += (x[k] - ball.centre[k]) * (x[k] - ball.centre[k]);
      }
      inside = acc <= ball.radius * ball.radius;
    }
    if (inside) ++total;
  }
  return total;
}

}  // namespace geotree::reference
