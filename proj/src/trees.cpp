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


#include "geotree/trees.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <string>

#include "geotree/error.hpp"
#include "geotree/rng.hpp"

namespace geotree {

Tree::Tree(std::size_t n, std::span<const TreeEdge> edges) : adjacency_(n) {
  if (n < 1) throw PreconditionError("a tree needs at least one vertex");
  if (edges.size() != n - 1) {
    throw PreconditionError("a tree on n vertices has exactly n - 1 edges");
  }
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n || u == v) {
      throw PreconditionError("invalid tree edge");
    }
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
  // n - 1 edges and connected implies no repeated edge.
  const auto dist = tree_distances(*this, 0);
  if (std::find(dist.begin(), dist.end(), UINT32_MAX) != dist.end()) {
    throw PreconditionError("edge set is not connected");
  }
}

std::size_t Tree::max_degree() const {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return best;
}

std::vector<TreeEdge> Tree::edges() const {
  std::vector<TreeEdge> out;
  out.reserve(size() - 1);
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t height_h(std::size_t n, int delta) {
  if (delta < 3) throw PreconditionError("height_h requires delta >= 3");
  if (n < 2) throw PreconditionError("height_h requires n >= 2");
  const std::size_t branch = static_cast<std::size_t>(delta) - 1;
  // below = sum_{i<h}, upto = sum_{i<=h}, level = (delta-1)^h
  std::size_t h = 0;
  std::size_t below = 0;
  std::size_t level = 1;
  std::size_t upto = 1;
  while (!(below < n && n <= upto)) {
    ++h;
    below = upto;
    level *= branch;
    upto += level;
  }
  return h;
}

Tree truncated_regular_tree(std::size_t n, int delta) {
  height_h(n, delta);  // validates n and delta
  const std::size_t branch = static_cast<std::size_t>(delta) - 1;
  std::vector<TreeEdge> edges;
  edges.reserve(n - 1);
  // BFS order: vertex v's children are the next `branch` unused ids, so the
  // first levels are complete and the last level fills left to right.
  Vertex next = 1;
  for (Vertex parent = 0; next < n; ++parent) {
    for (std::size_t c = 0; c < branch && next < n; ++c) {
      edges.emplace_back(parent, next++);
    }
  }
  return Tree(n, edges);
}

Tree prufer_decode(std::span<const Vertex> sequence) {
  const std::size_t n = sequence.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : sequence) {
    if (v >= n) throw PreconditionError("Prufer entry out of range");
    ++degree[v];
  }
  // Linear-time decode: track the smallest current leaf by pointer.
  std::vector<TreeEdge> edges;
  edges.reserve(n - 1);
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (Vertex v : sequence) {
    edges.emplace_back(static_cast<Vertex>(std::min<std::size_t>(leaf, v)),
                       static_cast<Vertex>(std::max<std::size_t>(leaf, v)));
    --degree[leaf];
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  // Last edge joins the remaining leaf with n - 1.
  edges.emplace_back(static_cast<Vertex>(leaf), static_cast<Vertex>(n - 1));
  return Tree(n, edges);
}

Tree uniform_random_tree(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw PreconditionError("uniform_random_tree requires n >= 2");
  Rng rng(derive_seed(seed, Stream::tree));
  std::vector<Vertex> sequence(n - 2);
  for (auto& v : sequence) v = static_cast<Vertex>(uniform_below(rng, n));
  return prufer_decode(sequence);
}

Tree random_bounded_degree_tree(std::size_t n, int delta, std::uint64_t seed) {
  if (n < 2) throw PreconditionError("random_bounded_degree_tree requires n >= 2");
  if (delta < 2) {
    throw PreconditionError("random_bounded_degree_tree requires delta >= 2");
  }
  Rng rng(derive_seed(seed, Stream::tree));
  const auto cap = static_cast<std::size_t>(delta);
  std::vector<std::size_t> degree(n, 0);
  std::vector<Vertex> open{0};
  std::vector<TreeEdge> edges;
  edges.reserve(n - 1);
  for (Vertex v = 1; v < n; ++v) {
    const std::size_t slot = uniform_below(rng, open.size());
    const Vertex parent = open[slot];
    edges.emplace_back(parent, v);
    if (++degree[parent] == cap) {
      open[slot] = open.back();
      open.pop_back();
    }
    degree[v] = 1;
    if (degree[v] < cap) open.push_back(v);
  }
  return Tree(n, edges);
}

Tree path_tree(std::size_t n) {
  std::vector<TreeEdge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Tree(n, edges);
}

Tree star_tree(std::size_t n) {
  std::vector<TreeEdge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Tree(n, edges);
}

std::vector<std::uint32_t> tree_distances(const Tree& tree, Vertex source) {
  std::vector<std::uint32_t> dist(tree.size(), UINT32_MAX);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex v : tree.neighbors(u)) {
      if (dist[v] == UINT32_MAX) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

namespace {

std::pair<Vertex, std::size_t> farthest(const Tree& tree, Vertex source) {
  const auto dist = tree_distances(tree, source);
  const auto it = std::max_element(dist.begin(), dist.end());
  return {static_cast<Vertex>(it - dist.begin()), *it};
}

}  // namespace

TreeStats tree_stats(const Tree& tree) {
  const auto [end, unused] = farthest(tree, 0);
  (void)unused;
  return {tree.max_degree(), farthest(tree, end).second};
}

std::size_t height_from(const Tree& tree, Vertex v) {
  return farthest(tree, v).second;
}

std::size_t width_from(const Tree& tree, Vertex v) {
  const auto dist = tree_distances(tree, v);
  std::vector<std::size_t> per_level(tree.size(), 0);
  for (auto x : dist) ++per_level[x];
  return *std::max_element(per_level.begin(), per_level.end());
}

void write_tree_csv(std::ostream& os, const Tree& tree) {
  os << "# vertices=" << tree.size() << "\nu,v\n";
  for (const auto& [u, v] : tree.edges()) os << u << ',' << v << '\n';
}

Tree read_tree_csv(std::istream& is) {
  std::string line;
  std::size_t n = 0;
  std::vector<TreeEdge> edges;
  bool saw_count = false;
  while (std::getline(is, line)) {
    if (line.empty() || line == "u,v") continue;
    if (line.rfind("# vertices=", 0) == 0) {
      n = std::stoul(line.substr(11));
      saw_count = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw PreconditionError("malformed tree CSV row: " + line);
    }
    edges.emplace_back(static_cast<Vertex>(std::stoul(line.substr(0, comma))),
                       static_cast<Vertex>(std::stoul(line.substr(comma + 1))));
  }
  if (!saw_count) n = edges.size() + 1;
  return Tree(n, edges);
}

}  // namespace geotree
