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


#include "geotree/decompose.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "geotree/error.hpp"

namespace geotree {

namespace {

constexpr std::size_t kNoComponent = static_cast<std::size_t>(-1);

// Scratch state for working on one connected component of the forest left
// after some cuts. A tree edge is live iff both ends share a component id.
class ComponentWalker {
 public:
  ComponentWalker(const Tree& tree, std::span<const double> weights)
      : tree_(tree),
        weights_(weights),
        component_(tree.size(), 0),
        parent_(tree.size()),
        subtree_(tree.size()) {}

  std::size_t& component(Vertex v) { return component_[v]; }

  // BFS order of the component containing `root`, filling parent_ and
  // subtree weights.
  const std::vector<Vertex>& walk(Vertex root) {
    order_.clear();
    order_.push_back(root);
    parent_[root] = root;
    const std::size_t id = component_[root];
    for (std::size_t head = 0; head < order_.size(); ++head) {
      const Vertex u = order_[head];
      for (Vertex v : tree_.neighbors(u)) {
        if (v != parent_[u] && component_[v] == id) {
          parent_[v] = u;
          order_.push_back(v);
        }
      }
    }
    for (Vertex v : order_) subtree_[v] = weights_[v];
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
      if (*it != root) subtree_[parent_[*it]] += subtree_[*it];
    }
    return order_;
  }

  double total() const { return subtree_[order_.front()]; }

  // Heaviest component of (component - v) as (weight, neighbor of v in it);
  // largest weight first, then smallest neighbor id.
  std::pair<double, Vertex> heaviest_without(Vertex v) const {
    const std::size_t id = component_[v];
    const Vertex root = order_.front();
    double best = -1;
    Vertex via = v;
    for (Vertex u : tree_.neighbors(v)) {
      if (component_[u] != id) continue;
      const double w = (v != root && u == parent_[v]) ? total() - subtree_[v]
                                                       : subtree_[u];
      if (w > best || (w == best && u < via)) {
        best = w;
        via = u;
      }
    }
    return {best < 0 ? 0.0 : best, via};
  }

  // Vertex of the walked component minimizing heaviest_without, ties to the
  // smallest id.
  Vertex centroid() const {
    Vertex best_v = order_.front();
    double best = heaviest_without(best_v).first;
    for (Vertex v : order_) {
      const double w = heaviest_without(v).first;
      if (w < best || (w == best && v < best_v)) {
        best = w;
        best_v = v;
      }
    }
    return best_v;
  }

  // Relabels the side of the live edge (v, u) that contains u.
  void detach(Vertex v, Vertex u, std::size_t new_id) {
    const std::size_t id = component_[u];
    std::vector<Vertex> stack{u};
    component_[u] = new_id;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : tree_.neighbors(x)) {
        if (y != v && component_[y] == id) {
          component_[y] = new_id;
          stack.push_back(y);
        }
      }
    }
  }

 private:
  const Tree& tree_;
  std::span<const double> weights_;
  std::vector<std::size_t> component_;
  std::vector<Vertex> parent_;
  std::vector<double> subtree_;
  std::vector<Vertex> order_;
};

void check_weights(const Tree& tree, std::span<const double> weights) {
  if (weights.size() != tree.size()) {
    throw PreconditionError("one weight per vertex required");
  }
  for (std::size_t v = 0; v < weights.size(); ++v) {
    if (!(weights[v] > 0)) {
      throw PreconditionError("weight of vertex " + std::to_string(v) +
                              " is not positive");
    }
  }
}

}  // namespace

Vertex weighted_centroid(const Tree& tree, std::span<const double> weights) {
  check_weights(tree, weights);
  ComponentWalker walker(tree, weights);
  walker.walk(0);
  return walker.centroid();
}

Decomposition split_tree(const Tree& tree, std::span<const double> weights,
                         double m, int delta) {
  check_weights(tree, weights);
  if (!(m > 0)) throw PreconditionError("m must be positive");
  if (delta < 2) throw PreconditionError("delta must be >= 2");
  const double m0 = m / (delta + 1.0);
  for (Vertex v = 0; v < tree.size(); ++v) {
    if (tree.degree(v) > static_cast<std::size_t>(delta)) {
      throw PreconditionError("vertex " + std::to_string(v) + " has degree " +
                              std::to_string(tree.degree(v)) + " > delta");
    }
    if (weights[v] > m0) {
      throw PreconditionError("weight of vertex " + std::to_string(v) +
                              " exceeds m0 = " + std::to_string(m0));
    }
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (total < m0) {
    throw PreconditionError("total weight " + std::to_string(total) +
                            " is below m0 = " + std::to_string(m0) +
                            " (at vertex 0)");
  }

  Decomposition out;
  out.m = m;
  out.m0 = m0;
  out.part_of.assign(tree.size(), kNoComponent);

  ComponentWalker walker(tree, weights);
  std::size_t next_id = 1;
  // Representatives of components still to be processed.
  std::vector<Vertex> pending{0};
  while (!pending.empty()) {
    const Vertex root = pending.back();
    pending.pop_back();
    const auto& order = walker.walk(root);
    if (walker.total() <= m) {
      std::vector<Vertex> part(order.begin(), order.end());
      std::sort(part.begin(), part.end());
      for (Vertex v : part) out.part_of[v] = out.parts.size();
      out.parts.push_back(std::move(part));
      continue;
    }
    const Vertex v = walker.centroid();
    const Vertex u = walker.heaviest_without(v).second;
    walker.detach(v, u, next_id++);
    out.cut_edges.emplace_back(std::min(u, v), std::max(u, v));
    pending.push_back(v);
    pending.push_back(u);
  }

  std::sort(out.cut_edges.begin(), out.cut_edges.end());
  for (const auto& [a, b] : out.cut_edges) {
    out.anchors.push_back(a);
    out.anchors.push_back(b);
  }
  std::sort(out.anchors.begin(), out.anchors.end());
  out.anchors.erase(std::unique(out.anchors.begin(), out.anchors.end()),
                    out.anchors.end());
  out.levels = compute_levels(out, tree);
  return out;
}

Decomposition split_tree(const Tree& tree, double m, int delta) {
  const std::vector<double> unit(tree.size(), 1.0);
  return split_tree(tree, unit, m, delta);
}

std::vector<std::uint32_t> compute_levels(const Decomposition& decomposition,
                                          const Tree& tree) {
  std::vector<std::uint32_t> level(tree.size(), UINT32_MAX);
  std::vector<Vertex> queue;
  for (Vertex a : decomposition.anchors) {
    level[a] = 0;
    queue.push_back(a);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex v : tree.neighbors(u)) {
      if (level[v] == UINT32_MAX &&
          decomposition.part_of[v] == decomposition.part_of[u]) {
        level[v] = level[u] + 1;
        queue.push_back(v);
      }
    }
  }
  // Only an anchor-free part (a single-part decomposition) is left unreached.
  for (auto& l : level) {
    if (l == UINT32_MAX) l = 0;
  }
  return level;
}

std::optional<std::string> validate_decomposition(
    const Decomposition& dec, const Tree& tree, std::span<const double> weights) {
  std::ostringstream err;
  const std::size_t n = tree.size();
  const std::size_t k = dec.parts.size();
  if (k == 0) return "no parts";
  std::vector<int> seen(n, 0);
  for (std::size_t p = 0; p < k; ++p) {
    double w = 0;
    for (Vertex v : dec.parts[p]) {
      if (v >= n) return "vertex out of range in part " + std::to_string(p);
      ++seen[v];
      w += weights[v];
      if (dec.part_of[v] != p) return "part_of disagrees for vertex " + std::to_string(v);
    }
    const double tol = 1e-9 * std::max(1.0, dec.m);
    if (w < dec.m0 - tol || w > dec.m + tol) {
      err << "part " << p << " weight " << w << " outside [" << dec.m0 << ", "
          << dec.m << "]";
      return err.str();
    }
    // Connected: BFS inside the part reaches all of it.
    const auto& part = dec.parts[p];
    std::vector<Vertex> queue{part.front()};
    std::vector<char> mark(n, 0);
    mark[part.front()] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex y : tree.neighbors(queue[head])) {
        if (!mark[y] && dec.part_of[y] == p) {
          mark[y] = 1;
          queue.push_back(y);
        }
      }
    }
    if (queue.size() != part.size()) return "part " + std::to_string(p) + " is disconnected";
  }
  for (Vertex v = 0; v < n; ++v) {
    if (seen[v] != 1) return "vertex " + std::to_string(v) + " covered " + std::to_string(seen[v]) + " times";
  }
  std::vector<TreeEdge> crossing;
  for (const auto& [u, v] : tree.edges()) {
    if (dec.part_of[u] != dec.part_of[v]) crossing.emplace_back(u, v);
  }
  if (crossing != dec.cut_edges) return "cut edges differ from crossing edges";
  if (dec.cut_edges.size() != k - 1) return "expected k - 1 cut edges";
  std::vector<Vertex> ends;
  for (const auto& [u, v] : crossing) {
    ends.push_back(u);
    ends.push_back(v);
  }
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  if (ends != dec.anchors) return "anchors are not the cut-edge endpoints";
  if (dec.anchors.size() > 2 * k - 2) return "more than 2k - 2 anchors";
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (static_cast<double>(k) > total / dec.m0 * (1 + 1e-12)) return "k exceeds w(T)/m0";
  if (dec.levels != compute_levels(dec, tree)) return "levels are stale";
  return std::nullopt;
}

}  // namespace geotree
