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


#include "geotree/embed.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <unordered_map>

namespace geotree {

RoutingPlan::RoutingPlan(Tessellation tess, double epsilon, double r)
    : tess_(std::move(tess)), epsilon_(epsilon), r_(r) {
  by_successor_.resize(tess_.cell_count());
  for (CellIndex target : tess_.ordering()) {
    if (target == tess_.central_cell()) continue;
    const CellIndex next = tess_.successor(target);
    auto& slot = by_successor_[static_cast<std::size_t>(next)];
    if (!slot) {
      slot = transit_balls(tess_, target, epsilon, r);
      continue;
    }
    // Same balls, different target: only the later-cell property can change.
    for (CellIndex host : slot->host_cells) {
      if (tess_.position(host) <= tess_.position(target)) {
        throw InfeasibleError("transit ball precedes target cell " +
                              std::to_string(target));
      }
    }
  }
}

const TransitBalls& RoutingPlan::balls(CellIndex target) const {
  if (target == tess_.central_cell()) {
    throw PreconditionError("the central cell has no transit balls");
  }
  return *by_successor_[static_cast<std::size_t>(tess_.successor(target))];
}

namespace {

std::vector<PointId> red_points_in(const PointSet& points,
                                   const ColorAssignment& colors,
                                   const BucketIndex& index, const Ball& ball) {
  std::vector<PointId> out;
  index.for_each_in_ball(points, ball, [&](PointId id) {
    if (colors.colors[id] == Color::red) out.push_back(id);
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

EventAReport check_event_A(const PointSet& points, const ColorAssignment& colors,
                           const RoutingPlan& plan) {
  const Tessellation& tess = plan.tessellation();
  const int d = tess.dim();
  const int s = tess.side();
  const double n = static_cast<double>(points.size());
  EventAReport report;
  report.a1_threshold = std::pow(d, -d / 2.0) *
                        std::pow(plan.epsilon() / (std::ldexp(1.0, d) * 10.0 * s), d) *
                        n / 4.0;
  report.a2_threshold = 3.0 / 8.0 * std::pow(s, -d) * n;

  const BucketIndex index(points, s);
  report.min_cell_blue = SIZE_MAX;
  for (CellIndex c : tess.ordering()) {
    std::size_t blue = 0;
    for (PointId id : index.bucket(static_cast<std::size_t>(c))) {
      if (colors.colors[id] == Color::blue) ++blue;
    }
    report.min_cell_blue = std::min(report.min_cell_blue, blue);
    if (static_cast<double>(blue) < report.a2_threshold && report.a2_ok) {
      report.a2_ok = false;
      report.a2_witness_cell = c;
      report.a2_witness_count = blue;
    }
  }

  std::unordered_map<CellIndex, std::vector<std::size_t>> red_by_successor;
  report.min_ball_red = SIZE_MAX;
  for (CellIndex target : tess.ordering()) {
    if (target == tess.central_cell()) continue;
    const TransitBalls& tb = plan.balls(target);
    auto [it, fresh] = red_by_successor.try_emplace(tb.successor);
    if (fresh) {
      for (const Ball& ball : tb.balls) {
        it->second.push_back(red_points_in(points, colors, index, ball).size());
      }
    }
    for (int j = 1; j <= tess.eta(); ++j) {
      const std::size_t red = it->second[static_cast<std::size_t>(j)];
      report.min_ball_red = std::min(report.min_ball_red, red);
      if (static_cast<double>(red) < report.a1_threshold && report.a1_ok) {
        report.a1_ok = false;
        report.a1_witness_cell = target;
        report.a1_witness_level = j;
        report.a1_witness_count = red;
      }
    }
  }
  if (report.min_ball_red == SIZE_MAX) report.min_ball_red = 0;
  return report;
}

namespace {

// Ascending-id list of candidate points consumed through a cursor that skips
// points occupied by other means.
struct PointQueue {
  std::vector<PointId> ids;
  std::size_t cursor = 0;

  std::size_t available(const std::vector<char>& occupied) {
    skip(occupied);
    std::size_t count = 0;
    for (std::size_t i = cursor; i < ids.size(); ++i) {
      if (!occupied[ids[i]]) ++count;
    }
    return count;
  }
  PointId take(const std::vector<char>& occupied) {
    skip(occupied);
    return ids[cursor++];
  }
  void skip(const std::vector<char>& occupied) {
    while (cursor < ids.size() && occupied[ids[cursor]]) ++cursor;
  }
};

class Embedder {
 public:
  Embedder(const Tree& tree, const GeometricGraph& graph,
           const ColorAssignment& colors, const RoutingPlan& plan)
      : tree_(tree),
        points_(graph.points()),
        colors_(colors),
        plan_(plan),
        tess_(plan.tessellation()),
        index_(points_, tess_.side()),
        occupied_(points_.size(), 0),
        free_in_cell_(tess_.cell_count()),
        free_blue_(tess_.cell_count(), 0),
        mark_(tree.size(), 0),
        cell_of_(points_.size()),
        cell_queue_(tess_.cell_count()),
        blue_queue_(tess_.cell_count()),
        overflow_(tess_.cell_count(), 0) {
    for (std::size_t c = 0; c < tess_.cell_count(); ++c) {
      const auto ids = index_.bucket(c);
      free_in_cell_[c] = ids.size();
      cell_queue_[c].ids.assign(ids.begin(), ids.end());
      for (PointId id : ids) {
        cell_of_[id] = static_cast<CellIndex>(c);
        if (colors_.colors[id] == Color::blue) {
          blue_queue_[c].ids.push_back(id);
          ++free_blue_[c];
        }
      }
    }
  }

  Embedding run(const Decomposition& dec) {
    Embedding out;
    out.map.assign(tree_.size(), kUnassigned);
    auto& diag = out.diagnostics;
    diag.parts = dec.part_count();
    diag.anchors = dec.anchors.size();
    diag.m = dec.m;

    std::size_t pos = 0;
    const auto order = tess_.ordering();
    for (std::size_t t = 0; t < dec.part_count(); ++t) {
      while (pos < order.size() &&
             free_in_cell_[static_cast<std::size_t>(order[pos])] == 0) {
        ++pos;
      }
      if (pos == order.size()) {
        // More vertices than points cannot happen after the size check.
        out.failure = EmbedFailure{t + 1, 0, "central", tess_.central_cell(), -1,
                                   dec.parts[t].front(), dec.parts[t].size(), 0};
        break;
      }
      diag.target_positions.push_back(pos);
      const CellIndex target = order[pos];
      const auto vertices = part_order(dec, t);
      std::optional<EmbedFailure> failure =
          target == tess_.central_cell()
              ? place_central(vertices, t, out.map)
              : place_routed(dec, vertices, t, target, out.map);
      if (failure) {
        out.failure = failure;
        break;
      }
    }
    diag.max_successor_overflow =
        *std::max_element(overflow_.begin(), overflow_.end());
    diag.occupied = static_cast<std::size_t>(
        std::count(occupied_.begin(), occupied_.end(), 1));
    diag.embedded = static_cast<std::size_t>(std::count_if(
        out.map.begin(), out.map.end(), [](PointId p) { return p != kUnassigned; }));
    out.status = out.failure ? EmbedStatus::failure : EmbedStatus::success;
    return out;
  }

 private:
  // Vertices of part t in BFS order from its anchors (ascending), hence in
  // non-decreasing level.
  std::vector<Vertex> part_order(const Decomposition& dec, std::size_t t) {
    const auto& part = dec.parts[t];
    std::vector<Vertex> order;
    order.reserve(part.size());
    for (Vertex v : part) {
      if (std::binary_search(dec.anchors.begin(), dec.anchors.end(), v)) {
        order.push_back(v);
        mark_[v] = 1;
      }
    }
    if (order.empty()) {
      order.push_back(part.front());
      mark_[part.front()] = 1;
    }
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (Vertex y : tree_.neighbors(order[head])) {
        if (dec.part_of[y] == t && !mark_[y]) {
          mark_[y] = 1;
          order.push_back(y);
        }
      }
    }
    return order;
  }

  void occupy(Vertex v, PointId p, std::vector<PointId>& map) {
    occupied_[p] = 1;
    const auto c = static_cast<std::size_t>(cell_of_[p]);
    --free_in_cell_[c];
    if (colors_.colors[p] == Color::blue) --free_blue_[c];
    map[v] = p;
  }

  std::optional<EmbedFailure> place_central(const std::vector<Vertex>& vertices,
                                            std::size_t t,
                                            std::vector<PointId>& map) {
    const CellIndex c = tess_.central_cell();
    auto& queue = cell_queue_[static_cast<std::size_t>(c)];
    const std::size_t available = free_in_cell_[static_cast<std::size_t>(c)];
    if (available < vertices.size()) {
      return EmbedFailure{t + 1, 0, "central", c, -1, vertices.front(),
                          vertices.size(), available};
    }
    for (Vertex v : vertices) occupy(v, queue.take(occupied_), map);
    return std::nullopt;
  }

  PointQueue& ball_queue(CellIndex successor, int level, const Ball& ball) {
    const auto key = static_cast<std::size_t>(successor) *
                         static_cast<std::size_t>(tess_.eta() + 1) +
                     static_cast<std::size_t>(level);
    auto [it, fresh] = ball_queues_.try_emplace(key);
    if (fresh) it->second.ids = red_points_in(points_, colors_, index_, ball);
    return it->second;
  }

  std::optional<EmbedFailure> place_routed(const Decomposition& dec,
                                           const std::vector<Vertex>& vertices,
                                           std::size_t t, CellIndex target,
                                           std::vector<PointId>& map) {
    const TransitBalls& tb = plan_.balls(target);
    const int eta = tess_.eta();
    std::size_t at = 0;
    // Step 1: level j into unoccupied red points of ball j.
    for (int j = 0; j <= eta && at < vertices.size(); ++j) {
      std::size_t end = at;
      while (end < vertices.size() &&
             dec.levels[vertices[end]] == static_cast<std::uint32_t>(j)) {
        ++end;
      }
      if (end == at) continue;
      auto& queue = ball_queue(tb.successor, j, tb.balls[static_cast<std::size_t>(j)]);
      const std::size_t available = queue.available(occupied_);
      if (available < end - at) {
        return EmbedFailure{t + 1, 1, "ball", target, j, vertices[at], end - at,
                            available};
      }
      for (; at < end; ++at) occupy(vertices[at], queue.take(occupied_), map);
    }
    if (at == vertices.size()) return std::nullopt;

    // Step 2: the rest into the target cell, then blue points of its successor.
    const std::size_t rest = vertices.size() - at;
    auto& cell = cell_queue_[static_cast<std::size_t>(target)];
    auto& blue = blue_queue_[static_cast<std::size_t>(tb.successor)];
    const std::size_t in_cell = free_in_cell_[static_cast<std::size_t>(target)];
    const std::size_t in_blue = free_blue_[static_cast<std::size_t>(tb.successor)];
    if (in_cell + in_blue < rest) {
      return EmbedFailure{t + 1, 2, "cell", target, -1, vertices[at], rest,
                          in_cell + in_blue};
    }
    for (; at < vertices.size(); ++at) {
      if (free_in_cell_[static_cast<std::size_t>(target)] > 0) {
        occupy(vertices[at], cell.take(occupied_), map);
      } else {
        occupy(vertices[at], blue.take(occupied_), map);
        ++overflow_[static_cast<std::size_t>(tb.successor)];
      }
    }
    return std::nullopt;
  }

  const Tree& tree_;
  const PointSet& points_;
  const ColorAssignment& colors_;
  const RoutingPlan& plan_;
  const Tessellation& tess_;
  BucketIndex index_;
  std::vector<char> occupied_;
  std::vector<std::size_t> free_in_cell_;
  std::vector<std::size_t> free_blue_;
  std::vector<char> mark_;
  std::vector<CellIndex> cell_of_;
  std::vector<PointQueue> cell_queue_;
  std::vector<PointQueue> blue_queue_;
  std::unordered_map<std::size_t, PointQueue> ball_queues_;
  std::vector<std::size_t> overflow_;
};

}  // namespace

Embedding embed_tree(const Tree& tree, const GeometricGraph& graph,
                     const ColorAssignment& colors, const RoutingPlan& plan,
                     double m, int delta) {
  const std::size_t n = tree.size();
  if (graph.size() != n) {
    throw PreconditionError("tree and point set sizes differ");
  }
  if (colors.colors.size() != n) {
    throw PreconditionError("one color per point required");
  }
  if (graph.points().dim() != plan.tessellation().dim()) {
    throw PreconditionError("point and tessellation dimensions differ");
  }
  if (tree.max_degree() > static_cast<std::size_t>(delta)) {
    throw PreconditionError("tree degree exceeds delta");
  }
  if (n == 1) {
    Embedding out;
    out.map = {0};
    out.status = EmbedStatus::success;
    out.diagnostics.parts = 1;
    out.diagnostics.occupied = out.diagnostics.embedded = 1;
    return out;
  }
  const Decomposition dec = split_tree(tree, m, delta);
  Embedder embedder(tree, graph, colors, plan);
  Embedding out = embedder.run(dec);
  const auto& tess = plan.tessellation();
  out.diagnostics.part_bound = static_cast<std::size_t>(
      8.0 * tess.dim() * (delta + 1.0) * static_cast<double>(tess.cell_count()));
  return out;
}

Verification verify_embedding(const Tree& tree, const GeometricGraph& graph,
                              const Embedding& embedding) {
  Verification result;
  const std::size_t n = tree.size();
  const PointSet& points = graph.points();
  if (embedding.map.size() != n) {
    result.reason = "map size differs from tree size";
    return result;
  }
  std::vector<char> used(points.size(), 0);
  for (Vertex v = 0; v < n; ++v) {
    const PointId p = embedding.map[v];
    if (p == kUnassigned || p >= points.size()) {
      result.reason = "vertex " + std::to_string(v) + " is not mapped";
      return result;
    }
    if (used[p]) {
      result.reason = "point " + std::to_string(p) + " used twice";
      return result;
    }
    used[p] = 1;
  }
  const double r2 = graph.radius() * graph.radius();
  for (const auto& [u, v] : tree.edges()) {
    const auto x = points[embedding.map[u]];
    const auto y = points[embedding.map[v]];
    double acc = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      acc += (x[k] - y[k]) * (x[k] - y[k]);
    }
    if (acc > r2) {
      result.reason = "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") spans " + std::to_string(std::sqrt(acc)) + " > r";
      result.edge = TreeEdge{u, v};
      return result;
    }
  }
  result.ok = true;
  return result;
}

Embedding greedy_line_embed(const Tree& tree, const GeometricGraph& graph) {
  const PointSet& points = graph.points();
  const std::size_t n = tree.size();
  if (points.dim() != 1) throw PreconditionError("greedy_line_embed needs d = 1");
  if (points.size() != n) throw PreconditionError("tree and point set sizes differ");

  std::vector<PointId> by_x(n);
  std::iota(by_x.begin(), by_x.end(), PointId{0});
  std::stable_sort(by_x.begin(), by_x.end(), [&](PointId a, PointId b) {
    return points[a][0] < points[b][0];
  });
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = points[by_x[i]][0];

  // next_free[i]: smallest unoccupied sorted index >= i (path-halving DSU).
  std::vector<std::size_t> next_free(n + 1);
  std::iota(next_free.begin(), next_free.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (next_free[i] != i) {
      next_free[i] = next_free[next_free[i]];
      i = next_free[i];
    }
    return i;
  };

  Embedding out;
  out.map.assign(n, kUnassigned);
  std::vector<std::size_t> slot_of(n);
  auto place = [&](Vertex v, std::size_t slot) {
    out.map[v] = by_x[slot];
    slot_of[v] = slot;
    next_free[slot] = slot + 1;
  };
  place(0, 0);
  std::vector<Vertex> queue{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  const double r = graph.radius();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex parent = queue[head];
    const double xp = xs[slot_of[parent]];
    const auto parent_point = points[out.map[parent]];
    for (Vertex child : tree.neighbors(parent)) {
      if (seen[child]) continue;
      seen[child] = 1;
      const auto lo = static_cast<std::size_t>(
          std::lower_bound(xs.begin(), xs.end(), xp - r) - xs.begin());
      std::size_t slot = find(lo == 0 ? 0 : lo - 1);
      while (slot < n && xs[slot] < xp &&
             !within(points[by_x[slot]], parent_point, r)) {
        slot = find(slot + 1);
      }
      if (slot == n || !within(points[by_x[slot]], parent_point, r)) {
        out.failure = EmbedFailure{head + 1, 3, "window", kNoCell, -1, child, 1, 0};
        out.diagnostics.embedded = queue.size();
        out.diagnostics.occupied = queue.size();
        return out;
      }
      place(child, slot);
      queue.push_back(child);
    }
  }
  out.status = EmbedStatus::success;
  out.diagnostics.parts = 1;
  out.diagnostics.embedded = out.diagnostics.occupied = n;
  return out;
}

nlohmann::json failure_to_json(const EmbedFailure& f) {
  return {{"iteration", f.iteration}, {"step", f.step},
          {"resource", f.resource},   {"cell", f.cell},
          {"ball_level", f.ball_level}, {"vertex", f.vertex},
          {"demanded", f.demanded},   {"available", f.available}};
}

nlohmann::json event_a_to_json(const EventAReport& r) {
  nlohmann::json j = {{"a1_ok", r.a1_ok},
                      {"a2_ok", r.a2_ok},
                      {"a1_threshold", r.a1_threshold},
                      {"a2_threshold", r.a2_threshold},
                      {"min_ball_red", r.min_ball_red},
                      {"min_cell_blue", r.min_cell_blue}};
  if (r.a1_witness_cell) {
    j["a1_witness"] = {{"cell", *r.a1_witness_cell},
                       {"level", *r.a1_witness_level},
                       {"count", *r.a1_witness_count}};
  }
  if (r.a2_witness_cell) {
    j["a2_witness"] = {{"cell", *r.a2_witness_cell},
                       {"count", *r.a2_witness_count}};
  }
  return j;
}

void write_embedding_csv(std::ostream& os, const Embedding& embedding,
                         const PointSet& points) {
  os << "vertex,point";
  for (int k = 0; k < points.dim(); ++k) os << ",x" << k;
  os << '\n';
  const auto old_precision = os.precision(17);
  for (std::size_t v = 0; v < embedding.map.size(); ++v) {
    const PointId p = embedding.map[v];
    if (p == kUnassigned) continue;
    os << v << ',' << p;
    for (double x : points[p]) os << ',' << x;
    os << '\n';
  }
  os.precision(old_precision);
}

}  // namespace geotree
