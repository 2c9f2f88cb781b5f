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

// The two-step tree embedding into a colored random geometric graph: subtrees
// are routed from the cube centre through transit balls (Step 1) and then
// poured into their target cell and its adjacent successor (Step 2).

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "geotree/decompose.hpp"
#include "geotree/geometry.hpp"
#include "geotree/rgg.hpp"
#include "geotree/trees.hpp"

namespace geotree {

// Tessellation plus the transit balls of every non-central cell, built for a
// fixed epsilon and radius. Cells sharing a successor share their balls.
class RoutingPlan {
 public:
  RoutingPlan(Tessellation tess, double epsilon, double r);

  const Tessellation& tessellation() const { return tess_; }
  double epsilon() const { return epsilon_; }
  double radius() const { return r_; }
  // Balls for a non-central cell.
  const TransitBalls& balls(CellIndex target) const;

 private:
  Tessellation tess_;
  double epsilon_;
  double r_;
  // Indexed by successor cell.
  std::vector<std::optional<TransitBalls>> by_successor_;
};

struct EventAReport {
  bool a1_ok = true;
  bool a2_ok = true;
  // Red points required in every transit ball B_{j,i}, j = 1..eta.
  double a1_threshold = 0;
  // Blue points required in every cell.
  double a2_threshold = 0;
  std::size_t min_ball_red = 0;
  std::size_t min_cell_blue = 0;
  // First violation in ordering position order.
  std::optional<CellIndex> a1_witness_cell;
  std::optional<int> a1_witness_level;
  std::optional<std::size_t> a1_witness_count;
  std::optional<CellIndex> a2_witness_cell;
  std::optional<std::size_t> a2_witness_count;

  bool ok() const { return a1_ok && a2_ok; }
};

EventAReport check_event_A(const PointSet& points, const ColorAssignment& colors,
                           const RoutingPlan& plan);

inline constexpr PointId kUnassigned = UINT32_MAX;

enum class EmbedStatus { success, failure };

struct EmbedFailure {
  std::size_t iteration = 0;  // 1-based subtree index t
  // 0: central-cell fill, 1: transit balls, 2: cell and successor fill,
  // 3: greedy line embedding.
  int step = 0;
  std::string resource;  // "ball", "cell", "central", "window"
  CellIndex cell = kNoCell;
  int ball_level = -1;
  Vertex vertex = 0;
  std::size_t demanded = 0;
  std::size_t available = 0;
};

struct EmbedDiagnostics {
  std::size_t parts = 0;
  std::size_t anchors = 0;
  double m = 0;
  // Ordering position of the target cell chosen at each iteration.
  std::vector<std::size_t> target_positions;
  // Largest number of vertices placed on blue points of one successor cell.
  std::size_t max_successor_overflow = 0;
  std::size_t occupied = 0;
  std::size_t embedded = 0;
  std::size_t part_bound = 0;  // 8 d (delta + 1) s^d
};

struct Embedding {
  std::vector<PointId> map;  // vertex -> point, kUnassigned if not placed
  EmbedStatus status = EmbedStatus::failure;
  std::optional<EmbedFailure> failure;
  EmbedDiagnostics diagnostics;

  bool succeeded() const { return status == EmbedStatus::success; }
};

// Runs the decomposition with the given m, then places subtree t = 1..k by
// the target-cell rule. FAILURE is returned, not thrown; PreconditionError
// is thrown for a size mismatch or a degree above delta.
Embedding embed_tree(const Tree& tree, const GeometricGraph& graph,
                     const ColorAssignment& colors, const RoutingPlan& plan,
                     double m, int delta);

struct Verification {
  bool ok = false;
  std::string reason;
  std::optional<TreeEdge> edge;
};

// Direct distance check of a claimed embedding: injective, total, and every
// tree edge at distance <= r.
Verification verify_embedding(const Tree& tree, const GeometricGraph& graph,
                              const Embedding& embedding);

// d = 1: BFS from vertex 0, root at the left-most point, every later vertex
// at the left-most unoccupied point within r of its parent's point.
Embedding greedy_line_embed(const Tree& tree, const GeometricGraph& graph);

nlohmann::json failure_to_json(const EmbedFailure& failure);
nlohmann::json event_a_to_json(const EventAReport& report);

// vertex,point,x0..x{d-1}; unassigned vertices are skipped.
void write_embedding_csv(std::ostream& os, const Embedding& embedding,
                         const PointSet& points);

}  // namespace geotree
