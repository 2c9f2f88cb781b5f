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

// Uniform point clouds in [0,1]^d, red/blue colorings, and the random
// geometric graph G_d(n, r) served by a grid (cell-list) index.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "geotree/geometry.hpp"

namespace geotree {

using PointId = std::uint32_t;

class PointSet {
 public:
  PointSet() = default;
  // coords is row-major, size() * d values.
  PointSet(int d, std::vector<double> coords, std::uint64_t seed = 0);

  int dim() const { return d_; }
  std::size_t size() const { return d_ ? coords_.size() / d_ : 0; }
  std::uint64_t seed() const { return seed_; }
  std::span<const double> operator[](std::size_t i) const {
    return {coords_.data() + i * d_, static_cast<std::size_t>(d_)};
  }
  std::span<const double> coords() const { return coords_; }

 private:
  int d_ = 0;
  std::vector<double> coords_;
  std::uint64_t seed_ = 0;
};

// n i.i.d. uniform points. Generated in fixed blocks with one derived stream
// per block, so the output depends on the seed only, not the thread count.
PointSet sample_points(std::size_t n, int d, std::uint64_t seed);

enum class Color : std::uint8_t { red = 0, blue = 1 };

struct ColorAssignment {
  std::vector<Color> colors;
  double p_blue = 0.5;

  std::size_t count(Color c) const;
};

ColorAssignment color_points(const PointSet& points, double p_blue,
                             std::uint64_t seed);

struct Box {
  std::vector<double> lo;
  std::vector<double> hi;
  bool contains(std::span<const double> x) const;
};

using Region = std::variant<Box, Ball>;

bool region_contains(const Region& region, std::span<const double> x);

// Exact count of points (optionally of one color) in a closed region.
// `colors` may be empty when no filter is given.
std::size_t count_in_region(const PointSet& points,
                            std::span<const Color> colors, const Region& region,
                            std::optional<Color> filter = std::nullopt);

// Uniform grid over [0,1]^d with `per_axis` buckets per axis, stored as a
// counting-sorted id array. Ids within a bucket are ascending.
class BucketIndex {
 public:
  BucketIndex() = default;
  BucketIndex(const PointSet& points, int per_axis);

  int per_axis() const { return per_axis_; }
  std::size_t bucket_count() const { return starts_.empty() ? 0 : starts_.size() - 1; }
  std::size_t bucket_of(std::span<const double> x) const;
  std::vector<int> bucket_coords(std::size_t b) const;
  std::span<const PointId> bucket(std::size_t b) const {
    return {ids_.data() + starts_[b], starts_[b + 1] - starts_[b]};
  }

  // Calls f(id) for each point inside the closed ball.
  template <class F>
  void for_each_in_ball(const PointSet& points, const Ball& ball, F&& f) const;

 private:
  int d_ = 0;
  int per_axis_ = 0;
  std::vector<std::size_t> starts_;
  std::vector<PointId> ids_;
};

// Compressed adjacency lists.
struct Adjacency {
  std::vector<std::size_t> offsets;
  std::vector<PointId> targets;

  std::size_t size() const { return offsets.empty() ? 0 : offsets.size() - 1; }
  std::span<const PointId> neighbors(std::size_t u) const {
    return {targets.data() + offsets[u], offsets[u + 1] - offsets[u]};
  }
  std::size_t edge_count() const { return targets.size() / 2; }
};

using Edge = std::pair<std::uint32_t, std::uint32_t>;

// Edge iff ||p_u - p_v|| <= r. Only the bucket index is built eagerly; the
// edge set is enumerated on demand.
class GeometricGraph {
 public:
  GeometricGraph(PointSet points, double r);

  const PointSet& points() const { return points_; }
  double radius() const { return r_; }
  std::size_t size() const { return points_.size(); }
  const BucketIndex& index() const { return index_; }

  bool adjacent(PointId u, PointId v) const;

  template <class F>
  void for_each_neighbor(PointId u, F&& f) const;

  // Sorted (u < v) edge list; parallel over vertices.
  std::vector<Edge> edges() const;
  Adjacency adjacency() const;

 private:
  PointSet points_;
  double r_;
  BucketIndex index_;
  // Grid offsets scanned around a bucket (3^d neighborhood).
  std::vector<std::vector<int>> stencil_;
};

GeometricGraph build_graph(PointSet points, double r);

struct HopDiameter {
  bool connected = true;
  std::uint32_t hops = 0;
  // false when `hops` is a double-sweep lower bound.
  bool exact = true;
};

inline constexpr std::size_t kDefaultExactDiameterCutoff = 20000;

// Exact all-source BFS (parallel over sources) up to `exact_cutoff`
// vertices, iterated double sweep above it.
HopDiameter hop_diameter(const Adjacency& adj,
                         std::size_t exact_cutoff = kDefaultExactDiameterCutoff,
                         int sweeps = 4);
HopDiameter hop_diameter(const GeometricGraph& graph,
                         std::size_t exact_cutoff = kDefaultExactDiameterCutoff);

inline constexpr std::uint32_t kUnreached = UINT32_MAX;
std::vector<std::uint32_t> bfs_distances(const Adjacency& adj, PointId source);

// CSV: header x0..x{d-1},color then one row per point.
void write_points_csv(std::ostream& os, const PointSet& points,
                      std::span<const Color> colors);
struct LoadedPoints {
  PointSet points;
  ColorAssignment colors;
};
LoadedPoints read_points_csv(std::istream& is);

// ---- template definitions ----

template <class F>
void BucketIndex::for_each_in_ball(const PointSet& points, const Ball& ball,
                                   F&& f) const {
  std::vector<int> lo(d_), hi(d_), g(d_);
  for (int k = 0; k < d_; ++k) {
    auto clampi = [&](double v) {
      int i = static_cast<int>(v * per_axis_);
      return i < 0 ? 0 : (i >= per_axis_ ? per_axis_ - 1 : i);
    };
    lo[k] = clampi(ball.centre[k] - ball.radius);
    hi[k] = clampi(ball.centre[k] + ball.radius);
  }
  g = lo;
  while (true) {
    std::size_t b = 0;
    for (int k = 0; k < d_; ++k) b = b * per_axis_ + g[k];
    for (PointId id : bucket(b)) {
      if (ball.contains(points[id])) f(id);
    }
    int k = d_ - 1;
    while (k >= 0 && g[k] == hi[k]) {
      g[k] = lo[k];
      --k;
    }
    if (k < 0) break;
    ++g[k];
  }
}

template <class F>
void GeometricGraph::for_each_neighbor(PointId u, F&& f) const {
  const auto pu = points_[u];
  const auto home = index_.bucket_coords(index_.bucket_of(pu));
  const int d = points_.dim();
  const int g = index_.per_axis();
  std::vector<int> cell(d);
  for (const auto& offset : stencil_) {
    bool inside = true;
    std::size_t b = 0;
    for (int k = 0; k < d; ++k) {
      cell[k] = home[k] + offset[k];
      if (cell[k] < 0 || cell[k] >= g) {
        inside = false;
        break;
      }
      b = b * g + cell[k];
    }
    if (!inside) continue;
    for (PointId v : index_.bucket(b)) {
      if (v != u && within(pu, points_[v], r_)) f(v);
    }
  }
}

}  // namespace geotree
