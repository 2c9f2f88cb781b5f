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


#include "geotree/rgg.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "geotree/rng.hpp"

namespace geotree {

namespace {

constexpr std::size_t kSampleBlock = 4096;

}  // namespace

PointSet::PointSet(int d, std::vector<double> coords, std::uint64_t seed)
    : d_(d), coords_(std::move(coords)), seed_(seed) {
  if (d < 1) throw PreconditionError("dimension must be >= 1");
  if (coords_.size() % static_cast<std::size_t>(d) != 0) {
    throw PreconditionError("coordinate count is not a multiple of d");
  }
  for (double v : coords_) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw PreconditionError("point coordinate outside [0,1]");
    }
  }
}

PointSet sample_points(std::size_t n, int d, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("sample_points requires n >= 1");
  if (d < 1) throw PreconditionError("sample_points requires d >= 1");
  std::vector<double> coords(n * static_cast<std::size_t>(d));
  const auto blocks = static_cast<std::int64_t>((n + kSampleBlock - 1) / kSampleBlock);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < blocks; ++b) {
    Rng rng(derive_seed(seed, Stream::points, static_cast<std::uint64_t>(b)));
    const std::size_t begin = static_cast<std::size_t>(b) * kSampleBlock * d;
    const std::size_t end =
        std::min(n, (static_cast<std::size_t>(b) + 1) * kSampleBlock) * d;
    for (std::size_t i = begin; i < end; ++i) coords[i] = uniform01(rng);
  }
  return PointSet(d, std::move(coords), seed);
}

std::size_t ColorAssignment::count(Color c) const {
  return static_cast<std::size_t>(std::count(colors.begin(), colors.end(), c));
}

ColorAssignment color_points(const PointSet& points, double p_blue,
                             std::uint64_t seed) {
  if (!(p_blue >= 0.0 && p_blue <= 1.0)) {
    throw PreconditionError("p_blue must lie in [0,1]");
  }
  const std::size_t n = points.size();
  ColorAssignment out;
  out.p_blue = p_blue;
  out.colors.resize(n);
  const auto blocks = static_cast<std::int64_t>((n + kSampleBlock - 1) / kSampleBlock);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < blocks; ++b) {
    Rng rng(derive_seed(seed, Stream::colors, static_cast<std::uint64_t>(b)));
    const std::size_t begin = static_cast<std::size_t>(b) * kSampleBlock;
    const std::size_t end = std::min(n, begin + kSampleBlock);
    for (std::size_t i = begin; i < end; ++i) {
      out.colors[i] = uniform01(rng) < p_blue ? Color::blue : Color::red;
    }
  }
  return out;
}

bool Box::contains(std::span<const double> x) const {
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] < lo[k] || x[k] > hi[k]) return false;
  }
  return true;
}

bool region_contains(const Region& region, std::span<const double> x) {
  return std::visit([&](const auto& r) { return r.contains(x); }, region);
}

std::size_t count_in_region(const PointSet& points,
                            std::span<const Color> colors, const Region& region,
                            std::optional<Color> filter) {
  if (filter && colors.size() != points.size()) {
    throw PreconditionError("color filter requires one color per point");
  }
  const auto n = static_cast<std::int64_t>(points.size());
  std::size_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    if (filter && colors[static_cast<std::size_t>(i)] != *filter) continue;
    if (region_contains(region, points[static_cast<std::size_t>(i)])) ++total;
  }
  return total;
}

BucketIndex::BucketIndex(const PointSet& points, int per_axis)
    : d_(points.dim()), per_axis_(per_axis) {
  if (per_axis < 1) throw PreconditionError("bucket count per axis must be >= 1");
  std::size_t buckets = 1;
  for (int k = 0; k < d_; ++k) buckets *= static_cast<std::size_t>(per_axis);
  const std::size_t n = points.size();
  std::vector<std::size_t> home(n);
  starts_.assign(buckets + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    home[i] = bucket_of(points[i]);
    ++starts_[home[i] + 1];
  }
  for (std::size_t b = 0; b < buckets; ++b) starts_[b + 1] += starts_[b];
  ids_.resize(n);
  std::vector<std::size_t> fill(starts_.begin(), starts_.end() - 1);
  for (std::size_t i = 0; i < n; ++i) {
    ids_[fill[home[i]]++] = static_cast<PointId>(i);
  }
}

std::size_t BucketIndex::bucket_of(std::span<const double> x) const {
  std::size_t b = 0;
  for (int k = 0; k < d_; ++k) {
    auto g = static_cast<long>(std::floor(x[k] * per_axis_));
    g = std::clamp<long>(g, 0, per_axis_ - 1);
    b = b * per_axis_ + static_cast<std::size_t>(g);
  }
  return b;
}

std::vector<int> BucketIndex::bucket_coords(std::size_t b) const {
  std::vector<int> g(d_);
  for (int k = d_ - 1; k >= 0; --k) {
    g[k] = static_cast<int>(b % per_axis_);
    b /= per_axis_;
  }
  return g;
}

GeometricGraph::GeometricGraph(PointSet points, double r)
    : points_(std::move(points)), r_(r) {
  if (!(r > 0)) throw PreconditionError("radius must be positive");
  const int d = points_.dim();
  // Bucket side >= r, with the total bucket count capped near the point count.
  const double cap = std::max(1024.0, 4.0 * static_cast<double>(points_.size()));
  int per_axis = static_cast<int>(std::min(std::floor(1.0 / r), 1e6));
  per_axis = std::max(1, std::min(per_axis, static_cast<int>(std::floor(
                                                std::pow(cap, 1.0 / d)))));
  index_ = BucketIndex(points_, per_axis);

  std::vector<int> offset(d, -1);
  while (true) {
    stencil_.push_back(offset);
    int k = d - 1;
    while (k >= 0 && offset[k] == 1) {
      offset[k] = -1;
      --k;
    }
    if (k < 0) break;
    ++offset[k];
  }
}

GeometricGraph build_graph(PointSet points, double r) {
  return GeometricGraph(std::move(points), r);
}

bool GeometricGraph::adjacent(PointId u, PointId v) const {
  return u != v && within(points_[u], points_[v], r_);
}

std::vector<Edge> GeometricGraph::edges() const {
  const Adjacency adj = adjacency();
  std::vector<Edge> out;
  out.reserve(adj.edge_count());
  for (std::size_t u = 0; u < adj.size(); ++u) {
    for (PointId v : adj.neighbors(u)) {
      if (u < v) out.emplace_back(static_cast<std::uint32_t>(u), v);
    }
  }
  return out;
}

Adjacency GeometricGraph::adjacency() const {
  const auto n = static_cast<std::int64_t>(size());
  Adjacency adj;
  adj.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t u = 0; u < n; ++u) {
    std::size_t deg = 0;
    for_each_neighbor(static_cast<PointId>(u), [&](PointId) { ++deg; });
    adj.offsets[static_cast<std::size_t>(u) + 1] = deg;
  }
  for (std::size_t u = 0; u < static_cast<std::size_t>(n); ++u) {
    adj.offsets[u + 1] += adj.offsets[u];
  }
  adj.targets.resize(adj.offsets.back());
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t u = 0; u < n; ++u) {
    std::size_t at = adj.offsets[static_cast<std::size_t>(u)];
    const std::size_t begin = at;
    for_each_neighbor(static_cast<PointId>(u),
                      [&](PointId v) { adj.targets[at++] = v; });
    std::sort(adj.targets.begin() + static_cast<std::ptrdiff_t>(begin),
              adj.targets.begin() + static_cast<std::ptrdiff_t>(at));
  }
  return adj;
}

std::vector<std::uint32_t> bfs_distances(const Adjacency& adj, PointId source) {
  std::vector<std::uint32_t> dist(adj.size(), kUnreached);
  std::vector<PointId> queue;
  queue.reserve(adj.size());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const PointId u = queue[head];
    for (PointId v : adj.neighbors(u)) {
      if (dist[v] == kUnreached) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

namespace {

// Eccentricity of `source` and the first vertex attaining it; ecc is
// kUnreached when some vertex is not reached.
std::pair<std::uint32_t, PointId> eccentricity(const Adjacency& adj,
                                               PointId source) {
  const auto dist = bfs_distances(adj, source);
  std::uint32_t ecc = 0;
  PointId far = source;
  for (std::size_t v = 0; v < dist.size(); ++v) {
    if (dist[v] == kUnreached) return {kUnreached, static_cast<PointId>(v)};
    if (dist[v] > ecc) {
      ecc = dist[v];
      far = static_cast<PointId>(v);
    }
  }
  return {ecc, far};
}

}  // namespace

HopDiameter hop_diameter(const Adjacency& adj, std::size_t exact_cutoff,
                         int sweeps) {
  const std::size_t n = adj.size();
  if (n <= 1) return {true, 0, true};
  auto [ecc0, far] = eccentricity(adj, 0);
  if (ecc0 == kUnreached) return {false, 0, true};

  if (n <= exact_cutoff) {
    std::uint32_t best = ecc0;
#pragma omp parallel for reduction(max : best) schedule(dynamic, 16)
    for (std::int64_t src = 1; src < static_cast<std::int64_t>(n); ++src) {
      best = std::max(best, eccentricity(adj, static_cast<PointId>(src)).first);
    }
    return {true, best, true};
  }

  std::uint32_t best = ecc0;
  for (int i = 0; i < sweeps; ++i) {
    auto [ecc, next] = eccentricity(adj, far);
    if (ecc <= best && i > 0) {
      best = std::max(best, ecc);
      break;
    }
    best = std::max(best, ecc);
    far = next;
  }
  return {true, best, false};
}

HopDiameter hop_diameter(const GeometricGraph& graph, std::size_t exact_cutoff) {
  return hop_diameter(graph.adjacency(), exact_cutoff);
}

void write_points_csv(std::ostream& os, const PointSet& points,
                      std::span<const Color> colors) {
  const int d = points.dim();
  for (int k = 0; k < d; ++k) os << 'x' << k << ',';
  os << "color\n";
  const auto old_precision = os.precision(17);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (double v : points[i]) os << v << ',';
    if (!colors.empty()) os << (colors[i] == Color::blue ? "blue" : "red");
    os << '\n';
  }
  os.precision(old_precision);
}

LoadedPoints read_points_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw PreconditionError("empty point CSV");
  const int d = static_cast<int>(std::count(line.begin(), line.end(), ','));
  if (d < 1) throw PreconditionError("point CSV header has no coordinates");
  std::vector<double> coords;
  LoadedPoints out;
  bool any_color = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    for (int k = 0; k < d; ++k) {
      if (!std::getline(row, cell, ',')) {
        throw PreconditionError("short row in point CSV: " + line);
      }
      coords.push_back(std::stod(cell));
    }
    std::getline(row, cell);
    if (cell == "blue") {
      out.colors.colors.push_back(Color::blue);
      any_color = true;
    } else {
      out.colors.colors.push_back(Color::red);
      any_color = any_color || cell == "red";
    }
  }
  out.points = PointSet(d, std::move(coords));
  if (!any_color) out.colors.colors.clear();
  return out;
}

}  // namespace geotree
