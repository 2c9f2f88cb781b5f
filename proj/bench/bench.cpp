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


// Parallel kernels against the serial references in geotree::reference.
// Both sides are checked for equal output before timing starts.

#include <benchmark/benchmark.h>

#include <cmath>
#include <cstdlib>
#include <cstdio>

#include "geotree/reference.hpp"
#include "geotree/rgg.hpp"

namespace {

using namespace geotree;

// Average degree ~ 12 in d = 2.
double radius_for(std::size_t n) { return std::sqrt(12.0 / (3.14159 * static_cast<double>(n))); }

void BM_EdgesBucketed(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const PointSet p = sample_points(n, 2, 1);
  const double r = radius_for(n);
  for (auto _ : st) {
    const GeometricGraph g(p, r);
    benchmark::DoNotOptimize(g.edges());
  }
}

void BM_EdgesBruteForce(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const PointSet p = sample_points(n, 2, 1);
  const double r = radius_for(n);
  for (auto _ : st) benchmark::DoNotOptimize(reference::brute_force_edges(p, r));
}

void BM_AdjacencyBucketed(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const GeometricGraph g(sample_points(n, 2, 2), radius_for(n));
  for (auto _ : st) benchmark::DoNotOptimize(g.adjacency());
}

void BM_AdjacencyBruteForce(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const PointSet p = sample_points(n, 2, 2);
  const double r = radius_for(n);
  for (auto _ : st) benchmark::DoNotOptimize(reference::brute_force_adjacency(p, r));
}

void BM_HopDiameterParallel(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const Adjacency adj = GeometricGraph(sample_points(n, 2, 3), 2 * radius_for(n)).adjacency();
  for (auto _ : st) benchmark::DoNotOptimize(hop_diameter(adj, n));
}

void BM_HopDiameterSerial(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const Adjacency adj = GeometricGraph(sample_points(n, 2, 3), 2 * radius_for(n)).adjacency();
  for (auto _ : st) benchmark::DoNotOptimize(reference::all_pairs_hop_diameter(adj));
}

const Region kBox = Box{{0.2, 0.3}, {0.6, 0.5}};

void BM_CountInRegion(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const PointSet p = sample_points(n, 2, 4);
  const auto colors = color_points(p, 0.5, 4).colors;
  for (auto _ : st) benchmark::DoNotOptimize(count_in_region(p, colors, kBox, Color::red));
}

void BM_CountInRegionSerial(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const PointSet p = sample_points(n, 2, 4);
  const auto colors = color_points(p, 0.5, 4).colors;
  for (auto _ : st) {
    benchmark::DoNotOptimize(reference::count_in_region(p, colors, kBox, Color::red));
  }
}

BENCHMARK(BM_EdgesBucketed)->Arg(2000)->Arg(8000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EdgesBruteForce)->Arg(2000)->Arg(8000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AdjacencyBucketed)->Arg(2000)->Arg(8000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AdjacencyBruteForce)->Arg(2000)->Arg(8000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HopDiameterParallel)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HopDiameterSerial)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountInRegion)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountInRegionSerial)->Arg(1000000)->Unit(benchmark::kMillisecond);

bool outputs_agree() {
  const std::size_t n = 3000;
  const PointSet p = sample_points(n, 2, 5);
  const double r = 2 * radius_for(n);
  const GeometricGraph g(p, r);
  if (g.edges() != reference::brute_force_edges(p, r)) return false;
  const Adjacency adj = g.adjacency();
  const HopDiameter a = hop_diameter(adj, n);
  const HopDiameter b = reference::all_pairs_hop_diameter(adj);
  if (a.connected != b.connected || a.hops != b.hops) return false;
  const auto colors = color_points(p, 0.5, 5).colors;
  return count_in_region(p, colors, kBox, Color::red) ==
         reference::count_in_region(p, colors, kBox, Color::red);
}

}  // namespace

int main(int argc, char** argv) {
  if (!outputs_agree()) {
    std::fprintf(stderr, "parallel and serial kernels disagree\n");
    return EXIT_FAILURE;
  }
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return EXIT_FAILURE;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return EXIT_SUCCESS;
}
