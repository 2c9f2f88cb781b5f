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


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All sample sizes, seeds and tolerances are fixed here.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "geotree/decompose.hpp"
#include "geotree/embed.hpp"
#include "geotree/harness.hpp"
#include "geotree/reference.hpp"
#include "geotree/rng.hpp"
#include "geotree/stats.hpp"

namespace {

using namespace geotree;

struct Outcome {
  bool pass = false;
  std::string detail;
};

// 1. Bucket-indexed edge sets equal the all-pairs edge sets.
Outcome graph_oracle() {
  constexpr int kInstances = 100;
  constexpr std::size_t kMaxN = 500;
  Rng rng(derive_seed(1001, Stream::trial));
  int agree = 0;
  std::size_t edges = 0;
  for (int i = 0; i < kInstances; ++i) {
    const int d = 1 + static_cast<int>(uniform_below(rng, 3));
    const std::size_t n = 1 + uniform_below(rng, kMaxN);
    const double r = std::sqrt(d) * (0.005 + 0.4 * uniform01(rng));
    const PointSet p = sample_points(n, d, rng());
    const GeometricGraph g(p, r);
    const auto fast = g.edges();
    edges += fast.size();
    agree += fast == reference::brute_force_edges(p, r);
  }
  return {agree == kInstances, std::to_string(agree) + "/" + std::to_string(kInstances) +
                                   " instances exact, " + std::to_string(edges) + " edges"};
}

// 2. Tree division invariants on random bounded-degree trees.
Outcome divide_suite() {
  constexpr int kTrees = 1000;
  Rng rng(derive_seed(1002, Stream::tree));
  int ok = 0;
  std::string first;
  for (int i = 0; i < kTrees; ++i) {
    const int delta = 2 + static_cast<int>(uniform_below(rng, 5));
    const std::size_t n = 2 + uniform_below(rng, 199);
    Tree t = path_tree(n);
    switch (uniform_below(rng, 3)) {
      case 0: t = random_bounded_degree_tree(n, delta, rng()); break;
      case 1: if (delta >= 3) t = truncated_regular_tree(n, delta); break;
      default: t = uniform_random_tree(n, rng()); break;
    }
    if (t.max_degree() > static_cast<std::size_t>(delta)) {
      t = random_bounded_degree_tree(n, delta, rng());
    }
    const double m0_target =
        1.0 + uniform01(rng) * std::max(0.0, static_cast<double>(n) / (8.0 * delta) - 1.0);
    const double m = m0_target * (delta + 1);
    const std::vector<double> unit(n, 1.0);
    const Decomposition dec = split_tree(t, unit, m, delta);
    const auto err = validate_decomposition(dec, t, unit);
    if (!err) {
      ++ok;
    } else if (first.empty()) {
      first = "; first violation: " + *err;
    }
  }
  return {ok == kTrees, std::to_string(ok) + "/" + std::to_string(kTrees) + " trees valid" + first};
}

// 3. Every successful embedding passes the direct distance check.
Outcome embedding_soundness() {
  constexpr int kTrials = 500;
  constexpr std::size_t kMinSuccesses = 100;
  Rng rng(derive_seed(1003, Stream::trial));
  const TreeFamily families[] = {TreeFamily::bounded_random, TreeFamily::uniform,
                                 TreeFamily::path, TreeFamily::truncated_regular};
  std::size_t successes = 0, failures = 0, infeasible = 0, unsound = 0;
  for (int i = 0; i < kTrials; ++i) {
    ExperimentConfig cfg;
    cfg.d = 2;
    cfg.delta = 3 + static_cast<int>(uniform_below(rng, 2));
    cfg.family = families[i % 4];
    double r;
    if (i % 2 == 0) {
      // Coarse regime in which the algorithm completes.
      cfg.n = 100000;
      cfg.epsilon_override = 4.9;
      cfg.m_cell_fraction = 0.2;
      r = 1.3 + 0.114 * uniform01(rng);
    } else {
      cfg.d = 1 + static_cast<int>(uniform_below(rng, 3));
      cfg.n = 500 + uniform_below(rng, 20000);
      cfg.epsilon_override = 0.5 + 4.4 * uniform01(rng);
      cfg.m_cell_fraction = 0.05 + 0.5 * uniform01(rng);
      r = std::sqrt(cfg.d) * (0.05 + 0.95 * uniform01(rng));
    }
    TrialArtifacts art;
    const TrialRecord rec = run_universality_trial(cfg, r, rng(), static_cast<std::size_t>(i), &art);
    if (rec.status == TrialStatus::success) {
      ++successes;
      const GeometricGraph g(*art.points, r);
      if (!verify_embedding(*art.tree, g, art.embedding).ok || !rec.validated) ++unsound;
    } else if (rec.status == TrialStatus::failure) {
      ++failures;
    } else {
      ++infeasible;
    }
  }
  return {unsound == 0 && successes >= kMinSuccesses,
          std::to_string(successes) + " successes all validated (" + std::to_string(unsound) +
              " unsound), " + std::to_string(failures) + " FAILURE, " +
              std::to_string(infeasible) + " infeasible"};
}

std::vector<double> in_ball(const Ball& b, Rng& rng) {
  std::normal_distribution<double> gauss;
  const std::size_t d = b.centre.size();
  std::vector<double> x(d);
  double norm = 0;
  for (auto& v : x) {
    v = gauss(rng);
    norm += v * v;
  }
  const double scale = b.radius * std::pow(uniform01(rng), 1.0 / static_cast<double>(d)) /
                       std::sqrt(norm);
  for (std::size_t k = 0; k < d; ++k) x[k] = b.centre[k] + x[k] * scale;
  return x;
}

// 4. Ball routing properties and the successor distance bound.
Outcome geometry_suite() {
  constexpr int kConfigs = 100;
  constexpr int kPairs = 10000;
  Rng rng(derive_seed(1004, Stream::trial));
  int ok_configs = 0;
  std::string first;
  for (int c = 0; c < kConfigs; ++c) {
    const int d = 1 + static_cast<int>(uniform_below(rng, 3));
    const int s = 3 + 2 * static_cast<int>(uniform_below(rng, 20));
    const double eps = std::max(1e-3, uniform01(rng));
    // r_c for which s sits at the middle of the admissible width range.
    const double mid_factor = ((1 + eps / 2) / 3 + (1 + 2 * eps / 3) / 2) / 2;
    const double r_c = std::sqrt(d) / s / mid_factor;
    const double r = (1 + eps) * r_c;
    bool ok = choose_odd_s_for_radius(d, r_c, eps) == s;
    const Tessellation t(d, s);
    std::map<CellIndex, TransitBalls> cache;
    std::size_t violations = 0;
    try {
      for (int i = 0; i < kPairs; ++i) {
        CellIndex q = t.central_cell();
        while (q == t.central_cell()) q = static_cast<CellIndex>(uniform_below(rng, t.cell_count()));
        auto it = cache.find(q);
        if (it == cache.end()) it = cache.emplace(q, transit_balls(t, q, eps, r)).first;
        const TransitBalls& tb = it->second;
        const std::size_t j = uniform_below(rng, tb.balls.size() - 1);
        const auto x = in_ball(tb.balls[j], rng);
        const auto y = in_ball(tb.balls[j + 1], rng);
        // P1: sampled ball points lie in a cell after q.
        if (!t.contains(tb.host_cells[j], x) || t.position(tb.host_cells[j]) <= t.position(q)) ++violations;
        // P2: first ball central, last ball in the successor.
        if (!t.contains(t.central_cell(), in_ball(tb.balls.front(), rng)) ||
            !t.contains(tb.successor, in_ball(tb.balls.back(), rng))) {
          ++violations;
        }
        // P3: consecutive balls within r.
        if (!within(x, y, r)) ++violations;
        // Successor bound: x in q, y in nu(q).
        const auto gq = t.grid_coords(q);
        const auto gn = t.grid_coords(tb.successor);
        std::vector<double> a(d), b(d);
        for (int k = 0; k < d; ++k) {
          a[k] = (gq[k] + uniform01(rng)) / s;
          b[k] = (gn[k] + uniform01(rng)) / s;
        }
        if (!within(a, b, 2 * std::sqrt(d) / s) || !within(a, b, r)) ++violations;
      }
    } catch (const std::exception& e) {
      ok = false;
      if (first.empty()) first = std::string("; ") + e.what();
    }
    if (violations > 0 && first.empty()) {
      first = "; violations at d=" + std::to_string(d) + " s=" + std::to_string(s);
    }
    ok_configs += ok && violations == 0;
  }
  return {ok_configs == kConfigs, std::to_string(ok_configs) + "/" + std::to_string(kConfigs) +
                                      " configurations clean over " + std::to_string(kPairs) +
                                      " samples each" + first};
}

// 5. Hop diameter above twice the height of the truncated regular tree.
Outcome lower_bound() {
  constexpr std::size_t kN = 30000;
  constexpr std::size_t kTrials = 20;
  constexpr std::size_t kRequired = 18;
  const double r = 0.6 * critical_radius(kN, 2, 3);
  const LowerBoundRecord rec = run_lower_bound_experiment(kN, 2, 3, r, kTrials, 1005);
  std::uint32_t lo = UINT32_MAX, hi = 0;
  for (const auto& t : rec.trials) {
    lo = std::min(lo, t.hops);
    hi = std::max(hi, t.hops);
  }
  return {rec.obstructions >= kRequired,
          std::to_string(rec.obstructions) + "/" + std::to_string(kTrials) +
              " obstructed (need " + std::to_string(kRequired) + "), hops " + std::to_string(lo) +
              ".." + std::to_string(hi) + " vs 2h = " + std::to_string(2 * rec.h)};
}

// 6. Counts in a box of volume a, thinned with probability p.
Outcome concentration() {
  constexpr double kMaxFrequency = 0.05;
  const ConcentrationRecord rec = run_concentration_check(100000, 0.04, 0.5, 200, 1006);
  char buf[160];
  std::snprintf(buf, sizeof buf, "violation frequency %.4f (%zu/200), bound %.4f, limit %.2f",
                rec.frequency, rec.violations, rec.bound, kMaxFrequency);
  return {rec.frequency <= kMaxFrequency, buf};
}

// 7. Success frequency of the embedding versus r, simulation mode.
Outcome threshold_curve() {
  constexpr double kLowMax = 0.1;
  constexpr double kHighMin = 0.9;
  ExperimentConfig cfg;
  cfg.n = 100000;
  cfg.d = 2;
  cfg.delta = 3;
  cfg.family = TreeFamily::bounded_random;
  cfg.r_multiples = {0.5, 1, 2, 4, 8, 16, 24, 32, 40};
  cfg.trials = 30;
  cfg.seed = 1007;
  cfg.mode = Mode::simulation;
  cfg.epsilon_override = 4.9;
  cfg.m_cell_fraction = 0.2;
  const ThresholdCurve curve = run_threshold_sweep(cfg);
  std::string freqs;
  for (const auto& p : curve.points) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%s%g:%.2f", freqs.empty() ? "" : " ", p.r_over_rc, p.frequency);
    freqs += buf;
  }
  const bool ok = curve.non_decreasing() && curve.points.front().frequency <= kLowMax &&
                  curve.points.back().frequency >= kHighMin;
  return {ok, "r/r_c:freq " + freqs + (curve.non_decreasing() ? ", monotone" : ", NOT monotone")};
}

// 8. Prufer-decoded trees on 4 vertices are uniform over the 16 labeled trees.
Outcome prufer_uniformity() {
  constexpr std::size_t kDraws = 16000;
  constexpr double kAlpha = 0.01;
  std::map<std::vector<TreeEdge>, std::size_t> counts;
  for (std::size_t i = 0; i < kDraws; ++i) {
    ++counts[uniform_random_tree(4, derive_seed(1008, Stream::tree, i)).edges()];
  }
  std::vector<std::size_t> observed;
  for (const auto& [edges, c] : counts) observed.push_back(c);
  observed.resize(16, 0);
  const std::vector<double> expected(16, kDraws / 16.0);
  const double stat = chi_square_statistic(observed, expected);
  const double crit = chi_square_critical(15, kAlpha);
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu distinct trees, chi2 = %.3f, critical %.3f", counts.size(),
                stat, crit);
  return {counts.size() == 16 && stat <= crit, buf};
}

// 9. Greedy line embedding of uniform trees at r = c / sqrt(n).
Outcome line_curve() {
  constexpr double kLowMax = 0.2;
  constexpr double kHighMin = 0.8;
  const Prop1Curve curve = run_prop1_experiment(4096, {0.05, 0.2, 1, 5, 20}, 50, 1009);
  std::string freqs;
  for (const auto& p : curve.points) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%s%g:%.2f", freqs.empty() ? "" : " ", p.c, p.frequency);
    freqs += buf;
  }
  const bool ok = curve.non_decreasing() && curve.points.front().frequency < kLowMax &&
                  curve.points.back().frequency > kHighMin;
  return {ok, "c:freq " + freqs + (curve.non_decreasing() ? ", monotone" : ", NOT monotone")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"graph build matches brute force", graph_oracle},
      {"tree division invariants", divide_suite},
      {"embedding soundness", embedding_soundness},
      {"ball routing and successor geometry", geometry_suite},
      {"diameter obstruction below threshold", lower_bound},
      {"point-count concentration", concentration},
      {"threshold curve", threshold_curve},
      {"Prufer uniformity", prufer_uniformity},
      {"greedy line embedding curve", line_curve},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu %s: %s (%s) [%.1fs]\n", i + 1, out.pass ? "PASS" : "FAIL",
                criteria[i].first, out.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !out.pass;
  }
  return failed == 0 ? 0 : 1;
}
