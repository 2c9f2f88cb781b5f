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


#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "geotree/harness.hpp"
#include "geotree/reference.hpp"

namespace geotree {
namespace {

ExperimentConfig coarse_config(std::size_t n) {
  ExperimentConfig cfg;
  cfg.n = n;
  cfg.d = 2;
  cfg.delta = 3;
  cfg.family = TreeFamily::bounded_random;
  cfg.epsilon_override = 4.9;
  cfg.m_cell_fraction = 0.2;
  cfg.trials = 3;
  cfg.seed = 42;
  return cfg;
}

TEST(Config, Validation) {
  ExperimentConfig cfg = coarse_config(100);
  cfg.r_values = {0.5};
  EXPECT_NO_THROW(cfg.validate());
  cfg.trials = 0;
  EXPECT_THROW(cfg.validate(), PreconditionError);
  cfg.trials = 1;
  cfg.r_values = {};
  EXPECT_THROW(cfg.validate(), PreconditionError);
  cfg.r_values = {-0.1};
  EXPECT_THROW(cfg.validate(), PreconditionError);
  EXPECT_THROW(parse_family("binary"), PreconditionError);
  EXPECT_EQ(parse_mode("asymptotic"), Mode::asymptotic);
}

TEST(Config, RadiiFromMultiples) {
  ExperimentConfig cfg = coarse_config(10000);
  cfg.r_values = {0.3};
  cfg.r_multiples = {2};
  const auto radii = cfg.radii();
  ASSERT_EQ(radii.size(), 2u);
  EXPECT_EQ(radii[0], 0.3);
  EXPECT_DOUBLE_EQ(radii[1], 2 * critical_radius(10000, 2, 3));
}

TEST(Trial, SingleVertex) {
  ExperimentConfig cfg = coarse_config(1);
  const TrialRecord rec = run_universality_trial(cfg, 0.1, 5);
  EXPECT_EQ(rec.status, TrialStatus::success);
  EXPECT_TRUE(rec.validated);
}

TEST(Trial, AsymptoticModeReportsInfeasible) {
  ExperimentConfig cfg = coarse_config(100000);
  cfg.mode = Mode::asymptotic;
  const TrialRecord rec = run_universality_trial(cfg, 0.5, 5);
  EXPECT_EQ(rec.status, TrialStatus::infeasible);
  EXPECT_FALSE(rec.reason.empty());
}

TEST(Trial, ReplayIsIdentical) {
  ExperimentConfig cfg = coarse_config(100000);
  TrialArtifacts a, b;
  const TrialRecord x = run_universality_trial(cfg, 1.2, 9, 0, &a);
  const TrialRecord y = run_universality_trial(cfg, 1.2, 9, 0, &b);
  EXPECT_EQ(to_json(x, false).dump(), to_json(y, false).dump());
  EXPECT_EQ(a.embedding.map, b.embedding.map);
}

TEST(Trial, SuccessesAreValidated) {
  ExperimentConfig cfg = coarse_config(100000);
  std::size_t successes = 0;
  for (TreeFamily f : {TreeFamily::bounded_random, TreeFamily::path,
                       TreeFamily::truncated_regular}) {
    cfg.family = f;
    TrialArtifacts art;
    const TrialRecord rec = run_universality_trial(cfg, std::sqrt(2.0), 3, 0, &art);
    if (rec.status != TrialStatus::success) continue;
    ++successes;
    EXPECT_TRUE(rec.validated);
    const GeometricGraph g(*art.points, std::sqrt(2.0));
    EXPECT_TRUE(verify_embedding(*art.tree, g, art.embedding).ok);
  }
  EXPECT_GT(successes, 0u);
}

TEST(Sweep, CompleteGraphSucceeds) {
  ExperimentConfig cfg = coarse_config(100000);
  cfg.r_values = {std::sqrt(2.0)};
  const ThresholdCurve curve = run_threshold_sweep(cfg);
  ASSERT_EQ(curve.points.size(), 1u);
  EXPECT_EQ(curve.points[0].successes, cfg.trials);
  for (const auto& rec : curve.records) EXPECT_TRUE(rec.validated);
}

TEST(Sweep, CountsConsistentAndReplayable) {
  ExperimentConfig cfg = coarse_config(20000);
  cfg.r_values = {0.05, 0.8};
  cfg.trials = 4;
  const ThresholdCurve a = run_threshold_sweep(cfg);
  const ThresholdCurve b = run_threshold_sweep(cfg);
  for (const auto& p : a.points) {
    EXPECT_EQ(p.successes + p.failures + p.infeasible, p.trials);
    EXPECT_GE(p.frequency, 0.0);
    EXPECT_LE(p.frequency, 1.0);
    EXPECT_LE(p.wilson.lo, p.frequency);
    EXPECT_GE(p.wilson.hi, p.frequency);
  }
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(to_json(a.records[i], false), to_json(b.records[i], false));
  }
  cfg.trials = 0;
  EXPECT_THROW(run_threshold_sweep(cfg), PreconditionError);
}

TEST(Sweep, CsvAndJsonAgree) {
  ExperimentConfig cfg = coarse_config(2000);
  cfg.r_values = {0.3};
  cfg.trials = 2;
  const ThresholdCurve curve = run_threshold_sweep(cfg);
  std::ostringstream csv;
  write_csv(csv, curve);
  std::istringstream in(csv.str());
  std::string header;
  std::getline(in, header);
  const auto j = to_json(curve);
  for (const char* key : {"r", "trials", "successes", "frequency", "wilson_lo", "wilson_hi"}) {
    EXPECT_NE(header.find(key), std::string::npos);
    EXPECT_TRUE(j["curve"][0].contains(key));
  }
}

TEST(LowerBound, CompleteGraphNoObstruction) {
  const LowerBoundRecord rec = run_lower_bound_experiment(500, 2, 3, std::sqrt(2.0), 3, 1);
  EXPECT_EQ(rec.obstructions, 0u);
  for (const auto& t : rec.trials) EXPECT_EQ(t.hops, 1u);
}

TEST(LowerBound, PlantedChainExceedsTwoH) {
  // Three clusters at 0, 1/2 and 1 joined by chains with spacing 0.09.
  std::vector<double> xs;
  for (int i = 0; i <= 11; ++i) xs.push_back(std::min(1.0, i * 0.09));
  for (int i = 0; i < 10; ++i) {
    xs.push_back(0.001 * i);
    xs.push_back(0.5 + 0.001 * i);
    xs.push_back(1.0 - 0.001 * i);
  }
  const PointSet p(1, xs);
  const GeometricGraph g(p, 0.1);
  const HopDiameter h = hop_diameter(g);
  ASSERT_TRUE(h.connected);
  EXPECT_GE(h.hops, 10u);
  EXPECT_GT(h.hops, 2 * height_h(p.size(), 5));
}

TEST(LowerBound, CornerOccupancy) {
  // n = 4, d = 2: the corner square has area 1/2, so the hit probability is
  // 1 - (1/2)^4.
  const std::size_t trials = 2000;
  const LowerBoundRecord rec = run_lower_bound_experiment(4, 2, 3, 0.1, trials, 8);
  EXPECT_NEAR(rec.corner_probability, 0.9375, 1e-12);
  const double slack = 3 * std::sqrt(0.9375 * 0.0625 / trials);
  EXPECT_GE(rec.low_corner_fraction, rec.corner_probability - slack);
  EXPECT_GE(rec.high_corner_fraction, rec.corner_probability - slack);
}

TEST(LowerBound, AnalyticBound) {
  const LowerBoundRecord rec = run_lower_bound_experiment(10000, 2, 3, 0.05, 1, 1);
  EXPECT_NEAR(rec.analytic_diameter_bound, (1 - 2 * std::pow(1e4, -0.25)) * std::sqrt(2.0) / 0.05,
              1e-9);
  EXPECT_EQ(rec.h, height_h(10000, 3));
}

TEST(Concentration, WholeCube) {
  const ConcentrationRecord rec = run_concentration_check(1000, 1.0, 1.0, 20, 3);
  EXPECT_EQ(rec.violations, 0u);
  for (auto c : rec.counts) EXPECT_EQ(c, 1000u);
}

TEST(Concentration, Preconditions) {
  EXPECT_THROW(run_concentration_check(1000, 0.001, 0.5, 5, 1), PreconditionError);
  EXPECT_THROW(run_concentration_check(10, 1.0, 0.5, 5, 1), PreconditionError);
}

TEST(Concentration, BoundValue) {
  // 2 exp(-2000^(1/3) / 3), mpmath.
  const ConcentrationRecord rec = run_concentration_check(100000, 0.04, 0.5, 2, 1);
  EXPECT_NEAR(rec.bound, 0.029999047362036, 1e-12);
  EXPECT_NEAR(rec.expected, 2000.0, 1e-9);
}

TEST(Prop1, Extremes) {
  const Prop1Curve curve = run_prop1_experiment(256, {0.001, 20}, 10, 4);
  EXPECT_EQ(curve.points[0].successes, 0u);
  EXPECT_EQ(curve.points[1].successes, 10u);
  EXPECT_TRUE(curve.non_decreasing());
  EXPECT_EQ(curve.points[0].heights.size(), 10u);
}

}  // namespace
}  // namespace geotree
