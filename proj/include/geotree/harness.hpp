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

// Experiment orchestration: threshold sweeps of the embedding algorithm, the
// diameter obstruction below the threshold, the concentration check for
// point counts, and the one-dimensional greedy embedding of random trees.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "geotree/embed.hpp"
#include "geotree/stats.hpp"

namespace geotree {

enum class TreeFamily { truncated_regular, uniform, bounded_random, path };
enum class Mode { asymptotic, simulation };

TreeFamily parse_family(const std::string& name);
std::string to_string(TreeFamily family);
Mode parse_mode(const std::string& name);
std::string to_string(Mode mode);

struct ExperimentConfig {
  std::size_t n = 10000;
  int d = 2;
  int delta = 3;
  TreeFamily family = TreeFamily::bounded_random;
  // Explicit radii, then multiples of r_c(n, d, delta); both may be given.
  std::vector<double> r_values;
  std::vector<double> r_multiples;
  std::size_t trials = 10;
  std::uint64_t seed = 1;
  Mode mode = Mode::simulation;
  // Simulation mode only.
  std::optional<double> epsilon_override;
  std::optional<double> m_override;
  // m = fraction * s^-d * n; defaults to 1 / (8 d).
  std::optional<double> m_cell_fraction;
  // Use the same tree (seeded by `seed`) in every trial.
  bool fix_tree = false;
  std::size_t exact_diameter_cutoff = kDefaultExactDiameterCutoff;

  // Throws PreconditionError on an invalid configuration.
  void validate() const;
  // r_values followed by r_multiples * r_c, in that order.
  std::vector<double> radii() const;
};

Tree make_tree(TreeFamily family, std::size_t n, int delta, std::uint64_t seed);

// Tessellation, epsilon and m used for one trial at radius r.
struct TrialGeometry {
  int s = 0;
  double epsilon = 0;
  double m = 0;
  // Critical radius the tessellation was sized for.
  double r_reference = 0;
};

// Throws InfeasibleError (asymptotic-mode constants, radius out of range, ...).
TrialGeometry resolve_geometry(const ExperimentConfig& config, double r);

enum class TrialStatus { success, failure, infeasible };
std::string to_string(TrialStatus status);

struct TrialRecord {
  std::size_t trial = 0;
  double r = 0;
  std::uint64_t seed = 0;
  TrialStatus status = TrialStatus::infeasible;
  std::string reason;
  int s = 0;
  int eta = 0;
  double epsilon = 0;
  double m = 0;
  std::size_t parts = 0;
  std::size_t anchors = 0;
  std::size_t tree_max_degree = 0;
  std::size_t max_successor_overflow = 0;
  bool overflow_within_bound = true;
  std::optional<EmbedFailure> failure;
  std::optional<EventAReport> event_a;
  // Set on success: the independent distance check passed.
  bool validated = false;
  double runtime_ms = 0;
};

// Everything a trial produced, for dumping.
struct TrialArtifacts {
  std::optional<PointSet> points;
  ColorAssignment colors;
  std::optional<Tree> tree;
  Embedding embedding;
};

TrialRecord run_universality_trial(const ExperimentConfig& config, double r,
                                   std::uint64_t seed, std::size_t trial = 0,
                                   TrialArtifacts* artifacts = nullptr);

// Seed of trial t at radius index i.
std::uint64_t trial_seed(std::uint64_t master, std::size_t radius_index,
                         std::size_t trial);

struct CurvePoint {
  double r = 0;
  double r_over_rc = 0;
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::size_t failures = 0;
  std::size_t infeasible = 0;
  double frequency = 0;
  Interval wilson;
  double mean_runtime_ms = 0;
  // "step1", "step2", "central", "infeasible" -> count
  std::map<std::string, std::size_t> failure_steps;
};

struct ThresholdCurve {
  double r_c = 0;
  std::vector<CurvePoint> points;
  std::vector<TrialRecord> records;

  bool non_decreasing() const;
};

ThresholdCurve run_threshold_sweep(const ExperimentConfig& config);

struct LowerBoundTrial {
  std::uint64_t seed = 0;
  bool connected = true;
  std::uint32_t hops = 0;
  bool exact = true;
  bool obstruction = false;
  bool low_corner_hit = false;
  bool high_corner_hit = false;
};

struct LowerBoundRecord {
  std::size_t n = 0;
  int d = 0;
  int delta = 0;
  double r = 0;
  std::size_t h = 0;
  // (1 - 2 n^{-1/(2d)}) sqrt(d) / r
  double analytic_diameter_bound = 0;
  // 1 - (1 - n^{-1/2})^n
  double corner_probability = 0;
  std::vector<LowerBoundTrial> trials;
  std::size_t obstructions = 0;
  double obstruction_fraction = 0;
  // Fraction of trials with a point in [0, n^{-1/(2d)}]^d, resp. the
  // opposite corner cube.
  double low_corner_fraction = 0;
  double high_corner_fraction = 0;
};

LowerBoundRecord run_lower_bound_experiment(
    std::size_t n, int d, int delta, double r, std::size_t trials,
    std::uint64_t seed,
    std::size_t exact_cutoff = kDefaultExactDiameterCutoff);

struct ConcentrationRecord {
  std::size_t n = 0;
  int d = 0;
  double a = 0;
  double p = 0;
  std::size_t trials = 0;
  double expected = 0;   // a n p
  double deviation = 0;  // (a n p)^{2/3}
  double bound = 0;      // 2 exp(-(a n p)^{1/3} / 3)
  std::vector<std::size_t> counts;
  std::size_t violations = 0;
  double frequency = 0;
  Interval wilson;
};

// Region is the box [0, a] x [0, 1]^{d-1}; points in it are kept with
// probability p.
ConcentrationRecord run_concentration_check(std::size_t n, double a, double p,
                                            std::size_t trials,
                                            std::uint64_t seed, int d = 2);

struct Prop1Point {
  double c = 0;
  double r = 0;
  std::size_t trials = 0;
  std::size_t successes = 0;
  double frequency = 0;
  Interval wilson;
  std::vector<std::size_t> heights;
  std::vector<std::size_t> widths;
};

struct Prop1Curve {
  std::size_t n = 0;
  std::vector<Prop1Point> points;

  bool non_decreasing() const;
};

// r = c n^{-1/2}; uniform random trees rooted at vertex 0, greedy embedding.
Prop1Curve run_prop1_experiment(std::size_t n, const std::vector<double>& c_values,
                                std::size_t trials, std::uint64_t seed);

nlohmann::json to_json(const TrialRecord& record, bool with_timing = true);
nlohmann::json to_json(const std::vector<TrialRecord>& records);
nlohmann::json to_json(const ThresholdCurve& curve);
nlohmann::json to_json(const LowerBoundRecord& record);
nlohmann::json to_json(const ConcentrationRecord& record);
nlohmann::json to_json(const Prop1Curve& curve);

void write_csv(std::ostream& os, const std::vector<TrialRecord>& records);
void write_csv(std::ostream& os, const ThresholdCurve& curve);
void write_csv(std::ostream& os, const LowerBoundRecord& record);
void write_csv(std::ostream& os, const ConcentrationRecord& record);
void write_csv(std::ostream& os, const Prop1Curve& curve);

}  // namespace geotree
