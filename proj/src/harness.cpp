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


#include "geotree/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <ostream>

#include "geotree/rng.hpp"

namespace geotree {

TreeFamily parse_family(const std::string& name) {
  if (name == "truncated_regular") return TreeFamily::truncated_regular;
  if (name == "uniform") return TreeFamily::uniform;
  if (name == "bounded_random") return TreeFamily::bounded_random;
  if (name == "path") return TreeFamily::path;
  throw PreconditionError("unknown tree family: " + name);
}

std::string to_string(TreeFamily family) {
  switch (family) {
    case TreeFamily::truncated_regular: return "truncated_regular";
    case TreeFamily::uniform: return "uniform";
    case TreeFamily::bounded_random: return "bounded_random";
    case TreeFamily::path: return "path";
  }
  return "?";
}

Mode parse_mode(const std::string& name) {
  if (name == "asymptotic") return Mode::asymptotic;
  if (name == "sim" || name == "simulation") return Mode::simulation;
  throw PreconditionError("unknown mode: " + name);
}

std::string to_string(Mode mode) {
  return mode == Mode::asymptotic ? "asymptotic" : "sim";
}

std::string to_string(TrialStatus status) {
  switch (status) {
    case TrialStatus::success: return "success";
    case TrialStatus::failure: return "failure";
    case TrialStatus::infeasible: return "infeasible";
  }
  return "?";
}

void ExperimentConfig::validate() const {
  if (n < 1) throw PreconditionError("n must be >= 1");
  if (d < 1) throw PreconditionError("d must be >= 1");
  if (delta < 2) throw PreconditionError("delta must be >= 2");
  if (trials < 1) throw PreconditionError("trials must be >= 1");
  if (r_values.empty() && r_multiples.empty()) {
    throw PreconditionError("at least one radius is required");
  }
  for (double r : r_values) {
    if (!(r > 0)) throw PreconditionError("radii must be positive");
  }
  for (double k : r_multiples) {
    if (!(k > 0)) throw PreconditionError("radius multiples must be positive");
  }
  if (!r_multiples.empty() && (n < 3 || delta < 3)) {
    throw PreconditionError("radius multiples need n >= 3 and delta >= 3");
  }
  if (epsilon_override && !(*epsilon_override > 0)) {
    throw PreconditionError("epsilon override must be positive");
  }
  if (m_override && !(*m_override > 0)) {
    throw PreconditionError("m override must be positive");
  }
  if (m_cell_fraction && !(*m_cell_fraction > 0)) {
    throw PreconditionError("m fraction must be positive");
  }
}

std::vector<double> ExperimentConfig::radii() const {
  std::vector<double> out = r_values;
  if (!r_multiples.empty()) {
    const double r_c = critical_radius(static_cast<double>(n), d, delta);
    for (double k : r_multiples) out.push_back(k * r_c);
  }
  return out;
}

Tree make_tree(TreeFamily family, std::size_t n, int delta, std::uint64_t seed) {
  if (n == 1) return Tree(1, {});
  switch (family) {
    case TreeFamily::truncated_regular: return truncated_regular_tree(n, delta);
    case TreeFamily::uniform: return uniform_random_tree(n, seed);
    case TreeFamily::bounded_random:
      return random_bounded_degree_tree(n, delta, seed);
    case TreeFamily::path: return path_tree(n);
  }
  throw PreconditionError("unknown tree family");
}

TrialGeometry resolve_geometry(const ExperimentConfig& config, double r) {
  const double n = static_cast<double>(config.n);
  const int d = config.d;
  TrialGeometry geo;
  if (config.mode == Mode::asymptotic) {
    geo.epsilon = epsilon_param(n, d, config.delta);
    geo.r_reference = critical_radius(n, d, config.delta);
    geo.s = choose_odd_s_for_radius(d, geo.r_reference, geo.epsilon);
    geo.m = std::pow(geo.s, -d) * n / (8.0 * d);
  } else {
    geo.epsilon = config.epsilon_override
                      ? *config.epsilon_override
                      : std::min(epsilon_param(n, d, config.delta), 0.5);
    // Size the tessellation for this trial's radius, so that the routing
    // properties hold at r whenever a valid s exists.
    geo.r_reference = r / (1.0 + geo.epsilon);
    try {
      geo.s = choose_odd_s_for_radius(d, geo.r_reference, geo.epsilon);
    } catch (const TessellationInfeasible& e) {
      if (e.s_max() >= 3.0) throw;
      geo.s = 3;  // r is beyond what the coarsest tessellation needs
    }
    const double fraction =
        config.m_cell_fraction ? *config.m_cell_fraction : 1.0 / (8.0 * d);
    geo.m = config.m_override ? *config.m_override
                              : fraction * std::pow(geo.s, -d) * n;
  }
  if (successor_distance_bound(d, geo.s) > r) {
    throw InfeasibleError("cell-to-successor distance exceeds r at s = " +
                          std::to_string(geo.s));
  }
  return geo;
}

std::uint64_t trial_seed(std::uint64_t master, std::size_t radius_index,
                         std::size_t trial) {
  return derive_seed(master, Stream::trial,
                     (static_cast<std::uint64_t>(radius_index) << 32) | trial);
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

TrialRecord run_universality_trial(const ExperimentConfig& config, double r,
                                   std::uint64_t seed, std::size_t trial,
                                   TrialArtifacts* artifacts) {
  const auto start = Clock::now();
  TrialRecord rec;
  rec.trial = trial;
  rec.r = r;
  rec.seed = seed;
  const std::size_t n = config.n;
  const int d = config.d;
  TrialArtifacts local;
  TrialArtifacts& out = artifacts ? *artifacts : local;
  try {
    const std::uint64_t tree_seed = config.fix_tree ? config.seed : seed;
    out.tree = make_tree(config.family, n, config.delta, tree_seed);
    const Tree& tree = *out.tree;
    rec.tree_max_degree = tree.max_degree();
    const int delta = std::max<int>(config.delta, static_cast<int>(tree.max_degree()));

    PointSet points = sample_points(n, d, seed);
    out.colors = color_points(points, 0.5, seed);
    out.points = points;
    const GeometricGraph graph(std::move(points), r);

    if (n < 3) {
      // Too small for the threshold constants; identity map is the only try.
      out.embedding.map.resize(n);
      std::iota(out.embedding.map.begin(), out.embedding.map.end(), PointId{0});
      out.embedding.status = EmbedStatus::success;
      const Verification v = verify_embedding(tree, graph, out.embedding);
      rec.validated = v.ok;
      rec.status = v.ok ? TrialStatus::success : TrialStatus::failure;
      rec.reason = v.ok ? "trivial" : v.reason;
      rec.parts = 1;
      rec.runtime_ms = elapsed_ms(start);
      return rec;
    }

    const TrialGeometry geo = resolve_geometry(config, r);
    rec.s = geo.s;
    rec.epsilon = geo.epsilon;
    rec.m = geo.m;
    rec.eta = (geo.s + 3) / 4;
    if (geo.m / (delta + 1.0) < 1.0) {
      throw InfeasibleError("m = " + std::to_string(geo.m) +
                            " leaves m0 below unit vertex weight");
    }
    const RoutingPlan plan(Tessellation(d, geo.s), geo.epsilon, r);
    rec.event_a = check_event_A(graph.points(), out.colors, plan);
    out.embedding = embed_tree(tree, graph, out.colors, plan, geo.m, delta);
    const auto& diag = out.embedding.diagnostics;
    rec.parts = diag.parts;
    rec.anchors = diag.anchors;
    rec.max_successor_overflow = diag.max_successor_overflow;
    rec.overflow_within_bound =
        static_cast<double>(diag.max_successor_overflow) <= 2.0 * d * geo.m;
    if (out.embedding.succeeded()) {
      const Verification v = verify_embedding(tree, graph, out.embedding);
      rec.validated = v.ok;
      rec.status = TrialStatus::success;
      if (!v.ok) rec.reason = "validator rejected: " + v.reason;
    } else {
      rec.status = TrialStatus::failure;
      rec.failure = out.embedding.failure;
      rec.reason = "step " + std::to_string(rec.failure->step) + " " +
                   rec.failure->resource + " exhausted";
    }
  } catch (const InfeasibleError& e) {
    rec.status = TrialStatus::infeasible;
    rec.reason = e.what();
  } catch (const PreconditionError& e) {
    rec.status = TrialStatus::infeasible;
    rec.reason = e.what();
  }
  rec.runtime_ms = elapsed_ms(start);
  return rec;
}

bool ThresholdCurve::non_decreasing() const {
  std::vector<Interval> cis;
  for (const auto& p : points) cis.push_back(p.wilson);
  return statistically_non_decreasing(cis);
}

ThresholdCurve run_threshold_sweep(const ExperimentConfig& config) {
  config.validate();
  const std::vector<double> radii = config.radii();
  ThresholdCurve curve;
  if (config.n >= 3 && config.delta >= 3) {
    curve.r_c = critical_radius(static_cast<double>(config.n), config.d,
                                config.delta);
  }
  const std::size_t jobs = radii.size() * config.trials;
  curve.records.resize(jobs);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t job = 0; job < static_cast<std::int64_t>(jobs); ++job) {
    const std::size_t i = static_cast<std::size_t>(job) / config.trials;
    const std::size_t t = static_cast<std::size_t>(job) % config.trials;
    curve.records[static_cast<std::size_t>(job)] = run_universality_trial(
        config, radii[i], trial_seed(config.seed, i, t), t);
  }
  for (std::size_t i = 0; i < radii.size(); ++i) {
    CurvePoint p;
    p.r = radii[i];
    p.r_over_rc = curve.r_c > 0 ? radii[i] / curve.r_c : 0;
    p.trials = config.trials;
    double runtime = 0;
    for (std::size_t t = 0; t < config.trials; ++t) {
      const TrialRecord& rec = curve.records[i * config.trials + t];
      runtime += rec.runtime_ms;
      switch (rec.status) {
        case TrialStatus::success:
          ++p.successes;
          break;
        case TrialStatus::failure:
          ++p.failures;
          ++p.failure_steps[rec.failure && rec.failure->step == 0
                                ? "central"
                                : "step" + std::to_string(rec.failure ? rec.failure->step : 0)];
          break;
        case TrialStatus::infeasible:
          ++p.infeasible;
          ++p.failure_steps["infeasible"];
          break;
      }
    }
    p.frequency = static_cast<double>(p.successes) / static_cast<double>(p.trials);
    p.wilson = wilson_interval(p.successes, p.trials);
    p.mean_runtime_ms = runtime / static_cast<double>(p.trials);
    curve.points.push_back(std::move(p));
  }
  return curve;
}

LowerBoundRecord run_lower_bound_experiment(std::size_t n, int d, int delta,
                                            double r, std::size_t trials,
                                            std::uint64_t seed,
                                            std::size_t exact_cutoff) {
  if (!(r > 0)) throw PreconditionError("r must be positive");
  if (trials < 1) throw PreconditionError("trials must be >= 1");
  LowerBoundRecord rec;
  rec.n = n;
  rec.d = d;
  rec.delta = delta;
  rec.r = r;
  rec.h = height_h(n, delta);
  const double nd = static_cast<double>(n);
  const double side = std::pow(nd, -1.0 / (2.0 * d));
  rec.analytic_diameter_bound = (1.0 - 2.0 * side) * std::sqrt(d) / r;
  rec.corner_probability = -std::expm1(nd * std::log1p(-1.0 / std::sqrt(nd)));

  std::size_t low = 0;
  std::size_t high = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    LowerBoundTrial tr;
    tr.seed = trial_seed(seed, 0, t);
    GeometricGraph graph(sample_points(n, d, tr.seed), r);
    const HopDiameter diam = hop_diameter(graph.adjacency(), exact_cutoff);
    tr.connected = diam.connected;
    tr.hops = diam.hops;
    tr.exact = diam.exact;
    // A disconnected host has no spanning tree at all.
    tr.obstruction = !diam.connected || diam.hops > 2 * rec.h;
    for (std::size_t i = 0; i < n; ++i) {
      const auto x = graph.points()[i];
      tr.low_corner_hit = tr.low_corner_hit ||
                          std::all_of(x.begin(), x.end(), [&](double v) { return v <= side; });
      tr.high_corner_hit = tr.high_corner_hit ||
                           std::all_of(x.begin(), x.end(), [&](double v) { return v >= 1.0 - side; });
    }
    rec.obstructions += tr.obstruction;
    low += tr.low_corner_hit;
    high += tr.high_corner_hit;
    rec.trials.push_back(tr);
  }
  rec.obstruction_fraction = static_cast<double>(rec.obstructions) / static_cast<double>(trials);
  rec.low_corner_fraction = static_cast<double>(low) / static_cast<double>(trials);
  rec.high_corner_fraction = static_cast<double>(high) / static_cast<double>(trials);
  return rec;
}

ConcentrationRecord run_concentration_check(std::size_t n, double a, double p,
                                            std::size_t trials,
                                            std::uint64_t seed, int d) {
  if (!(p > 0 && p <= 1)) throw PreconditionError("p must lie in (0, 1]");
  if (static_cast<double>(n) < 10.0 / p) throw PreconditionError("n must be >= 10/p");
  if (!(a <= 1) || a < 10.0 / (static_cast<double>(n) * p)) {
    throw PreconditionError("a must lie in [10/(np), 1]");
  }
  if (trials < 1) throw PreconditionError("trials must be >= 1");
  ConcentrationRecord rec;
  rec.n = n;
  rec.d = d;
  rec.a = a;
  rec.p = p;
  rec.trials = trials;
  rec.expected = a * static_cast<double>(n) * p;
  rec.deviation = std::pow(rec.expected, 2.0 / 3.0);
  rec.bound = 2.0 * std::exp(-std::cbrt(rec.expected) / 3.0);
  Box region{std::vector<double>(static_cast<std::size_t>(d), 0.0),
             std::vector<double>(static_cast<std::size_t>(d), 1.0)};
  region.hi[0] = a;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t s = trial_seed(seed, 0, t);
    const PointSet points = sample_points(n, d, s);
    const ColorAssignment kept = color_points(points, p, s);
    const std::size_t count =
        count_in_region(points, kept.colors, region, Color::blue);
    rec.counts.push_back(count);
    if (std::abs(static_cast<double>(count) - rec.expected) > rec.deviation) {
      ++rec.violations;
    }
  }
  rec.frequency = static_cast<double>(rec.violations) / static_cast<double>(trials);
  rec.wilson = wilson_interval(rec.violations, trials);
  return rec;
}

bool Prop1Curve::non_decreasing() const {
  std::vector<Interval> cis;
  for (const auto& p : points) cis.push_back(p.wilson);
  return statistically_non_decreasing(cis);
}

Prop1Curve run_prop1_experiment(std::size_t n, const std::vector<double>& c_values,
                                std::size_t trials, std::uint64_t seed) {
  if (n < 2) throw PreconditionError("n must be >= 2");
  if (trials < 1) throw PreconditionError("trials must be >= 1");
  if (c_values.empty()) throw PreconditionError("at least one c is required");
  Prop1Curve curve;
  curve.n = n;
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (double c : c_values) {
    if (!(c > 0)) throw PreconditionError("c values must be positive");
    Prop1Point p;
    p.c = c;
    p.r = c * scale;
    p.trials = trials;
    p.heights.resize(trials);
    p.widths.resize(trials);
    curve.points.push_back(std::move(p));
  }
  const std::size_t jobs = c_values.size() * trials;
  std::vector<char> ok(jobs, 0);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t job = 0; job < static_cast<std::int64_t>(jobs); ++job) {
    const std::size_t i = static_cast<std::size_t>(job) / trials;
    const std::size_t t = static_cast<std::size_t>(job) % trials;
    const std::uint64_t s = trial_seed(seed, i, t);
    const Tree tree = uniform_random_tree(n, s);
    const GeometricGraph graph(sample_points(n, 1, s), curve.points[i].r);
    const Embedding emb = greedy_line_embed(tree, graph);
    ok[static_cast<std::size_t>(job)] =
        emb.succeeded() && verify_embedding(tree, graph, emb).ok;
    curve.points[i].heights[t] = height_from(tree, 0);
    curve.points[i].widths[t] = width_from(tree, 0);
  }
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    auto& p = curve.points[i];
    for (std::size_t t = 0; t < trials; ++t) p.successes += ok[i * trials + t];
    p.frequency = static_cast<double>(p.successes) / static_cast<double>(trials);
    p.wilson = wilson_interval(p.successes, trials);
  }
  return curve;
}

// ---- serialization ----

nlohmann::json to_json(const TrialRecord& rec, bool with_timing) {
  nlohmann::json j = {{"trial", rec.trial},
                      {"r", rec.r},
                      {"seed", rec.seed},
                      {"status", to_string(rec.status)},
                      {"reason", rec.reason},
                      {"s", rec.s},
                      {"eta", rec.eta},
                      {"epsilon", rec.epsilon},
                      {"m", rec.m},
                      {"parts", rec.parts},
                      {"anchors", rec.anchors},
                      {"tree_max_degree", rec.tree_max_degree},
                      {"max_successor_overflow", rec.max_successor_overflow},
                      {"overflow_within_bound", rec.overflow_within_bound},
                      {"validated", rec.validated}};
  j["failure"] = rec.failure ? failure_to_json(*rec.failure) : nlohmann::json();
  j["event_a"] = rec.event_a ? event_a_to_json(*rec.event_a) : nlohmann::json();
  if (with_timing) j["runtime_ms"] = rec.runtime_ms;
  return j;
}

nlohmann::json to_json(const std::vector<TrialRecord>& records) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : records) out.push_back(to_json(r));
  return out;
}

nlohmann::json to_json(const ThresholdCurve& curve) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : curve.points) {
    points.push_back({{"r", p.r},
                      {"r_over_rc", p.r_over_rc},
                      {"trials", p.trials},
                      {"successes", p.successes},
                      {"failures", p.failures},
                      {"infeasible", p.infeasible},
                      {"frequency", p.frequency},
                      {"wilson_lo", p.wilson.lo},
                      {"wilson_hi", p.wilson.hi},
                      {"mean_runtime_ms", p.mean_runtime_ms},
                      {"failure_steps", p.failure_steps}});
  }
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : curve.records) records.push_back(to_json(r));
  return {{"r_c", curve.r_c}, {"curve", points}, {"trials", records}};
}

nlohmann::json to_json(const LowerBoundRecord& rec) {
  nlohmann::json trials = nlohmann::json::array();
  for (const auto& t : rec.trials) {
    trials.push_back({{"seed", t.seed},
                      {"connected", t.connected},
                      {"hops", t.hops},
                      {"exact", t.exact},
                      {"obstruction", t.obstruction},
                      {"low_corner_hit", t.low_corner_hit},
                      {"high_corner_hit", t.high_corner_hit}});
  }
  return {{"n", rec.n},
          {"d", rec.d},
          {"delta", rec.delta},
          {"r", rec.r},
          {"h", rec.h},
          {"two_h", 2 * rec.h},
          {"analytic_diameter_bound", rec.analytic_diameter_bound},
          {"corner_probability", rec.corner_probability},
          {"obstructions", rec.obstructions},
          {"obstruction_fraction", rec.obstruction_fraction},
          {"low_corner_fraction", rec.low_corner_fraction},
          {"high_corner_fraction", rec.high_corner_fraction},
          {"trials", trials}};
}

nlohmann::json to_json(const ConcentrationRecord& rec) {
  return {{"n", rec.n},
          {"d", rec.d},
          {"a", rec.a},
          {"p", rec.p},
          {"trials", rec.trials},
          {"expected", rec.expected},
          {"deviation", rec.deviation},
          {"bound", rec.bound},
          {"violations", rec.violations},
          {"frequency", rec.frequency},
          {"wilson_lo", rec.wilson.lo},
          {"wilson_hi", rec.wilson.hi},
          {"counts", rec.counts}};
}

namespace {

double mean(const std::vector<std::size_t>& xs) {
  if (xs.empty()) return 0;
  return static_cast<double>(std::accumulate(xs.begin(), xs.end(), std::size_t{0})) /
         static_cast<double>(xs.size());
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

nlohmann::json to_json(const Prop1Curve& curve) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : curve.points) {
    points.push_back({{"c", p.c},
                      {"r", p.r},
                      {"trials", p.trials},
                      {"successes", p.successes},
                      {"frequency", p.frequency},
                      {"wilson_lo", p.wilson.lo},
                      {"wilson_hi", p.wilson.hi},
                      {"mean_height", mean(p.heights)},
                      {"mean_width", mean(p.widths)},
                      {"heights", p.heights},
                      {"widths", p.widths}});
  }
  return {{"n", curve.n}, {"curve", points}};
}

void write_csv(std::ostream& os, const std::vector<TrialRecord>& records) {
  os << "trial,r,seed,status,reason,s,eta,epsilon,m,parts,anchors,"
        "tree_max_degree,failure_step,failure_resource,failure_cell,"
        "failure_level,demanded,available,event_a1,event_a2,validated,"
        "max_successor_overflow,runtime_ms\n";
  for (const auto& rec : records) {
    os << rec.trial << ',' << rec.r << ',' << rec.seed << ','
       << to_string(rec.status) << ',' << csv_field(rec.reason) << ',' << rec.s
       << ',' << rec.eta << ',' << rec.epsilon << ',' << rec.m << ','
       << rec.parts << ',' << rec.anchors << ',' << rec.tree_max_degree << ',';
    if (rec.failure) {
      os << rec.failure->step << ',' << rec.failure->resource << ','
         << rec.failure->cell << ',' << rec.failure->ball_level << ','
         << rec.failure->demanded << ',' << rec.failure->available << ',';
    } else {
      os << ",,,,,,";
    }
    if (rec.event_a) {
      os << rec.event_a->a1_ok << ',' << rec.event_a->a2_ok << ',';
    } else {
      os << ",,";
    }
    os << rec.validated << ',' << rec.max_successor_overflow << ','
       << rec.runtime_ms << '\n';
  }
}

void write_csv(std::ostream& os, const ThresholdCurve& curve) {
  os << "r,r_over_rc,trials,successes,failures,infeasible,frequency,wilson_lo,"
        "wilson_hi,mean_runtime_ms,fail_step1,fail_step2,fail_central\n";
  for (const auto& p : curve.points) {
    auto get = [&](const char* key) {
      const auto it = p.failure_steps.find(key);
      return it == p.failure_steps.end() ? std::size_t{0} : it->second;
    };
    os << p.r << ',' << p.r_over_rc << ',' << p.trials << ',' << p.successes
       << ',' << p.failures << ',' << p.infeasible << ',' << p.frequency << ','
       << p.wilson.lo << ',' << p.wilson.hi << ',' << p.mean_runtime_ms << ','
       << get("step1") << ',' << get("step2") << ',' << get("central") << '\n';
  }
}

void write_csv(std::ostream& os, const LowerBoundRecord& rec) {
  os << "trial,seed,n,d,delta,r,h,two_h,analytic_diameter_bound,connected,"
        "hops,exact,obstruction,low_corner_hit,high_corner_hit\n";
  for (std::size_t t = 0; t < rec.trials.size(); ++t) {
    const auto& tr = rec.trials[t];
    os << t << ',' << tr.seed << ',' << rec.n << ',' << rec.d << ','
       << rec.delta << ',' << rec.r << ',' << rec.h << ',' << 2 * rec.h << ','
       << rec.analytic_diameter_bound << ',' << tr.connected << ',' << tr.hops
       << ',' << tr.exact << ',' << tr.obstruction << ',' << tr.low_corner_hit
       << ',' << tr.high_corner_hit << '\n';
  }
}

void write_csv(std::ostream& os, const ConcentrationRecord& rec) {
  os << "trial,n,d,a,p,count,expected,deviation,violation,bound\n";
  for (std::size_t t = 0; t < rec.counts.size(); ++t) {
    const bool violation =
        std::abs(static_cast<double>(rec.counts[t]) - rec.expected) > rec.deviation;
    os << t << ',' << rec.n << ',' << rec.d << ',' << rec.a << ',' << rec.p
       << ',' << rec.counts[t] << ',' << rec.expected << ',' << rec.deviation
       << ',' << violation << ',' << rec.bound << '\n';
  }
}

void write_csv(std::ostream& os, const Prop1Curve& curve) {
  os << "c,r,trials,successes,frequency,wilson_lo,wilson_hi,mean_height,"
        "mean_width\n";
  for (const auto& p : curve.points) {
    os << p.c << ',' << p.r << ',' << p.trials << ',' << p.successes << ','
       << p.frequency << ',' << p.wilson.lo << ',' << p.wilson.hi << ','
       << mean(p.heights) << ',' << mean(p.widths) << '\n';
  }
}

}  // namespace geotree
