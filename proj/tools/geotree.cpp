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


// Command-line driver for the geotree experiments.
//
//   geotree sweep --n 100000 --d 2 --delta 3 --r-mult 4 --r-mult 8 --trials 30
//   geotree lowerbound --n 30000 --r-mult 0.6 --trials 20
//   geotree concentration --n 100000 --a 0.04 --p 0.5 --trials 200
//   geotree prop1 --n 4096 --c 0.05 --c 1 --c 20 --trials 50
//   geotree trial --n 2000 --r 0.3 --dump-points pts.csv
//
// Every subcommand writes CSV (default) or JSON to --out, or stdout.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "geotree/error.hpp"
#include "geotree/harness.hpp"

namespace {

struct Options {
  std::size_t n = 10000;
  int d = 2;
  int delta = 3;
  std::string family = "bounded_random";
  std::vector<double> r;
  std::vector<double> r_mult;
  std::size_t trials = 10;
  std::uint64_t seed = 1;
  std::string mode = "sim";
  std::optional<double> epsilon;
  std::optional<double> m;
  std::optional<double> m_fraction;
  bool fix_tree = false;
  std::string format = "csv";
  std::string out;
  std::size_t exact_cutoff = geotree::kDefaultExactDiameterCutoff;
  // concentration
  double a = 0.04;
  double p = 0.5;
  // prop1
  std::vector<double> c;
  // trial dumps
  std::string dump_points;
  std::string dump_tree;
  std::string dump_embedding;
  std::string dump_failure;
};

void add_shared(CLI::App* app, Options& o) {
  app->add_option("--n", o.n, "number of points / tree vertices");
  app->add_option("--d", o.d, "dimension");
  app->add_option("--delta", o.delta, "maximum tree degree");
  app->add_option("--family", o.family,
                  "truncated_regular | uniform | bounded_random | path");
  app->add_option("--r", o.r, "connection radius (repeatable)");
  app->add_option("--r-mult", o.r_mult, "radius as a multiple of r_c (repeatable)");
  app->add_option("--trials", o.trials, "trials per radius");
  app->add_option("--seed", o.seed, "master seed");
  app->add_option("--mode", o.mode, "asymptotic | sim");
  app->add_option("--epsilon", o.epsilon, "epsilon used in sim mode");
  app->add_option("--m", o.m, "subtree weight bound m (sim mode)");
  app->add_option("--m-fraction", o.m_fraction,
                  "m as a fraction of the expected points per cell (sim mode)");
  app->add_flag("--fix-tree", o.fix_tree, "one tree for all trials");
  app->add_option("--format", o.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--out", o.out, "output path (default stdout)");
  app->add_option("--exact-diameter-cutoff", o.exact_cutoff,
                  "largest n with exact hop diameter");
}

geotree::ExperimentConfig make_config(const Options& o) {
  geotree::ExperimentConfig cfg;
  cfg.n = o.n;
  cfg.d = o.d;
  cfg.delta = o.delta;
  cfg.family = geotree::parse_family(o.family);
  cfg.r_values = o.r;
  cfg.r_multiples = o.r_mult;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.mode = geotree::parse_mode(o.mode);
  cfg.epsilon_override = o.epsilon;
  cfg.m_override = o.m;
  cfg.m_cell_fraction = o.m_fraction;
  cfg.fix_tree = o.fix_tree;
  cfg.exact_diameter_cutoff = o.exact_cutoff;
  cfg.validate();
  return cfg;
}

// Single radius for subcommands that take exactly one.
double single_radius(const Options& o) {
  std::vector<double> radii = o.r;
  for (double k : o.r_mult) {
    radii.push_back(k * geotree::critical_radius(static_cast<double>(o.n), o.d, o.delta));
  }
  if (radii.size() != 1) throw geotree::PreconditionError("exactly one --r or --r-mult required");
  return radii.front();
}

template <class Record>
void emit(const Options& o, const Record& record) {
  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) throw std::runtime_error("cannot open " + o.out);
  }
  std::ostream& os = o.out.empty() ? std::cout : file;
  if (o.format == "json") {
    os << geotree::to_json(record).dump(2) << '\n';
  } else {
    geotree::write_csv(os, record);
  }
}

void open_or_throw(std::ofstream& f, const std::string& path) {
  f.open(path);
  if (!f) throw std::runtime_error("cannot open " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spanning-tree embedding experiments on random geometric graphs"};
  app.require_subcommand(1);
  Options o;

  auto* sweep = app.add_subcommand("sweep", "success frequency of the embedding versus r");
  add_shared(sweep, o);
  auto* lower = app.add_subcommand("lowerbound", "hop diameter versus 2 h(n, delta)");
  add_shared(lower, o);
  auto* conc = app.add_subcommand("concentration", "point counts in a box versus their mean");
  add_shared(conc, o);
  conc->add_option("--a", o.a, "box volume");
  conc->add_option("--p", o.p, "retention probability");
  auto* prop1 = app.add_subcommand("prop1", "greedy line embedding of uniform trees, d = 1");
  add_shared(prop1, o);
  prop1->add_option("--c", o.c, "r = c / sqrt(n) (repeatable)")->required();
  auto* trial = app.add_subcommand("trial", "one embedding trial with optional dumps");
  add_shared(trial, o);
  trial->add_option("--dump-points", o.dump_points, "points and colors CSV");
  trial->add_option("--dump-tree", o.dump_tree, "tree edge list CSV");
  trial->add_option("--dump-embedding", o.dump_embedding, "vertex to point CSV");
  trial->add_option("--dump-failure", o.dump_failure, "failure report JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep->parsed()) {
      emit(o, geotree::run_threshold_sweep(make_config(o)));
    } else if (lower->parsed()) {
      emit(o, geotree::run_lower_bound_experiment(o.n, o.d, o.delta, single_radius(o),
                                                  o.trials, o.seed, o.exact_cutoff));
    } else if (conc->parsed()) {
      emit(o, geotree::run_concentration_check(o.n, o.a, o.p, o.trials, o.seed, o.d));
    } else if (prop1->parsed()) {
      emit(o, geotree::run_prop1_experiment(o.n, o.c, o.trials, o.seed));
    } else if (trial->parsed()) {
      const geotree::ExperimentConfig cfg = make_config(o);
      geotree::TrialArtifacts art;
      const auto rec = geotree::run_universality_trial(
          cfg, single_radius(o), geotree::trial_seed(o.seed, 0, 0), 0, &art);
      emit(o, std::vector<geotree::TrialRecord>{rec});
      if (!o.dump_points.empty() && art.points) {
        std::ofstream f;
        open_or_throw(f, o.dump_points);
        geotree::write_points_csv(f, *art.points, art.colors.colors);
      }
      if (!o.dump_tree.empty() && art.tree) {
        std::ofstream f;
        open_or_throw(f, o.dump_tree);
        geotree::write_tree_csv(f, *art.tree);
      }
      if (!o.dump_embedding.empty() && art.points) {
        std::ofstream f;
        open_or_throw(f, o.dump_embedding);
        geotree::write_embedding_csv(f, art.embedding, *art.points);
      }
      if (!o.dump_failure.empty()) {
        std::ofstream f;
        open_or_throw(f, o.dump_failure);
        f << (rec.failure ? geotree::failure_to_json(*rec.failure) : nlohmann::json())
                 .dump(2)
          << '\n';
      }
    }
  } catch (const geotree::PreconditionError& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
