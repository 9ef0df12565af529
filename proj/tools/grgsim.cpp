// Copyright 2026 The grgcycles Authors
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

// grgsim: command-line harness for generalized random graph experiments.
//
//   grgsim <moments|sample|census|bounds|ratio|threshold> [--config FILE] [overrides]
//
// Each subcommand reads one INI-style configuration file; command-line
// flags override the file.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "grg/config.hpp"
#include "grg/experiments.hpp"
#include "grg/grg_model.hpp"
#include "grg/report_io.hpp"

namespace {

// Flag name (without dashes) -> (section, config key).
struct FlagSpec {
  const char* flag;
  const char* section;
  const char* key;
  const char* help;
};

constexpr FlagSpec kRunFlags[] = {
    {"n", "", "n", "vertex count"},
    {"k", "", "k", "cycle length"},
    {"p", "", "p", "power p of the ratio statistic"},
    {"replications", "", "replications", "number of replications"},
    {"seed", "", "seed", "master seed"},
    {"workers", "", "workers", "worker threads (default: GRG_WORKERS or all cores)"},
    {"output-dir", "", "output_dir", "directory for output files"},
    {"cap", "", "cap", "candidate cycle cap for exact enumeration"},
    {"n-grid", "", "n_grid", "comma-separated n values"},
    {"lambda-mode", "", "lambda_mode", "exact|plugin"},
    {"target", "", "target", "ratio study target: tp|rn"},
    {"regime", "", "regime", "polynomial_tail|moment|exponential"},
    {"qq-levels", "", "qq_levels", "comma-separated quantile levels"},
    {"edges", "", "edges", "edge list to analyze instead of sampling"},
    {"tolerance", "", "tolerance", "power iteration residual tolerance"},
    {"model", "", "model", "graph model for sample: grg|chung_lu"},
    {"family", "weights", "family", "weight family"},
    {"value", "weights", "value", "constant weight"},
    {"shape", "weights", "shape", "pareto shape"},
    {"scale", "weights", "scale", "pareto scale"},
    {"loc", "weights", "loc", "pareto location"},
    {"x1", "weights", "x1", "two_point first value"},
    {"x2", "weights", "x2", "two_point second value"},
    {"prob-x1", "weights", "prob_x1", "two_point probability of x1"},
    {"values", "weights", "values", "empirical support"},
    {"probs", "weights", "probs", "empirical probabilities"},
};

grg::ExperimentConfig load(const std::string& name, const std::string& config_path,
                           const std::vector<std::pair<const FlagSpec*, CLI::Option*>>& options,
                           const std::vector<std::string>& values) {
  grg::ConfigFile file = config_path.empty() ? grg::ConfigFile{} : grg::ConfigFile::load(config_path);
  for (std::size_t i = 0; i < options.size(); ++i) {
    if (options[i].second->count() == 0) continue;
    const FlagSpec& spec = *options[i].first;
    const std::string section = spec.section[0] == '\0' ? name : std::string(spec.section);
    file.set(section, spec.key, values[i]);
  }
  return grg::experiment_config_from(file, name);
}

void print_paths(const std::vector<std::string>& paths) {
  for (const auto& p : paths) std::cout << "wrote " << p << '\n';
}

int run(const std::string& name, const grg::ExperimentConfig& c) {
  if (name == "moments") {
    const auto j = grg::moments_summary(c.weights, c.k, 2 * c.k + 1);
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  if (name == "sample") {
    grg::validate(c, name);
    const grg::Seed rep_seed = grg::derive_seed(c.seed, 0);
    const auto w = grg::sample_weights(c.weights, c.n, grg::derive_seed(rep_seed, grg::kWeightStream));
    const grg::Seed graph_seed = grg::derive_seed(rep_seed, grg::kGraphStream);
    const auto g = c.model == "chung_lu" ? grg::sample_chung_lu(w, graph_seed)
                                         : grg::sample_grg(w, graph_seed);
    std::filesystem::create_directories(c.output_dir);
    const std::string stem = (std::filesystem::path(c.output_dir) / grg::output_stem(name, c)).string();
    {
      std::ofstream out(stem + ".edges", std::ios::binary);
      grg::write_edge_list(out, g);
    }
    {
      std::ofstream out(stem + "_weights.csv", std::ios::binary);
      out << "vertex,weight\n";
      for (std::size_t i = 0; i < w.size(); ++i) out << i + 1 << ',' << grg::format_real(w[i]) << '\n';
    }
    std::cout << fmt::format("sampled n={} edges={} total_weight={}\n", g.n(), g.edge_count(),
                             grg::format_real(w.total));
    print_paths({stem + ".edges", stem + "_weights.csv"});
    return 0;
  }
  if (name == "census") {
    const auto r = grg::run_census(c);
    std::cout << fmt::format(
        "census k={} reps={} mean={} variance={} lambda_k={} tv={} qq_corr={}\n", c.k,
        c.replications, grg::format_real(r.mean), grg::format_real(r.variance),
        grg::format_real(r.reference.lambda), grg::format_real(r.tv.value),
        grg::format_real(r.qq_correlation));
    print_paths(grg::write_census_outputs(c, r));
    return 0;
  }
  if (name == "bounds") {
    const auto r = grg::run_bounds(c);
    for (const auto& b : r.reports)
      std::cout << fmt::format("bounds n={} b1={} b2={} Lambda={} lambda_k={} gap={}\n", b.n,
                               grg::format_real(b.b1), grg::format_real(b.b2),
                               grg::format_real(b.lambda_capital),
                               grg::format_real(b.lambda_target), grg::format_real(b.gap));
    if (r.fit) std::cout << fmt::format("fit b1+b2: slope={}\n", grg::format_real(r.fit->slope));
    print_paths(grg::write_bounds_outputs(c, r));
    return 0;
  }
  if (name == "ratio") {
    const auto r = grg::run_ratio_study(c);
    for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
    std::cout << grg::fit_summary_line(r) << '\n';
    print_paths(grg::write_ratio_outputs(c, r));
    return 0;
  }
  if (name == "threshold") {
    const auto rows = grg::run_threshold(c);
    bool ok = true;
    for (const auto& row : rows) ok &= row.report.bound_holds;
    for (const auto& row : rows)
      std::cout << fmt::format("threshold n={} e={} triangles={} bound={} lambda1={} tau={}\n",
                               row.report.n, row.report.edges, row.report.triangles,
                               grg::format_real(row.report.lower_bound),
                               grg::format_real(row.report.lambda1),
                               grg::format_real(row.report.tau_estimate));
    print_paths(grg::write_threshold_outputs(c, rows));
    if (!ok) {
      std::cerr << "error: spectral lower bound exceeds the power-iteration estimate\n";
      return 3;
    }
    return 0;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized random graph cycle census and Poisson approximation toolkit"};
  app.require_subcommand(1);

  struct Entry {
    std::string name;
    CLI::App* sub;
    std::string config_path;
    std::vector<std::pair<const FlagSpec*, CLI::Option*>> options;
    std::vector<std::string> values;
  };
  const std::vector<std::pair<std::string, std::string>> names = {
      {"moments", "analytic weight moments, lambda(k) and the tail condition"},
      {"sample", "sample one weight vector and graph; write an edge list"},
      {"census", "k-cycle census over replications vs Poisson(lambda(k))"},
      {"bounds", "Chen-Stein b1, b2 and Lambda over an n grid"},
      {"ratio", "E T_n^p or E R_n^(p) rate study"},
      {"threshold", "spectral lower bound, power iteration and epidemic threshold"},
  };
  std::vector<Entry> entries(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    Entry& e = entries[i];
    e.name = names[i].first;
    e.sub = app.add_subcommand(e.name, names[i].second);
    e.sub->add_option("-c,--config", e.config_path, "configuration file")->check(CLI::ExistingFile);
    e.values.resize(std::size(kRunFlags));
    for (std::size_t f = 0; f < std::size(kRunFlags); ++f) {
      const FlagSpec& spec = kRunFlags[f];
      e.options.emplace_back(&spec, e.sub->add_option(std::string("--") + spec.flag, e.values[f],
                                                      spec.help));
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  for (auto& e : entries) {
    if (!e.sub->parsed()) continue;
    try {
      return run(e.name, load(e.name, e.config_path, e.options, e.values));
    } catch (const std::exception& ex) {
      std::cerr << "error: " << ex.what() << '\n';
      return 2;
    }
  }
  return 1;
}
