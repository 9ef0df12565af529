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

#include "grg/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>

#include <fmt/format.h>
#include <omp.h>

#include "grg/error.hpp"
#include "grg/grg_model.hpp"

namespace grg {
namespace {

const std::set<std::string> kKnownKeys = {
    "n",    "k",           "p",      "replications", "seed",    "output_dir", "workers",
    "cap",  "n_grid",      "lambda_mode", "target",  "regime",  "qq_levels",  "edges",
    "tolerance", "model"};

std::optional<std::string> lookup(const ConfigFile& file, const std::string& subcommand,
                                  const std::string& key) {
  if (auto v = file.get(subcommand, key)) return v;
  return file.get("", key);
}

std::size_t to_size(const std::string& key, const std::string& value) {
  return static_cast<std::size_t>(parse_unsigned(key, value));
}

}  // namespace

std::string to_string(RatioTarget target) { return target == RatioTarget::kTp ? "tp" : "rn"; }

RatioTarget ratio_target_from_string(const std::string& name) {
  if (name == "tp") return RatioTarget::kTp;
  if (name == "rn") return RatioTarget::kRn;
  throw InvalidArgument(fmt::format("unknown ratio target '{}' (tp|rn)", name));
}

std::vector<std::size_t> ExperimentConfig::grid() const {
  return n_grid.empty() ? std::vector<std::size_t>{n} : n_grid;
}

ExperimentConfig experiment_config_from(const ConfigFile& file, const std::string& subcommand) {
  for (const std::string& section : {std::string(), subcommand})
    for (const auto& key : file.keys(section))
      if (!kKnownKeys.count(key))
        throw ParseError(fmt::format("unknown config key '{}' in section [{}]", key, section));

  ExperimentConfig c;
  if (file.has_section("weights")) c.weights = weight_spec_from_config(file, "weights");
  auto get = [&](const std::string& key) { return lookup(file, subcommand, key); };
  if (auto v = get("n")) c.n = to_size("n", *v);
  if (auto v = get("k")) c.k = static_cast<int>(parse_integer("k", *v));
  if (auto v = get("p")) c.p = static_cast<int>(parse_integer("p", *v));
  if (auto v = get("replications")) c.replications = to_size("replications", *v);
  if (auto v = get("seed")) c.seed = parse_unsigned("seed", *v);
  if (auto v = get("output_dir")) c.output_dir = *v;
  if (auto v = get("workers")) c.workers = static_cast<int>(parse_integer("workers", *v));
  if (auto v = get("cap")) c.cap = parse_unsigned("cap", *v);
  if (auto v = get("n_grid")) {
    c.n_grid.clear();
    for (auto x : parse_integer_list("n_grid", *v)) {
      if (x < 1) throw ParseError("n_grid entries must be positive");
      c.n_grid.push_back(static_cast<std::size_t>(x));
    }
  }
  if (auto v = get("lambda_mode")) c.lambda_mode = lambda_mode_from_string(*v);
  if (auto v = get("target")) c.ratio_target = ratio_target_from_string(*v);
  if (auto v = get("regime")) c.regime = rn_regime_from_string(*v);
  if (auto v = get("qq_levels")) c.qq_levels = parse_real_list("qq_levels", *v);
  if (auto v = get("edges")) c.edges_path = *v;
  if (auto v = get("tolerance")) c.tolerance = parse_real("tolerance", *v);
  if (auto v = get("model")) {
    if (*v != "grg" && *v != "chung_lu")
      throw ParseError(fmt::format("unknown graph model '{}' (grg|chung_lu)", *v));
    c.model = *v;
  }
  return c;
}

void validate(const ExperimentConfig& c, const std::string& subcommand) {
  if (c.replications < 1) throw InvalidArgument("replications must be >= 1");
  if (c.workers < 0) throw InvalidArgument("workers must be >= 0");
  const bool uses_k = subcommand == "census" || subcommand == "bounds";
  if (uses_k && c.k < 3) throw InvalidArgument("k must be >= 3");
  if (subcommand == "ratio" && c.p < 2) throw InvalidArgument("p must be >= 2");
  const std::size_t min_n = std::max<std::size_t>(2, uses_k ? static_cast<std::size_t>(c.k) : 2);
  const bool needs_n = !(subcommand == "threshold" && !c.edges_path.empty()) && subcommand != "moments";
  if (needs_n) {
    for (std::size_t n : (subcommand == "ratio" || subcommand == "bounds") ? c.grid()
                                                                           : std::vector{c.n})
      if (n < min_n)
        throw InvalidArgument(fmt::format("n = {} is too small (need n >= {})", n, min_n));
  }
}

int default_workers() {
  if (const char* env = std::getenv("GRG_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return omp_get_max_threads();
}

WorkerScope::WorkerScope(int workers) : previous_(omp_get_max_threads()) {
  omp_set_num_threads(workers > 0 ? workers : default_workers());
}

WorkerScope::~WorkerScope() { omp_set_num_threads(previous_); }

double CensusResult::std_error() const {
  return counts.empty() ? 0.0 : std::sqrt(variance / static_cast<double>(counts.size()));
}

CensusResult run_census(const ExperimentConfig& config) {
  validate(config, "census");
  WorkerScope scope(config.workers);
  CensusResult out;
  out.k = config.k;
  out.reference = lambda_k(analytic_moments(config.weights).ratio, config.k);
  out.counts.assign(config.replications, 0);
  const long long reps = static_cast<long long>(config.replications);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long r = 0; r < reps; ++r) {
    const Seed rep_seed = derive_seed(config.seed, static_cast<std::uint64_t>(r));
    const WeightVector w =
        sample_weights(config.weights, config.n, derive_seed(rep_seed, kWeightStream));
    const GrgGraph g = sample_grg(w, derive_seed(rep_seed, kGraphStream));
    out.counts[r] = config.k == 3 ? count_triangles(g).count : count_k_cycles(g, config.k).count;
  }
  out.pmf = EmpiricalPmf::from_samples(out.counts);
  out.mean = out.pmf.mean();
  out.variance = out.pmf.variance();
  out.tv = tv_distance(out.pmf, out.reference);
  out.qq = qq_table(out.pmf, out.reference, config.qq_levels);
  out.qq_correlation = qq_correlation(out.qq);
  return out;
}

BoundsResult run_bounds(const ExperimentConfig& config) {
  validate(config, "bounds");
  WorkerScope scope(config.workers);
  BoundsResult out;
  out.k = config.k;
  std::vector<RatePoint> points;
  for (std::size_t n : config.grid()) {
    auto rows = bound_replications(config.weights, n, config.k, config.replications,
                                   derive_seed(config.seed, n), config.cap);
    out.reports.push_back(summarize_bounds(config.weights, n, config.k, rows, config.lambda_mode));
    points.push_back({static_cast<double>(n), out.reports.back().b1 + out.reports.back().b2});
    out.per_rep.push_back(std::move(rows));
  }
  std::size_t positive = 0;
  for (const auto& pt : points) positive += pt.error > 0.0 ? 1 : 0;
  if (positive >= 4) out.fit = rate_fit(points);
  return out;
}

RatioResult run_ratio_study(const ExperimentConfig& config) {
  validate(config, "ratio");
  WorkerScope scope(config.workers);
  RatioResult out;
  out.target = config.ratio_target;
  out.p = config.p;
  if (out.target == RatioTarget::kTp) {
    out.limit = tp_limit(config.weights, config.p);
  } else {
    out.limit = 0.0;
    out.warnings = rn_regime_warnings(config.weights, config.p, config.regime);
  }

  std::vector<RatePoint> points;
  for (std::size_t n : config.grid()) {
    const Seed seed = derive_seed(config.seed, n);
    const McEstimate est =
        out.target == RatioTarget::kTp
            ? expected_tp_mc(config.weights, n, config.p, config.replications, seed)
            : expected_rn_mc(config.weights, n, config.p, config.replications, seed);
    RatioRow row;
    row.n = n;
    row.estimate = est.cv_mean;
    row.std_error = est.cv_std_error;
    row.abs_error = std::abs(est.cv_mean - out.limit);
    row.plain_mean = est.mean;
    row.plain_std_error = est.std_error;
    const double numeric_zero = 1e-12 * std::max(1.0, std::abs(out.limit));
    row.in_fit = row.abs_error > numeric_zero &&
                 row.abs_error >= kNoiseFloorMultiple * row.std_error;
    if (row.in_fit) points.push_back({static_cast<double>(n), row.abs_error});
    out.rows.push_back(row);
  }
  if (points.size() >= 4)
    out.fit = rate_fit(points);
  else
    out.below_noise_floor = true;

  if (out.target == RatioTarget::kTp && config.weights.get_if<TwoPointLaw>() != nullptr) {
    for (std::size_t n : {2, 5, 10}) {
      const McEstimate mc = expected_tp_mc(config.weights, n, config.p, config.replications,
                                           derive_seed(config.seed, 1000000 + n));
      out.oracle.push_back({n, expected_tp_exact(config.weights, n, config.p), mc.mean,
                            mc.std_error});
    }
  }
  return out;
}

std::vector<ThresholdRow> run_threshold(const ExperimentConfig& config) {
  validate(config, "threshold");
  WorkerScope scope(config.workers);
  const PowerIterationOptions options{config.tolerance};
  if (!config.edges_path.empty())
    return {{0, threshold_report(read_edge_list_file(config.edges_path), options)}};
  std::vector<ThresholdRow> rows(config.replications);
  for (std::size_t r = 0; r < config.replications; ++r) {
    const Seed rep_seed = derive_seed(config.seed, r);
    const WeightVector w =
        sample_weights(config.weights, config.n, derive_seed(rep_seed, kWeightStream));
    rows[r] = {r, threshold_report(sample_grg(w, derive_seed(rep_seed, kGraphStream)), options)};
  }
  return rows;
}

}  // namespace grg
