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

#ifndef GRG_EXPERIMENTS_HPP_
#define GRG_EXPERIMENTS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grg/chen_stein.hpp"
#include "grg/config.hpp"
#include "grg/cycles.hpp"
#include "grg/poisson.hpp"
#include "grg/ratio_stats.hpp"
#include "grg/rng.hpp"
#include "grg/spectral.hpp"
#include "grg/weights.hpp"

namespace grg {

enum class RatioTarget { kTp, kRn };
std::string to_string(RatioTarget target);
RatioTarget ratio_target_from_string(const std::string& name);

struct ExperimentConfig {
  WeightSpec weights = WeightSpec::constant(1.0);
  std::size_t n = 100;
  int k = 3;
  int p = 2;
  std::size_t replications = 100;
  Seed seed = 1;
  std::string output_dir = ".";
  int workers = 0;  // 0: GRG_WORKERS, else the OpenMP default
  std::uint64_t cap = kDefaultCandidateCap;

  // bounds and ratio studies; empty means {n}
  std::vector<std::size_t> n_grid;
  LambdaMode lambda_mode = LambdaMode::kExact;
  RatioTarget ratio_target = RatioTarget::kTp;
  RnRegime regime = RnRegime::kPolynomialTail;
  std::vector<double> qq_levels = default_qq_levels();
  // threshold: read this edge list instead of sampling
  std::string edges_path;
  double tolerance = 1e-10;
  // sample: "grg" or "chung_lu"
  std::string model = "grg";

  std::vector<std::size_t> grid() const;
};

// Reads [weights] plus the keys of section `subcommand`, falling back to
// top-level keys. Unknown keys are rejected.
ExperimentConfig experiment_config_from(const ConfigFile& file, const std::string& subcommand);

// Throws InvalidArgument unless replications >= 1 and n >= max(2, k).
void validate(const ExperimentConfig& config, const std::string& subcommand);

// Default worker count: GRG_WORKERS when set to a positive integer, else
// the OpenMP default.
int default_workers();

// Sets the OpenMP thread count for the lifetime of the object.
class WorkerScope {
 public:
  explicit WorkerScope(int workers);
  ~WorkerScope();
  WorkerScope(const WorkerScope&) = delete;
  WorkerScope& operator=(const WorkerScope&) = delete;

 private:
  int previous_;
};

struct CensusResult {
  int k = 0;
  std::vector<std::uint64_t> counts;  // per replication
  EmpiricalPmf pmf;
  double mean = 0.0;
  double variance = 0.0;
  PoissonModel reference;
  TvDistance tv;
  QqTable qq;
  double qq_correlation = 0.0;

  double dispersion() const { return mean > 0.0 ? variance / mean : 0.0; }
  double std_error() const;
};

// Per replication r: weights from derive_seed(derive_seed(seed, r), 0),
// graph from derive_seed(derive_seed(seed, r), 1), then the k-cycle count.
CensusResult run_census(const ExperimentConfig& config);

struct BoundsResult {
  int k = 0;
  std::vector<BoundReport> reports;                     // one per grid n
  std::vector<std::vector<BoundReplication>> per_rep;  // parallel to reports
  std::optional<RateFit> fit;                           // of b1 + b2 against n
};

// Grid point n uses master seed derive_seed(seed, n).
BoundsResult run_bounds(const ExperimentConfig& config);

struct RatioRow {
  std::size_t n = 0;
  double estimate = 0.0;
  double std_error = 0.0;
  double abs_error = 0.0;
  double plain_mean = 0.0;
  double plain_std_error = 0.0;
  bool in_fit = false;
};

struct OracleRow {
  std::size_t n = 0;
  double exact = 0.0;
  double mc = 0.0;
  double std_error = 0.0;
};

// Errors below this multiple of the Monte Carlo standard error are treated
// as noise and left out of the rate fit.
inline constexpr double kNoiseFloorMultiple = 10.0;

struct RatioResult {
  RatioTarget target = RatioTarget::kTp;
  int p = 2;
  double limit = 0.0;
  std::vector<RatioRow> rows;
  std::optional<RateFit> fit;
  bool below_noise_floor = false;
  std::vector<OracleRow> oracle;  // two-point E T_n^p cross-checks
  std::vector<std::string> warnings;
};

RatioResult run_ratio_study(const ExperimentConfig& config);

struct ThresholdRow {
  std::size_t replication = 0;
  ThresholdReport report;
};

// One row for an edge list, else one per sampled replication.
std::vector<ThresholdRow> run_threshold(const ExperimentConfig& config);

}  // namespace grg

#endif  // GRG_EXPERIMENTS_HPP_
