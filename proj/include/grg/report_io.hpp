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

#ifndef GRG_REPORT_IO_HPP_
#define GRG_REPORT_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "grg/experiments.hpp"

namespace grg {

// CSV reals use 12 significant digits.
std::string format_real(double x);

nlohmann::json to_json(const WeightSpec& spec);
nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const RateFit& fit);
nlohmann::json to_json(const ThresholdReport& report);

// replication_id,k,count
void write_counts_csv(std::ostream& out, const CensusResult& result);
// outcome,count
void write_pmf_csv(std::ostream& out, const EmpiricalPmf& pmf);
// level,empirical_q,poisson_q
void write_qq_csv(std::ostream& out, const QqTable& table);

// n,k,replications,b1,b2,b1_plus_b2,lambda_capital,lambda_target,gap,rhs,mode
void write_bounds_csv(std::ostream& out, const BoundsResult& result);
// n,replication_id,b1,b2,lambda_capital,lambda_plugin
void write_bound_replications_csv(std::ostream& out, const BoundsResult& result);

// n,estimate,std_error,abs_error,plain_mean,plain_std_error,in_fit
void write_ratio_csv(std::ostream& out, const RatioResult& result);
// n,exact,mc,std_error
void write_oracle_csv(std::ostream& out, const RatioResult& result);
// One line: "fit: slope=... intercept=... r2=... points=..." or the
// below-noise-floor notice.
std::string fit_summary_line(const RatioResult& result);

// replication_id,n,edges,triangles,lower_bound,lambda1,tau_estimate,tau_upper_bound,bound_holds
void write_threshold_csv(std::ostream& out, const std::vector<ThresholdRow>& rows);

nlohmann::json census_summary(const ExperimentConfig& config, const CensusResult& result);
nlohmann::json bounds_summary(const ExperimentConfig& config, const BoundsResult& result);
nlohmann::json ratio_summary(const ExperimentConfig& config, const RatioResult& result);
nlohmann::json threshold_summary(const ExperimentConfig& config,
                                 const std::vector<ThresholdRow>& rows);
nlohmann::json moments_summary(const WeightSpec& spec, int k, int max_order);

// "<subcommand>_n<n>_<k|p><value>_seed<seed>"; grids render as n<first>-<last>.
std::string output_stem(const std::string& subcommand, const ExperimentConfig& config);

// Writes every output of a run into config.output_dir and returns the paths.
std::vector<std::string> write_census_outputs(const ExperimentConfig& config,
                                              const CensusResult& result);
std::vector<std::string> write_bounds_outputs(const ExperimentConfig& config,
                                              const BoundsResult& result);
std::vector<std::string> write_ratio_outputs(const ExperimentConfig& config,
                                             const RatioResult& result);
std::vector<std::string> write_threshold_outputs(const ExperimentConfig& config,
                                                 const std::vector<ThresholdRow>& rows);

}  // namespace grg

#endif  // GRG_REPORT_IO_HPP_
