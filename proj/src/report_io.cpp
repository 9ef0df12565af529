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

#include "grg/report_io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "grg/error.hpp"

namespace grg {
namespace {

namespace fs = std::filesystem;

std::string join_path(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

template <class Writer>
std::string write_file(const std::string& dir, const std::string& name, Writer writer) {
  fs::create_directories(dir.empty() ? "." : dir);
  const std::string path = join_path(dir, name);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", path));
  writer(out);
  if (!out) throw std::runtime_error(fmt::format("error while writing '{}'", path));
  return path;
}

nlohmann::json real_or_null(double x) {
  return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr);
}

}  // namespace

std::string format_real(double x) { return fmt::format("{:.12g}", x); }

nlohmann::json to_json(const WeightSpec& spec) {
  nlohmann::json j;
  j["family"] = spec.family_name();
  if (const auto* c = spec.get_if<ConstantLaw>()) j["value"] = c->value;
  if (const auto* p = spec.get_if<ParetoShiftedLaw>()) {
    j["shape"] = p->shape;
    j["scale"] = p->scale;
    j["loc"] = p->loc;
  }
  if (const auto* t = spec.get_if<TwoPointLaw>()) {
    j["x1"] = t->x1;
    j["x2"] = t->x2;
    j["prob_x1"] = t->prob_x1;
  }
  if (const auto* e = spec.get_if<EmpiricalLaw>()) {
    j["values"] = e->values;
    j["probs"] = e->probs;
  }
  return j;
}

nlohmann::json to_json(const BoundReport& r) {
  return {{"n", r.n},
          {"k", r.k},
          {"replications", r.replications},
          {"b1", r.b1},
          {"b2", r.b2},
          {"b1_plus_b2", r.b1 + r.b2},
          {"lambda_capital", r.lambda_capital},
          {"lambda_target", r.lambda_target},
          {"gap", r.gap},
          {"rhs_without_constant", r.rhs()},
          {"lambda_mode", to_string(r.mode)}};
}

nlohmann::json to_json(const RateFit& fit) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& pt : fit.points) points.push_back({pt.n, pt.error});
  return {{"slope", fit.slope},
          {"intercept", fit.intercept},
          {"r_squared", fit.r_squared},
          {"points", points}};
}

nlohmann::json to_json(const ThresholdReport& r) {
  return {{"n", r.n},
          {"edges", r.edges},
          {"triangles", r.triangles},
          {"lambda1_lower_bound", r.lower_bound},
          {"lambda1_power_iteration", r.lambda1},
          {"tau_estimate", real_or_null(r.tau_estimate)},
          {"tau_upper_bound", real_or_null(r.tau_upper_bound)},
          {"bound_holds", r.bound_holds}};
}

void write_counts_csv(std::ostream& out, const CensusResult& result) {
  out << "replication_id,k,count\n";
  for (std::size_t r = 0; r < result.counts.size(); ++r)
    out << r << ',' << result.k << ',' << result.counts[r] << '\n';
}

void write_pmf_csv(std::ostream& out, const EmpiricalPmf& pmf) {
  out << "outcome,count\n";
  for (auto [m, c] : pmf.counts()) out << m << ',' << c << '\n';
}

void write_qq_csv(std::ostream& out, const QqTable& table) {
  out << "level,empirical_q,poisson_q\n";
  for (const auto& row : table.rows)
    out << format_real(row.level) << ',' << row.empirical_q << ',' << row.poisson_q << '\n';
}

void write_bounds_csv(std::ostream& out, const BoundsResult& result) {
  out << "n,k,replications,b1,b2,b1_plus_b2,lambda_capital,lambda_target,gap,rhs,mode\n";
  for (const auto& r : result.reports)
    fmt::print(out, "{},{},{},{},{},{},{},{},{},{},{}\n", r.n, r.k, r.replications,
               format_real(r.b1), format_real(r.b2), format_real(r.b1 + r.b2),
               format_real(r.lambda_capital), format_real(r.lambda_target), format_real(r.gap),
               format_real(r.rhs()), to_string(r.mode));
}

void write_bound_replications_csv(std::ostream& out, const BoundsResult& result) {
  out << "n,replication_id,b1,b2,lambda_capital,lambda_plugin\n";
  for (std::size_t i = 0; i < result.reports.size(); ++i)
    for (const auto& row : result.per_rep[i])
      fmt::print(out, "{},{},{},{},{},{}\n", result.reports[i].n, row.replication,
                 format_real(row.terms.b1), format_real(row.terms.b2),
                 format_real(row.terms.lambda_capital), format_real(row.lambda_plugin));
}

void write_ratio_csv(std::ostream& out, const RatioResult& result) {
  out << "n,estimate,std_error,abs_error,plain_mean,plain_std_error,in_fit\n";
  for (const auto& r : result.rows)
    fmt::print(out, "{},{},{},{},{},{},{}\n", r.n, format_real(r.estimate),
               format_real(r.std_error), format_real(r.abs_error), format_real(r.plain_mean),
               format_real(r.plain_std_error), r.in_fit ? 1 : 0);
}

void write_oracle_csv(std::ostream& out, const RatioResult& result) {
  out << "n,exact,mc,std_error\n";
  for (const auto& r : result.oracle)
    fmt::print(out, "{},{},{},{}\n", r.n, format_real(r.exact), format_real(r.mc),
               format_real(r.std_error));
}

std::string fit_summary_line(const RatioResult& result) {
  if (!result.fit)
    return fmt::format("fit: below noise floor (fewer than 4 points with |error| >= {} x std_error)",
                       kNoiseFloorMultiple);
  return fmt::format("fit: slope={} intercept={} r2={} points={}", format_real(result.fit->slope),
                     format_real(result.fit->intercept), format_real(result.fit->r_squared),
                     result.fit->points.size());
}

void write_threshold_csv(std::ostream& out, const std::vector<ThresholdRow>& rows) {
  out << "replication_id,n,edges,triangles,lower_bound,lambda1,tau_estimate,tau_upper_bound,"
         "bound_holds\n";
  for (const auto& row : rows) {
    const auto& r = row.report;
    fmt::print(out, "{},{},{},{},{},{},{},{},{}\n", row.replication, r.n, r.edges, r.triangles,
               format_real(r.lower_bound), format_real(r.lambda1), format_real(r.tau_estimate),
               format_real(r.tau_upper_bound), r.bound_holds ? 1 : 0);
  }
}

nlohmann::json census_summary(const ExperimentConfig& config, const CensusResult& result) {
  return {{"subcommand", "census"},
          {"weights", to_json(config.weights)},
          {"n", config.n},
          {"k", config.k},
          {"replications", config.replications},
          {"seed", config.seed},
          {"mean", result.mean},
          {"variance", result.variance},
          {"std_error", result.std_error()},
          {"dispersion", result.dispersion()},
          {"lambda_k", result.reference.lambda},
          {"tv_distance", {{"convention", "sup_|h|<=1 (full l1)"},
                           {"value", result.tv.value},
                           {"half_l1", result.tv.half_l1()},
                           {"tail_correction", result.tv.tail_correction}}},
          {"qq_correlation", result.qq_correlation}};
}

nlohmann::json bounds_summary(const ExperimentConfig& config, const BoundsResult& result) {
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& r : result.reports) reports.push_back(to_json(r));
  nlohmann::json j{{"subcommand", "bounds"},
                   {"weights", to_json(config.weights)},
                   {"k", config.k},
                   {"replications", config.replications},
                   {"seed", config.seed},
                   {"cap", config.cap},
                   {"note", "rhs omits the unspecified multiplicative constant"},
                   {"reports", reports}};
  j["fit_b1_plus_b2"] = result.fit ? to_json(*result.fit) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json ratio_summary(const ExperimentConfig& config, const RatioResult& result) {
  nlohmann::json j{{"subcommand", "ratio"},
                   {"weights", to_json(config.weights)},
                   {"target", to_string(result.target)},
                   {"p", result.p},
                   {"replications", config.replications},
                   {"seed", config.seed},
                   {"limit", result.limit},
                   {"noise_floor_multiple", kNoiseFloorMultiple},
                   {"below_noise_floor", result.below_noise_floor},
                   {"fit_summary", fit_summary_line(result)},
                   {"warnings", result.warnings}};
  if (result.target == RatioTarget::kRn) j["regime"] = to_string(config.regime);
  j["fit"] = result.fit ? to_json(*result.fit) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json threshold_summary(const ExperimentConfig& config,
                                 const std::vector<ThresholdRow>& rows) {
  nlohmann::json reports = nlohmann::json::array();
  bool all_hold = true;
  for (const auto& row : rows) {
    reports.push_back(to_json(row.report));
    all_hold &= row.report.bound_holds;
  }
  nlohmann::json j{{"subcommand", "threshold"}, {"all_bounds_hold", all_hold}, {"reports", reports}};
  if (config.edges_path.empty()) {
    j["weights"] = to_json(config.weights);
    j["n"] = config.n;
    j["seed"] = config.seed;
  } else {
    j["edges"] = config.edges_path;
  }
  return j;
}

nlohmann::json moments_summary(const WeightSpec& spec, int k, int max_order) {
  const MomentSummary m = analytic_moments(spec, max_order);
  nlohmann::json finite = nlohmann::json::object();
  for (std::size_t q = 0; q < m.finite.size(); ++q) finite[std::to_string(q + 1)] = bool(m.finite[q]);
  return {{"subcommand", "moments"},
          {"weights", to_json(spec)},
          {"mean", m.mean},
          {"second_moment", m.second_moment},
          {"ratio", m.ratio},
          {"finite", finite},
          {"k", k},
          {"lambda_k", lambda_k(m.ratio, k).lambda},
          {"tail_condition_holds", tail_condition_holds(spec, k)}};
}

std::string output_stem(const std::string& subcommand, const ExperimentConfig& config) {
  std::string n_part;
  if ((subcommand == "bounds" || subcommand == "ratio") && config.n_grid.size() > 1)
    n_part = fmt::format("n{}-{}", config.n_grid.front(), config.n_grid.back());
  else
    n_part = fmt::format("n{}", config.grid().front());
  const std::string kp =
      subcommand == "ratio" ? fmt::format("p{}", config.p) : fmt::format("k{}", config.k);
  if (subcommand == "threshold" || subcommand == "sample")
    return fmt::format("{}_{}_seed{}", subcommand, n_part, config.seed);
  return fmt::format("{}_{}_{}_seed{}", subcommand, n_part, kp, config.seed);
}

std::vector<std::string> write_census_outputs(const ExperimentConfig& config,
                                              const CensusResult& result) {
  const std::string stem = output_stem("census", config);
  const auto& dir = config.output_dir;
  return {
      write_file(dir, stem + ".csv", [&](std::ostream& o) { write_counts_csv(o, result); }),
      write_file(dir, stem + "_pmf.csv", [&](std::ostream& o) { write_pmf_csv(o, result.pmf); }),
      write_file(dir, stem + "_qq.csv", [&](std::ostream& o) { write_qq_csv(o, result.qq); }),
      write_file(dir, stem + "_summary.json",
                 [&](std::ostream& o) { o << census_summary(config, result).dump(2) << '\n'; }),
  };
}

std::vector<std::string> write_bounds_outputs(const ExperimentConfig& config,
                                              const BoundsResult& result) {
  const std::string stem = output_stem("bounds", config);
  const auto& dir = config.output_dir;
  return {
      write_file(dir, stem + ".csv", [&](std::ostream& o) { write_bounds_csv(o, result); }),
      write_file(dir, stem + "_replications.csv",
                 [&](std::ostream& o) { write_bound_replications_csv(o, result); }),
      write_file(dir, stem + "_summary.json",
                 [&](std::ostream& o) { o << bounds_summary(config, result).dump(2) << '\n'; }),
  };
}

std::vector<std::string> write_ratio_outputs(const ExperimentConfig& config,
                                             const RatioResult& result) {
  const std::string stem = output_stem("ratio", config) + "_" + to_string(result.target);
  const auto& dir = config.output_dir;
  std::vector<std::string> paths{
      write_file(dir, stem + ".csv", [&](std::ostream& o) { write_ratio_csv(o, result); }),
      write_file(dir, stem + "_summary.json",
                 [&](std::ostream& o) { o << ratio_summary(config, result).dump(2) << '\n'; }),
  };
  if (!result.oracle.empty())
    paths.push_back(
        write_file(dir, stem + "_oracle.csv", [&](std::ostream& o) { write_oracle_csv(o, result); }));
  return paths;
}

std::vector<std::string> write_threshold_outputs(const ExperimentConfig& config,
                                                 const std::vector<ThresholdRow>& rows) {
  const std::string stem = output_stem("threshold", config);
  const auto& dir = config.output_dir;
  return {
      write_file(dir, stem + ".csv", [&](std::ostream& o) { write_threshold_csv(o, rows); }),
      write_file(dir, stem + "_summary.json",
                 [&](std::ostream& o) { o << threshold_summary(config, rows).dump(2) << '\n'; }),
  };
}

}  // namespace grg
