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

#ifndef GRG_POISSON_HPP_
#define GRG_POISSON_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace grg {

struct PoissonModel {
  double lambda = 0.0;
};

// lambda(k) = ratio^k / (2k), ratio = EW^2 / EW.
PoissonModel lambda_k(double ratio, int k);

// e^{-lambda} lambda^m / m!, evaluated in log space.
double poisson_pmf(const PoissonModel& model, std::uint64_t m);

// Monte Carlo mixed Poisson: mean over samples of e^{-L} L^m / m!.
double mixed_poisson_pmf(std::span<const double> lambda_samples, std::uint64_t m);

// Observed distribution of a nonnegative integer statistic.
class EmpiricalPmf {
 public:
  EmpiricalPmf() = default;
  static EmpiricalPmf from_samples(std::span<const std::uint64_t> samples);

  void add(std::uint64_t outcome, std::uint64_t times = 1);
  void merge(const EmpiricalPmf& other);

  const std::map<std::uint64_t, std::uint64_t>& counts() const { return counts_; }
  std::uint64_t total() const { return total_; }
  bool empty() const { return total_ == 0; }
  double probability(std::uint64_t outcome) const;
  std::uint64_t max_outcome() const;

  // Sum m * pmf(m).
  double mean() const;
  // Unbiased sample variance (divides by total - 1); 0 for a single sample.
  double variance() const;

 private:
  std::map<std::uint64_t, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

// Total variation in the sup_{|h| <= 1} |E h(P) - E h(Q)| convention, i.e.
// the full l1 distance sum_m |P(m) - Q(m)|. Poisson laws are truncated at
// cumulative mass 1 - 1e-12; the discarded tail mass is added to `value`
// so it is an upper bound on the exact distance.
struct TvDistance {
  double value = 0.0;
  double tail_correction = 0.0;
  // The (1/2) sum |P - Q| convention.
  double half_l1() const { return value / 2.0; }
};

TvDistance tv_distance(const EmpiricalPmf& p, const EmpiricalPmf& q);
TvDistance tv_distance(const EmpiricalPmf& p, const PoissonModel& q);
TvDistance tv_distance(const PoissonModel& p, const EmpiricalPmf& q);
TvDistance tv_distance(const PoissonModel& p, const PoissonModel& q);

struct QqRow {
  double level = 0.0;
  std::uint64_t empirical_q = 0;
  std::uint64_t poisson_q = 0;
};

struct QqTable {
  std::vector<QqRow> rows;
};

// Smallest m with CDF(m) >= level, for each level in (0, 1).
QqTable qq_table(const EmpiricalPmf& emp, const PoissonModel& model,
                 std::span<const double> levels);
// Levels 0.01, 0.02, ..., 0.99.
std::vector<double> default_qq_levels();
// Pearson correlation of the two quantile columns.
double qq_correlation(const QqTable& table);

std::uint64_t poisson_quantile(const PoissonModel& model, double level);

}  // namespace grg

#endif  // GRG_POISSON_HPP_
