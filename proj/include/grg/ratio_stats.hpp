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

#ifndef GRG_RATIO_STATS_HPP_
#define GRG_RATIO_STATS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grg/rng.hpp"
#include "grg/weights.hpp"

namespace grg {

// T_n = sum x^2 / sum x. Throws on empty input or a nonpositive entry.
double t_statistic(std::span<const double> xs);

// R_n^(p) = T_n^p * max(x)^2 / sum x, p >= 2.
double r_statistic(std::span<const double> xs, int p);

// Exact E T_n^p for a two-point law. T_n depends only on how many draws
// equal x2, so the expectation is a binomial sum with n + 1 terms.
// Restricted to n <= 30.
double expected_tp_exact(const WeightSpec& spec, std::size_t n, int p);

// Limit (EX^2 / EX)^p of E T_n^p.
double tp_limit(const WeightSpec& spec, int p);

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t replications = 0;
  // Control-variate estimate (see expected_tp_mc); equals `mean` when no
  // control variate applies.
  double cv_mean = 0.0;
  double cv_std_error = 0.0;
};

inline constexpr std::size_t kMinMcReplications = 1000;

// Monte Carlo mean of T_n^p over independent weight vectors; replication r
// draws its weights from derive_seed(seed, r).
//
// cv_mean subtracts the first-order (delta-method) term
//   g1 (m1 - EX) + g2 (m2 - EX^2),  m1 = mean x, m2 = mean x^2,
// with the gradient of (m2 / m1)^p taken at the true moments. The
// correction has mean exactly zero, so cv_mean stays unbiased while its
// variance drops from O(1/n) to O(1/n^2) per replication.
McEstimate expected_tp_mc(const WeightSpec& spec, std::size_t n, int p, std::size_t replications,
                          Seed seed);

// Monte Carlo mean of R_n^(p). Warnings for moment regimes the spec does
// not satisfy are appended to `warnings` when it is non-null.
enum class RnRegime {
  kPolynomialTail,  // P(X >= x) = O(x^{-p-7/2}), rate n^{-1/2}
  kMoment,          // p > 8 and EX^{p+4} finite, rate n^{-(p-2)/(p+4)}
  kExponential,     // E e^{eps X} finite, rate (log n)^2 / n
};
std::string to_string(RnRegime regime);
RnRegime rn_regime_from_string(const std::string& name);
std::vector<std::string> rn_regime_warnings(const WeightSpec& spec, int p, RnRegime regime);

McEstimate expected_rn_mc(const WeightSpec& spec, std::size_t n, int p, std::size_t replications,
                          Seed seed);

// exp(-(1 - lambda)^2 n / (2 (sigma2 + max_mean_sq))). Inputs must already
// be normalized so that E S_n = n.
double lemma1_bound(double lambda_frac, double sigma2, double max_mean_sq, std::size_t n);

struct TailBoundCheck {
  double lambda_frac = 0.0;
  std::size_t n = 0;
  double bound_value = 0.0;
  double probability = 0.0;
  bool holds() const { return probability <= bound_value; }
};

// eta_k = scale * Bernoulli(q) with scale = 1/q so that E eta = 1; the
// exact P(S_n <= lambda n) is a binomial lower tail.
TailBoundCheck lemma1_check_scaled_bernoulli(double q, double lambda_frac, std::size_t n);

struct RatePoint {
  double n = 0.0;
  double error = 0.0;
};

struct RateFit {
  std::vector<RatePoint> points;  // points used in the fit
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

// Least-squares line through (log n, log error). Points with error <= 0
// are dropped; throws InvalidArgument when fewer than 4 remain.
RateFit rate_fit(std::span<const RatePoint> points);

}  // namespace grg

#endif  // GRG_RATIO_STATS_HPP_
