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

#include "grg/ratio_stats.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "grg/error.hpp"

namespace grg {
namespace {

void check_sample(std::span<const double> xs) {
  if (xs.empty()) throw InvalidArgument("statistic needs a nonempty sample");
  for (double x : xs)
    if (!(x > 0.0)) throw InvalidArgument(fmt::format("sample entry {} is not positive", x));
}

void check_power(int p) {
  if (p < 2) throw InvalidArgument(fmt::format("power p must be >= 2, got {}", p));
}

double log_binomial(std::size_t n, std::size_t j) {
  return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(j) + 1.0) -
         std::lgamma(static_cast<double>(n - j) + 1.0);
}

struct Moments {
  double mean = 0.0;
  double std_error = 0.0;
};

Moments mean_and_se(std::span<const double> values) {
  const double count = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / count;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double var = values.size() > 1 ? ss / (count - 1.0) : 0.0;
  return {mean, std::sqrt(var / count)};
}

// Runs `statistic` on replication r's weight draw for every r, in
// parallel, and stores the results by index so the reduction order is
// fixed.
template <class Statistic>
auto replicate(const WeightSpec& spec, std::size_t n, std::size_t replications, Seed seed,
               Statistic statistic) {
  using Value = decltype(statistic(std::declval<const WeightVector&>()));
  std::vector<Value> out(replications);
  const long long count = static_cast<long long>(replications);
#pragma omp parallel for schedule(static)
  for (long long r = 0; r < count; ++r) {
    const WeightVector w = sample_weights(spec, n, derive_seed(seed, static_cast<std::uint64_t>(r)));
    out[r] = statistic(w);
  }
  return out;
}

}  // namespace

double t_statistic(std::span<const double> xs) {
  check_sample(xs);
  double sum = 0.0, sum_sq = 0.0;
  for (double x : xs) {
    sum += x;
    sum_sq += x * x;
  }
  return sum_sq / sum;
}

double r_statistic(std::span<const double> xs, int p) {
  check_power(p);
  check_sample(xs);
  double sum = 0.0, sum_sq = 0.0, max = 0.0;
  for (double x : xs) {
    sum += x;
    sum_sq += x * x;
    max = std::max(max, x);
  }
  return std::pow(sum_sq / sum, p) * max * max / sum;
}

double expected_tp_exact(const WeightSpec& spec, std::size_t n, int p) {
  check_power(p);
  if (n < 1) throw InvalidArgument("n must be >= 1");
  if (n > 30) throw InvalidArgument("expected_tp_exact is restricted to n <= 30");
  if (const auto* c = spec.get_if<ConstantLaw>()) return std::pow(c->value, p);
  const auto* t = spec.get_if<TwoPointLaw>();
  if (t == nullptr) throw InvalidArgument("expected_tp_exact needs a two_point spec");
  const double q = 1.0 - t->prob_x1;  // P(X = x2)
  double expectation = 0.0;
  for (std::size_t j = 0; j <= n; ++j) {
    const double heavy = static_cast<double>(j);
    const double light = static_cast<double>(n - j);
    const double tn = (heavy * t->x2 * t->x2 + light * t->x1 * t->x1) / (heavy * t->x2 + light * t->x1);
    const double weight =
        std::exp(log_binomial(n, j) + heavy * std::log(q) + light * std::log(t->prob_x1));
    expectation += weight * std::pow(tn, p);
  }
  return expectation;
}

double tp_limit(const WeightSpec& spec, int p) {
  check_power(p);
  return std::pow(analytic_moments(spec).ratio, p);
}

McEstimate expected_tp_mc(const WeightSpec& spec, std::size_t n, int p, std::size_t replications,
                          Seed seed) {
  check_power(p);
  if (n < 1) throw InvalidArgument("n must be >= 1");
  if (replications < kMinMcReplications)
    throw InvalidArgument(
        fmt::format("expected_tp_mc needs at least {} replications", kMinMcReplications));
  const MomentSummary mom = analytic_moments(spec);  // throws if EX^2 is infinite
  const double limit = std::pow(mom.ratio, p);
  const double g1 = -p * limit / mom.mean;
  const double g2 = p * limit / mom.second_moment;

  struct Sample {
    double plain;
    double adjusted;
  };
  const double nd = static_cast<double>(n);
  const auto samples = replicate(spec, n, replications, seed, [&](const WeightVector& w) {
    double sum_sq = 0.0;
    for (double x : w.values) sum_sq += x * x;
    const double tp = std::pow(sum_sq / w.total, p);
    const double m1 = w.total / nd;
    const double m2 = sum_sq / nd;
    return Sample{tp, tp - g1 * (m1 - mom.mean) - g2 * (m2 - mom.second_moment)};
  });

  std::vector<double> plain(samples.size()), adjusted(samples.size());
  for (std::size_t r = 0; r < samples.size(); ++r) {
    plain[r] = samples[r].plain;
    adjusted[r] = samples[r].adjusted;
  }
  const Moments a = mean_and_se(plain);
  const Moments b = mean_and_se(adjusted);
  return {a.mean, a.std_error, replications, b.mean, b.std_error};
}

std::string to_string(RnRegime regime) {
  switch (regime) {
    case RnRegime::kPolynomialTail: return "polynomial_tail";
    case RnRegime::kMoment: return "moment";
    case RnRegime::kExponential: return "exponential";
  }
  return "unknown";
}

RnRegime rn_regime_from_string(const std::string& name) {
  if (name == "polynomial_tail") return RnRegime::kPolynomialTail;
  if (name == "moment") return RnRegime::kMoment;
  if (name == "exponential") return RnRegime::kExponential;
  throw InvalidArgument(
      fmt::format("unknown regime '{}' (polynomial_tail|moment|exponential)", name));
}

std::vector<std::string> rn_regime_warnings(const WeightSpec& spec, int p, RnRegime regime) {
  std::vector<std::string> warnings;
  const auto* pareto = spec.get_if<ParetoShiftedLaw>();
  switch (regime) {
    case RnRegime::kPolynomialTail:
      if (pareto != nullptr && pareto->shape < p + 3.5)
        warnings.push_back(fmt::format(
            "tail exponent {} is below p + 7/2 = {}; the n^-1/2 rate is not guaranteed",
            pareto->shape, p + 3.5));
      break;
    case RnRegime::kMoment:
      if (p <= 8) warnings.push_back(fmt::format("moment regime needs p > 8, got p = {}", p));
      if (pareto != nullptr && pareto->shape <= p + 4)
        warnings.push_back(fmt::format("E X^{} is infinite for tail exponent {}", p + 4,
                                       pareto->shape));
      break;
    case RnRegime::kExponential:
      if (pareto != nullptr)
        warnings.push_back("pareto weights have no exponential moment");
      break;
  }
  return warnings;
}

McEstimate expected_rn_mc(const WeightSpec& spec, std::size_t n, int p, std::size_t replications,
                          Seed seed) {
  check_power(p);
  if (n < 1) throw InvalidArgument("n must be >= 1");
  if (replications < 1) throw InvalidArgument("replications must be >= 1");
  const auto values = replicate(spec, n, replications, seed,
                                [p](const WeightVector& w) { return r_statistic(w.values, p); });
  const Moments m = mean_and_se(values);
  return {m.mean, m.std_error, replications, m.mean, m.std_error};
}

double lemma1_bound(double lambda_frac, double sigma2, double max_mean_sq, std::size_t n) {
  if (!(lambda_frac > 0.0 && lambda_frac < 1.0))
    throw InvalidArgument("lemma1_bound needs 0 < lambda < 1");
  if (!(sigma2 >= 0.0) || !(max_mean_sq >= 0.0))
    throw InvalidArgument("lemma1_bound needs nonnegative variance terms");
  const double denom = 2.0 * (sigma2 + max_mean_sq);
  if (denom == 0.0) return 0.0;
  const double gap = 1.0 - lambda_frac;
  return std::exp(-gap * gap * static_cast<double>(n) / denom);
}

TailBoundCheck lemma1_check_scaled_bernoulli(double q, double lambda_frac, std::size_t n) {
  if (!(q > 0.0 && q < 1.0)) throw InvalidArgument("Bernoulli parameter must lie in (0, 1)");
  TailBoundCheck check;
  check.lambda_frac = lambda_frac;
  check.n = n;
  check.bound_value = lemma1_bound(lambda_frac, (1.0 - q) / q, 1.0, n);
  // S_n = B / q with B ~ Binomial(n, q); S_n <= lambda n  <=>  B <= lambda n q.
  const double cutoff = std::floor(lambda_frac * static_cast<double>(n) * q + 1e-9);
  for (std::size_t j = 0; j <= n && static_cast<double>(j) <= cutoff; ++j)
    check.probability += std::exp(log_binomial(n, j) + static_cast<double>(j) * std::log(q) +
                                  static_cast<double>(n - j) * std::log(1.0 - q));
  return check;
}

RateFit rate_fit(std::span<const RatePoint> points) {
  RateFit fit;
  for (const auto& pt : points)
    if (pt.error > 0.0 && pt.n > 0.0) fit.points.push_back(pt);
  if (fit.points.size() < 4)
    throw InvalidArgument(fmt::format("rate_fit needs at least 4 points with positive error, got {}",
                                      fit.points.size()));
  const double count = static_cast<double>(fit.points.size());
  double mx = 0.0, my = 0.0;
  for (const auto& pt : fit.points) {
    mx += std::log(pt.n);
    my += std::log(pt.error);
  }
  mx /= count;
  my /= count;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& pt : fit.points) {
    const double dx = std::log(pt.n) - mx;
    const double dy = std::log(pt.error) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw InvalidArgument("rate_fit needs at least two distinct n values");
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

}  // namespace grg
