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

#include "grg/poisson.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <fmt/format.h>

#include "grg/error.hpp"

namespace grg {
namespace {

constexpr double kTruncationMass = 1e-12;

double log_poisson_pmf(double lambda, std::uint64_t m) {
  const double md = static_cast<double>(m);
  return -lambda + md * std::log(lambda) - std::lgamma(md + 1.0);
}

// Beyond this the incomplete gamma series stops converging; a normal law
// with continuity correction stands in.
constexpr double kNormalRegime = 1e12;

double normal_upper(double lambda, std::uint64_t m) {
  const double z = (static_cast<double>(m) + 0.5 - lambda) / std::sqrt(lambda);
  return 0.5 * std::erfc(z / std::sqrt(2.0));
}

// P(X <= m) and P(X > m) through the regularized incomplete gamma function.
double poisson_cdf(double lambda, std::uint64_t m) {
  if (lambda == 0.0) return 1.0;
  if (lambda > kNormalRegime) return 1.0 - normal_upper(lambda, m);
  return boost::math::gamma_q(static_cast<double>(m) + 1.0, lambda);
}

double poisson_upper(double lambda, std::uint64_t m) {
  if (lambda == 0.0) return 0.0;
  if (lambda > kNormalRegime) return normal_upper(lambda, m);
  return boost::math::gamma_p(static_cast<double>(m) + 1.0, lambda);
}

// Smallest m with P(X <= m) >= level, searched outward from the normal
// approximation so that large lambda costs O(1) CDF evaluations.
std::uint64_t quantile_search(double lambda, double level) {
  if (lambda == 0.0) return 0;
  const double z = -std::sqrt(2.0) * boost::math::erfc_inv(2.0 * level);
  const double guess = std::floor(lambda + z * std::sqrt(lambda));
  std::uint64_t m = guess > 0.0 ? static_cast<std::uint64_t>(guess) : 0;
  while (poisson_cdf(lambda, m) < level) ++m;
  while (m > 0 && poisson_cdf(lambda, m - 1) >= level) --m;
  return m;
}

// Sum of |p(m) - q(m)| over a finite support of p, plus the mass q puts
// outside it. Exact whenever p lives on `support`.
template <class PmfP, class PmfQ>
double l1_on_support(const std::vector<std::uint64_t>& support, PmfP p, PmfQ q, double q_mass) {
  double l1 = 0.0;
  double q_inside = 0.0;
  for (std::uint64_t m : support) {
    const double qm = q(m);
    l1 += std::abs(p(m) - qm);
    q_inside += qm;
  }
  return l1 + std::max(0.0, q_mass - q_inside);
}

std::vector<std::uint64_t> support_of(const EmpiricalPmf& e) {
  std::vector<std::uint64_t> out;
  out.reserve(e.counts().size());
  for (auto [m, c] : e.counts()) out.push_back(m);
  return out;
}

void check_nonempty(const EmpiricalPmf& e) {
  if (e.empty()) throw InvalidArgument("empirical law is empty");
}

}  // namespace

PoissonModel lambda_k(double ratio, int k) {
  if (!(ratio > 0.0)) throw InvalidArgument("lambda_k needs ratio > 0");
  if (k < 3) throw InvalidArgument("lambda_k needs k >= 3");
  return {std::pow(ratio, k) / (2.0 * k)};
}

double poisson_pmf(const PoissonModel& model, std::uint64_t m) {
  if (!(model.lambda >= 0.0)) throw InvalidArgument("Poisson parameter must be >= 0");
  if (model.lambda == 0.0) return m == 0 ? 1.0 : 0.0;
  return std::exp(log_poisson_pmf(model.lambda, m));
}

double mixed_poisson_pmf(std::span<const double> lambda_samples, std::uint64_t m) {
  if (lambda_samples.empty()) throw InvalidArgument("mixed Poisson needs at least one sample");
  double sum = 0.0;
  for (double lambda : lambda_samples) sum += poisson_pmf({lambda}, m);
  return sum / static_cast<double>(lambda_samples.size());
}

EmpiricalPmf EmpiricalPmf::from_samples(std::span<const std::uint64_t> samples) {
  EmpiricalPmf pmf;
  for (auto s : samples) pmf.add(s);
  return pmf;
}

void EmpiricalPmf::add(std::uint64_t outcome, std::uint64_t times) {
  if (times == 0) return;
  counts_[outcome] += times;
  total_ += times;
}

void EmpiricalPmf::merge(const EmpiricalPmf& other) {
  for (auto [m, c] : other.counts_) add(m, c);
}

double EmpiricalPmf::probability(std::uint64_t outcome) const {
  if (total_ == 0) return 0.0;
  auto it = counts_.find(outcome);
  return it == counts_.end() ? 0.0
                             : static_cast<double>(it->second) / static_cast<double>(total_);
}

std::uint64_t EmpiricalPmf::max_outcome() const {
  return counts_.empty() ? 0 : counts_.rbegin()->first;
}

double EmpiricalPmf::mean() const {
  double sum = 0.0;
  for (auto [m, c] : counts_) sum += static_cast<double>(m) * probability(m);
  return sum;
}

double EmpiricalPmf::variance() const {
  if (total_ < 2) return 0.0;
  const double mu = mean();
  double ss = 0.0;
  for (auto [m, c] : counts_) {
    const double d = static_cast<double>(m) - mu;
    ss += static_cast<double>(c) * d * d;
  }
  return ss / static_cast<double>(total_ - 1);
}

TvDistance tv_distance(const EmpiricalPmf& p, const EmpiricalPmf& q) {
  check_nonempty(p);
  check_nonempty(q);
  std::vector<std::uint64_t> support = support_of(p);
  for (auto [m, c] : q.counts()) support.push_back(m);
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  auto pp = [&p](std::uint64_t m) { return p.probability(m); };
  auto qq = [&q](std::uint64_t m) { return q.probability(m); };
  return {std::min(2.0, l1_on_support(support, pp, qq, 1.0)), 0.0};
}

// The empirical law has finite support, so the Poisson mass outside it is
// 1 minus the mass inside and no truncation is needed.
TvDistance tv_distance(const EmpiricalPmf& p, const PoissonModel& q) {
  check_nonempty(p);
  auto pp = [&p](std::uint64_t m) { return p.probability(m); };
  auto qq = [&q](std::uint64_t m) { return poisson_pmf(q, m); };
  return {std::min(2.0, l1_on_support(support_of(p), pp, qq, 1.0)), 0.0};
}

TvDistance tv_distance(const PoissonModel& p, const EmpiricalPmf& q) { return tv_distance(q, p); }

// Both supports are truncated to a window holding all but 1e-12 of each
// law; the discarded mass is added back as an upper-bound correction.
TvDistance tv_distance(const PoissonModel& p, const PoissonModel& q) {
  if (!(p.lambda >= 0.0) || !(q.lambda >= 0.0))
    throw InvalidArgument("Poisson parameter must be >= 0");
  const double half = kTruncationMass / 2.0;
  const std::uint64_t lo =
      std::min(quantile_search(p.lambda, half), quantile_search(q.lambda, half));
  const std::uint64_t hi =
      std::max(quantile_search(p.lambda, 1.0 - half), quantile_search(q.lambda, 1.0 - half));
  TvDistance out;
  for (std::uint64_t m = lo; m <= hi; ++m) out.value += std::abs(poisson_pmf(p, m) - poisson_pmf(q, m));
  for (double lambda : {p.lambda, q.lambda}) {
    if (lo > 0) out.tail_correction += poisson_cdf(lambda, lo - 1);
    out.tail_correction += poisson_upper(lambda, hi);
  }
  out.value = std::min(2.0, out.value + out.tail_correction);
  return out;
}

std::uint64_t poisson_quantile(const PoissonModel& model, double level) {
  if (!(level > 0.0 && level < 1.0)) throw InvalidArgument("quantile level must lie in (0, 1)");
  if (!(model.lambda >= 0.0)) throw InvalidArgument("Poisson parameter must be >= 0");
  return quantile_search(model.lambda, level);
}

QqTable qq_table(const EmpiricalPmf& emp, const PoissonModel& model,
                 std::span<const double> levels) {
  check_nonempty(emp);
  QqTable table;
  for (double level : levels) {
    if (!(level > 0.0 && level < 1.0))
      throw InvalidArgument(fmt::format("quantile level {} outside (0, 1)", level));
    QqRow row{level, 0, poisson_quantile(model, level)};
    const double threshold = level * static_cast<double>(emp.total());
    std::uint64_t cumulative = 0;
    for (auto [m, c] : emp.counts()) {
      cumulative += c;
      if (static_cast<double>(cumulative) >= threshold) {
        row.empirical_q = m;
        break;
      }
    }
    table.rows.push_back(row);
  }
  return table;
}

std::vector<double> default_qq_levels() {
  std::vector<double> levels;
  for (int i = 1; i <= 99; ++i) levels.push_back(i / 100.0);
  return levels;
}

double qq_correlation(const QqTable& table) {
  const auto& rows = table.rows;
  if (rows.empty()) return 0.0;
  const double count = static_cast<double>(rows.size());
  double mx = 0.0, my = 0.0;
  for (const auto& r : rows) {
    mx += static_cast<double>(r.empirical_q);
    my += static_cast<double>(r.poisson_q);
  }
  mx /= count;
  my /= count;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (const auto& r : rows) {
    const double dx = static_cast<double>(r.empirical_q) - mx;
    const double dy = static_cast<double>(r.poisson_q) - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    // Constant column: perfectly related only if both columns coincide.
    bool same = true;
    for (const auto& r : rows) same &= r.empirical_q == r.poisson_q;
    return same ? 1.0 : 0.0;
  }
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace grg
