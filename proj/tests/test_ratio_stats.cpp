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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "grg/error.hpp"
#include "grg/ratio_stats.hpp"

using namespace grg;

namespace {

// E T_n^p by enumerating all 2^n outcomes of a two-point sample.
double enumerate_tp(double x1, double x2, double prob_x1, std::size_t n, int p) {
  double total = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    double prob = 1, s1 = 0, s2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const bool second = (mask >> i) & 1u;
      const double x = second ? x2 : x1;
      prob *= second ? 1 - prob_x1 : prob_x1;
      s1 += x;
      s2 += x * x;
    }
    total += prob * std::pow(s2 / s1, p);
  }
  return total;
}

}  // namespace

TEST_CASE("t statistic") {
  const std::vector<double> same(7, 2.5);
  CHECK(t_statistic(same) == doctest::Approx(2.5));
  CHECK(t_statistic(std::vector<double>{1, 2}) == doctest::Approx(5.0 / 3.0));
  CHECK(t_statistic(std::vector<double>{4.2}) == doctest::Approx(4.2));
  CHECK_THROWS_AS(t_statistic(std::vector<double>{}), InvalidArgument);
  CHECK_THROWS_AS(t_statistic(std::vector<double>{1, 0}), InvalidArgument);
  CHECK_THROWS_AS(t_statistic(std::vector<double>{1, -3}), InvalidArgument);
}

TEST_CASE("r statistic") {
  for (std::size_t n : {1u, 5u, 100u})
    CHECK(r_statistic(std::vector<double>(n, 1.0), 3) == doctest::Approx(1.0 / n));
  CHECK(r_statistic(std::vector<double>{1, 2}, 2) == doctest::Approx(100.0 / 27.0));
  CHECK(r_statistic(std::vector<double>{1.7}, 2) == doctest::Approx(std::pow(1.7, 3)));
  CHECK_THROWS_AS(r_statistic(std::vector<double>{1, 2}, 1), InvalidArgument);
  CHECK_THROWS_AS(r_statistic(std::vector<double>{}, 2), InvalidArgument);
}

TEST_CASE("ratio statistic invariants") {
  std::mt19937 gen(3);
  std::uniform_real_distribution<double> u(0.01, 50.0);
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<double> xs(1 + gen() % 20);
    for (double& x : xs) x = u(gen);
    const double t = t_statistic(xs);
    CHECK(t >= *std::min_element(xs.begin(), xs.end()) * (1 - 1e-14));
    CHECK(t <= *std::max_element(xs.begin(), xs.end()) * (1 + 1e-14));
    const int p = 2 + rep % 3;
    const double r = r_statistic(xs, p);
    std::vector<double> scaled = xs;
    for (double& x : scaled) x *= 3.5;
    CHECK(t_statistic(scaled) == doctest::Approx(3.5 * t).epsilon(1e-12));
    CHECK(r_statistic(scaled, p) == doctest::Approx(std::pow(3.5, p + 1) * r).epsilon(1e-12));
    std::vector<double> shuffled = xs;
    std::shuffle(shuffled.begin(), shuffled.end(), gen);
    CHECK(t_statistic(shuffled) == doctest::Approx(t).epsilon(1e-13));
    CHECK(r_statistic(shuffled, p) == doctest::Approx(r).epsilon(1e-13));
  }
}

TEST_CASE("exact expectation of T^p") {
  const auto spec = WeightSpec::two_point(1, 2, 0.5);
  CHECK(expected_tp_exact(spec, 2, 2) == doctest::Approx(95.0 / 36.0).epsilon(1e-14));
  CHECK(tp_limit(spec, 2) == doctest::Approx(25.0 / 9.0).epsilon(1e-14));
  for (std::size_t n : {1u, 3u, 10u, 30u})
    CHECK(expected_tp_exact(WeightSpec::constant(1.5), n, 3) == doctest::Approx(std::pow(1.5, 3)));
  CHECK_THROWS_AS(expected_tp_exact(WeightSpec::pareto_shifted(9.5, 10, 1), 5, 2),
                  InvalidArgument);
  CHECK_THROWS_AS(expected_tp_exact(spec, 31, 2), InvalidArgument);
  CHECK_THROWS_AS(expected_tp_exact(spec, 5, 1), InvalidArgument);
}

TEST_CASE("binomial oracle agrees with full enumeration") {
  const std::vector<WeightSpec> specs = {WeightSpec::two_point(1, 2, 0.5),
                                         WeightSpec::two_point(0.5, 7, 0.8),
                                         WeightSpec::two_point(3, 1, 0.25)};
  for (const auto& spec : specs) {
    const auto* law = spec.get_if<TwoPointLaw>();
    for (std::size_t n = 1; n <= 12; ++n)
      for (int p = 2; p <= 4; ++p)
        CHECK(expected_tp_exact(spec, n, p) ==
              doctest::Approx(enumerate_tp(law->x1, law->x2, law->prob_x1, n, p)).epsilon(1e-12));
  }
}

TEST_CASE("monte carlo T^p agrees with the exact value") {
  const auto spec = WeightSpec::two_point(1, 2, 0.5);
  for (std::size_t n : {2u, 5u, 10u}) {
    for (int p : {2, 3}) {
      const McEstimate mc = expected_tp_mc(spec, n, p, 20000, derive_seed(8, n * 10 + p));
      const double exact = expected_tp_exact(spec, n, p);
      CHECK(std::abs(mc.mean - exact) <= 4 * mc.std_error);
      CHECK(std::abs(mc.cv_mean - exact) <= 4 * mc.cv_std_error);
      CHECK(mc.replications == 20000);
    }
  }
  const McEstimate constant = expected_tp_mc(WeightSpec::constant(2.0), 7, 2, 1000, 1);
  CHECK(constant.mean == doctest::Approx(4.0));
  CHECK(constant.std_error == 0.0);
  CHECK_THROWS_AS(expected_tp_mc(spec, 5, 2, 999, 1), InvalidArgument);
  CHECK_THROWS_AS(expected_tp_mc(WeightSpec::pareto_shifted(2.0, 1, 1), 5, 2, 1000, 1),
                  InfiniteMoment);
}

TEST_CASE("monte carlo T^p approaches the pareto limit") {
  const auto spec = WeightSpec::pareto_shifted(9.5, 10, 1);
  const double limit = std::pow(150.0196078431 / 12.1764705882, 2);
  const double small = std::abs(expected_tp_mc(spec, 4, 2, 4000, 1).mean - limit);
  const double large = std::abs(expected_tp_mc(spec, 400, 2, 4000, 2).mean - limit);
  CHECK(large < small);
}

TEST_CASE("R_n estimates") {
  for (std::size_t n : {4u, 16u, 64u}) {
    const McEstimate m = expected_rn_mc(WeightSpec::constant(1.0), n, 3, 50, 1);
    CHECK(m.mean == doctest::Approx(1.0 / n));
    CHECK(m.std_error == 0.0);
  }
  CHECK(rn_regime_warnings(WeightSpec::two_point(1, 2, 0.5), 3, RnRegime::kExponential).empty());
  CHECK_FALSE(
      rn_regime_warnings(WeightSpec::pareto_shifted(5, 1, 1), 3, RnRegime::kExponential).empty());
  CHECK_FALSE(
      rn_regime_warnings(WeightSpec::pareto_shifted(6, 1, 1), 3, RnRegime::kPolynomialTail)
          .empty());
  CHECK(rn_regime_warnings(WeightSpec::pareto_shifted(7, 1, 1), 3, RnRegime::kPolynomialTail)
            .empty());
  CHECK_FALSE(rn_regime_warnings(WeightSpec::constant(1), 3, RnRegime::kMoment).empty());
  CHECK(rn_regime_from_string(to_string(RnRegime::kMoment)) == RnRegime::kMoment);
  CHECK_THROWS_AS(rn_regime_from_string("gaussian"), InvalidArgument);
}

TEST_CASE("exponential lower-tail bound") {
  CHECK(lemma1_bound(0.5, 1, 1, 16) == doctest::Approx(std::exp(-1.0)));
  CHECK(lemma1_bound(1 - 1e-9, 1, 1, 16) == doctest::Approx(1.0));
  CHECK_THROWS_AS(lemma1_bound(0.0, 1, 1, 16), InvalidArgument);
  CHECK_THROWS_AS(lemma1_bound(1.0, 1, 1, 16), InvalidArgument);

  const TailBoundCheck c = lemma1_check_scaled_bernoulli(0.5, 0.5, 16);
  CHECK(c.probability == doctest::Approx(2517.0 / 65536.0).epsilon(1e-12));
  CHECK(c.bound_value == doctest::Approx(std::exp(-1.0)));
  CHECK(c.holds());
  for (double q : {0.1, 0.5, 0.9})
    for (std::size_t n : {8u, 16u, 32u, 64u})
      for (double lambda : {0.25, 0.5, 0.75}) CHECK(lemma1_check_scaled_bernoulli(q, lambda, n).holds());
}

TEST_CASE("rate fit") {
  std::vector<RatePoint> inverse, root;
  for (double n = 64; n <= 4096; n *= 2) {
    inverse.push_back({n, 3.0 / n});
    root.push_back({n, 3.0 / std::sqrt(n)});
  }
  const RateFit a = rate_fit(inverse);
  CHECK(std::abs(a.slope + 1.0) < 1e-9);
  CHECK(a.intercept == doctest::Approx(std::log(3.0)));
  CHECK(a.r_squared == doctest::Approx(1.0));
  CHECK(std::abs(rate_fit(root).slope + 0.5) < 1e-9);

  std::vector<RatePoint> with_zero = inverse;
  with_zero.push_back({8192, 0.0});
  CHECK(rate_fit(with_zero).points.size() == inverse.size());
  const std::vector<RatePoint> few(inverse.begin(), inverse.begin() + 3);
  CHECK_THROWS_AS(rate_fit(few), InvalidArgument);

  std::vector<RatePoint> rn;
  for (double n = 64; n <= 4096; n *= 2)
    rn.push_back({n, r_statistic(std::vector<double>(static_cast<std::size_t>(n), 1.0), 2)});
  CHECK(std::abs(rate_fit(rn).slope + 1.0) < 1e-9);
}
