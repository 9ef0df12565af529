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

#include "grg/weights.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "grg/config.hpp"
#include "grg/error.hpp"

namespace grg {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

double binomial(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

WeightSpec WeightSpec::constant(double value) {
  if (!positive_finite(value))
    throw InvalidArgument(fmt::format("constant weight must be positive, got {}", value));
  return WeightSpec(ConstantLaw{value});
}

WeightSpec WeightSpec::pareto_shifted(double shape, double scale, double loc) {
  if (!positive_finite(shape)) throw InvalidArgument("pareto shape must be > 0");
  if (!positive_finite(scale)) throw InvalidArgument("pareto scale must be > 0");
  if (!std::isfinite(loc) || loc < 0.0) throw InvalidArgument("pareto loc must be >= 0");
  return WeightSpec(ParetoShiftedLaw{shape, scale, loc});
}

WeightSpec WeightSpec::two_point(double x1, double x2, double prob_x1) {
  if (!positive_finite(x1) || !positive_finite(x2))
    throw InvalidArgument("two_point support points must be positive");
  if (x1 == x2) throw InvalidArgument("two_point requires x1 != x2");
  if (!(prob_x1 > 0.0 && prob_x1 < 1.0))
    throw InvalidArgument("two_point requires 0 < prob_x1 < 1");
  return WeightSpec(TwoPointLaw{x1, x2, prob_x1});
}

WeightSpec WeightSpec::empirical(std::vector<double> values, std::vector<double> probs) {
  if (values.empty()) throw InvalidArgument("empirical law needs at least one value");
  if (values.size() != probs.size())
    throw InvalidArgument("empirical law: values and probs differ in length");
  for (double v : values)
    if (!positive_finite(v)) throw InvalidArgument("empirical support points must be positive");
  for (double p : probs)
    if (!std::isfinite(p) || p < 0.0) throw InvalidArgument("empirical probabilities must be >= 0");
  const double mass = std::accumulate(probs.begin(), probs.end(), 0.0);
  if (!(mass > 0.0)) throw InvalidArgument("empirical probabilities sum to zero");
  for (double& p : probs) p /= mass;
  return WeightSpec(EmpiricalLaw{std::move(values), std::move(probs)});
}

std::string WeightSpec::family_name() const {
  return std::visit(Overloaded{
                        [](const ConstantLaw&) { return std::string("constant"); },
                        [](const ParetoShiftedLaw&) { return std::string("pareto_shifted"); },
                        [](const TwoPointLaw&) { return std::string("two_point"); },
                        [](const EmpiricalLaw&) { return std::string("empirical"); },
                    },
                    law_);
}

bool WeightSpec::bounded() const { return !std::holds_alternative<ParetoShiftedLaw>(law_); }

bool operator==(const ConstantLaw& a, const ConstantLaw& b) { return a.value == b.value; }
bool operator==(const ParetoShiftedLaw& a, const ParetoShiftedLaw& b) {
  return a.shape == b.shape && a.scale == b.scale && a.loc == b.loc;
}
bool operator==(const TwoPointLaw& a, const TwoPointLaw& b) {
  return a.x1 == b.x1 && a.x2 == b.x2 && a.prob_x1 == b.prob_x1;
}
bool operator==(const EmpiricalLaw& a, const EmpiricalLaw& b) {
  return a.values == b.values && a.probs == b.probs;
}
bool operator==(const WeightSpec& a, const WeightSpec& b) { return a.law_ == b.law_; }

WeightVector WeightVector::from_values(std::vector<double> values) {
  double total = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!positive_finite(values[i]))
      throw InvalidArgument(fmt::format("weight of vertex {} is not positive", i + 1));
    total += values[i];
  }
  return WeightVector{std::move(values), total};
}

double sample_weight(const WeightSpec& spec, Rng& rng) {
  return std::visit(
      Overloaded{
          [](const ConstantLaw& c) { return c.value; },
          [&](const ParetoShiftedLaw& p) {
            // Inverse transform with unit minimum: Y = U^{-1/a} >= 1.
            const double y = std::pow(rng.uniform_open(), -1.0 / p.shape);
            return p.scale * y + p.loc;
          },
          [&](const TwoPointLaw& t) { return rng.uniform_open() < t.prob_x1 ? t.x1 : t.x2; },
          [&](const EmpiricalLaw& e) {
            const double u = rng.uniform_open();
            double cdf = 0.0;
            for (std::size_t i = 0; i + 1 < e.values.size(); ++i) {
              cdf += e.probs[i];
              if (u < cdf) return e.values[i];
            }
            return e.values.back();
          },
      },
      spec.law());
}

WeightVector sample_weights(const WeightSpec& spec, std::size_t n, Seed seed) {
  if (n < 1) throw InvalidArgument("sample_weights needs n >= 1");
  Rng rng(seed);
  WeightVector w;
  w.values.resize(n);
  for (double& v : w.values) {
    v = sample_weight(spec, rng);
    w.total += v;
  }
  return w;
}

double raw_moment(const WeightSpec& spec, int order) {
  if (order < 0) throw InvalidArgument("moment order must be >= 0");
  return std::visit(
      Overloaded{
          [&](const ConstantLaw& c) { return std::pow(c.value, order); },
          [&](const ParetoShiftedLaw& p) {
            if (order > 0 && p.shape <= order)
              throw InfiniteMoment(fmt::format(
                  "E W^{} is infinite for pareto shape {} (needs shape > {})", order, p.shape,
                  order));
            // Binomial expansion of (scale*Y + loc)^q with EY^j = a/(a-j).
            double m = 0.0;
            for (int j = 0; j <= order; ++j) {
              const double ey = j == 0 ? 1.0 : p.shape / (p.shape - j);
              m += binomial(order, j) * std::pow(p.scale, j) * std::pow(p.loc, order - j) * ey;
            }
            return m;
          },
          [&](const TwoPointLaw& t) {
            return t.prob_x1 * std::pow(t.x1, order) + (1.0 - t.prob_x1) * std::pow(t.x2, order);
          },
          [&](const EmpiricalLaw& e) {
            double m = 0.0;
            for (std::size_t i = 0; i < e.values.size(); ++i)
              m += e.probs[i] * std::pow(e.values[i], order);
            return m;
          },
      },
      spec.law());
}

MomentSummary analytic_moments(const WeightSpec& spec, int max_order) {
  if (max_order < 1) throw InvalidArgument("max_order must be >= 1");
  MomentSummary s;
  s.mean = raw_moment(spec, 1);
  s.second_moment = raw_moment(spec, 2);
  s.ratio = s.second_moment / s.mean;
  s.finite.resize(static_cast<std::size_t>(max_order));
  const auto* pareto = spec.get_if<ParetoShiftedLaw>();
  for (int q = 1; q <= max_order; ++q) s.finite[q - 1] = pareto == nullptr || pareto->shape > q;
  return s;
}

bool tail_condition_holds(const WeightSpec& spec, int k) {
  if (k < 3) throw InvalidArgument("cycle length must be >= 3");
  if (const auto* p = spec.get_if<ParetoShiftedLaw>()) return p->shape > 2.0 * k + 1.0;
  return true;
}

std::string to_config_block(const WeightSpec& spec) {
  std::string out = "[weights]\nfamily = " + spec.family_name() + "\n";
  std::visit(Overloaded{
                 [&](const ConstantLaw& c) { out += fmt::format("value = {}\n", c.value); },
                 [&](const ParetoShiftedLaw& p) {
                   out += fmt::format("shape = {}\nscale = {}\nloc = {}\n", p.shape, p.scale,
                                      p.loc);
                 },
                 [&](const TwoPointLaw& t) {
                   out += fmt::format("x1 = {}\nx2 = {}\nprob_x1 = {}\n", t.x1, t.x2, t.prob_x1);
                 },
                 [&](const EmpiricalLaw& e) {
                   out += fmt::format("values = {}\nprobs = {}\n", fmt::join(e.values, " "),
                                      fmt::join(e.probs, " "));
                 },
             },
             spec.law());
  return out;
}

WeightSpec parse_weight_spec(std::string_view block) {
  return weight_spec_from_config(ConfigFile::parse(block), "weights");
}

}  // namespace grg
