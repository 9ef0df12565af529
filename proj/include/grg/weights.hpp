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

#ifndef GRG_WEIGHTS_HPP_
#define GRG_WEIGHTS_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "grg/rng.hpp"

namespace grg {

// Vertex weight laws. All supports are strictly positive.

struct ConstantLaw {
  double value = 1.0;
};

// W = scale * Y + loc with Y ~ Pareto(shape), P(Y > y) = y^-shape for y >= 1.
struct ParetoShiftedLaw {
  double shape = 1.0;
  double scale = 1.0;
  double loc = 0.0;
};

// W = x1 with probability prob_x1, else x2.
struct TwoPointLaw {
  double x1 = 1.0;
  double x2 = 2.0;
  double prob_x1 = 0.5;
};

// Finite discrete law. Probabilities are renormalized on construction.
struct EmpiricalLaw {
  std::vector<double> values;
  std::vector<double> probs;
};

class WeightSpec {
 public:
  using Law = std::variant<ConstantLaw, ParetoShiftedLaw, TwoPointLaw, EmpiricalLaw>;

  // Validating factories; throw InvalidArgument on bad parameters.
  static WeightSpec constant(double value);
  static WeightSpec pareto_shifted(double shape, double scale, double loc);
  static WeightSpec two_point(double x1, double x2, double prob_x1);
  static WeightSpec empirical(std::vector<double> values, std::vector<double> probs);

  const Law& law() const { return law_; }
  std::string family_name() const;

  // True when the support is bounded (every family except pareto_shifted).
  bool bounded() const;

  template <class T>
  const T* get_if() const { return std::get_if<T>(&law_); }

  friend bool operator==(const WeightSpec&, const WeightSpec&);

 private:
  explicit WeightSpec(Law law) : law_(std::move(law)) {}
  Law law_;
};

bool operator==(const ConstantLaw&, const ConstantLaw&);
bool operator==(const ParetoShiftedLaw&, const ParetoShiftedLaw&);
bool operator==(const TwoPointLaw&, const TwoPointLaw&);
bool operator==(const EmpiricalLaw&, const EmpiricalLaw&);

// A sampled weight sequence W_1..W_n and its total L_n.
struct WeightVector {
  std::vector<double> values;
  double total = 0.0;

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }

  // Computes the total from the entries; throws on nonpositive entries.
  static WeightVector from_values(std::vector<double> values);
};

struct MomentSummary {
  double mean = 0.0;           // EW
  double second_moment = 0.0;  // EW^2
  double ratio = 0.0;          // EW^2 / EW
  // finite[q - 1] tells whether EW^q is finite, q = 1..max_order.
  std::vector<bool> finite;
};

double sample_weight(const WeightSpec& spec, Rng& rng);

// n i.i.d. draws, deterministic for fixed (spec, n, seed).
WeightVector sample_weights(const WeightSpec& spec, std::size_t n, Seed seed);

// E W^order; throws InfiniteMoment when the moment diverges.
double raw_moment(const WeightSpec& spec, int order);

// Mean, second moment and their ratio, plus finiteness flags for orders
// 1..max_order. Throws InfiniteMoment if EW^2 itself is infinite.
MomentSummary analytic_moments(const WeightSpec& spec, int max_order = 2);

// Whether P(W > x) = o(x^{-2k-1}), the tail condition for k-cycles.
bool tail_condition_holds(const WeightSpec& spec, int k);

// Structured text block:
//
//   [weights]
//   family = pareto_shifted
//   shape = 9.5
//   scale = 10
//   loc = 1
//
// Empirical laws use whitespace-separated lists for `values` and `probs`.
std::string to_config_block(const WeightSpec& spec);
WeightSpec parse_weight_spec(std::string_view block);

}  // namespace grg

#endif  // GRG_WEIGHTS_HPP_
