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

#ifndef GRG_GRG_MODEL_HPP_
#define GRG_GRG_MODEL_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "grg/graph.hpp"
#include "grg/rng.hpp"
#include "grg/weights.hpp"

namespace grg {

// w_i w_j / (L_n + w_i w_j). Throws on nonpositive inputs.
double edge_probability(double w_i, double w_j, double total);

// w_i w_j / L_n, valid when both w^2 <= L_n.
double chung_lu_probability(double w_i, double w_j, double total);

// Each pair {i, j}, i < j, is visited in lexicographic order and consumes
// exactly one uniform variate; the edge is present iff u < p_ij.
GrgGraph sample_grg(const WeightVector& weights, Seed seed);

// Same visiting order with p_ij = W_i W_j / L_n. Throws InvalidArgument
// naming the first vertex with W_i^2 > L_n.
GrgGraph sample_chung_lu(const WeightVector& weights, Seed seed);

// Product of edge probabilities along the closed cycle
// (v_0, ..., v_{k-1}, v_0). Throws on k < 3 or a repeated vertex.
double cycle_probability(const WeightVector& weights, std::span<const Vertex> cycle);

// Dense symmetric table of GRG edge probabilities with a zero diagonal.
class EdgeProbabilities {
 public:
  explicit EdgeProbabilities(const WeightVector& weights);

  std::size_t n() const { return n_; }
  double operator()(Vertex i, Vertex j) const { return table_[i * n_ + j]; }

  // Product over the closed cycle.
  double cycle(std::span<const Vertex> cycle) const;

 private:
  std::size_t n_;
  std::vector<double> table_;
};

}  // namespace grg

#endif  // GRG_GRG_MODEL_HPP_
