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

#include "grg/grg_model.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "grg/error.hpp"

namespace grg {
namespace {

void check_positive(double w_i, double w_j, double total) {
  if (!(w_i > 0.0) || !(w_j > 0.0) || !(total > 0.0))
    throw InvalidArgument(
        fmt::format("edge probability needs positive inputs (w_i={}, w_j={}, L={})", w_i, w_j,
                    total));
}

template <class Prob>
GrgGraph sample_pairs(const WeightVector& weights, Seed seed, Prob prob) {
  const std::size_t n = weights.size();
  if (n < 2) throw InvalidArgument("graph sampling needs n >= 2");
  Rng rng(seed);
  std::vector<std::vector<Vertex>> adjacency(n);
  // Lexicographic pair order keeps every list sorted without a final sort.
  for (Vertex i = 0; i < n; ++i) {
    const double w_i = weights[i];
    for (Vertex j = i + 1; j < n; ++j) {
      if (rng.uniform_open() < prob(w_i, weights[j])) {
        adjacency[i].push_back(j);
        adjacency[j].push_back(i);
      }
    }
  }
  return GrgGraph::from_adjacency(std::move(adjacency), weights);
}

void check_cycle(std::span<const Vertex> cycle, std::size_t n) {
  if (cycle.size() < 3) throw InvalidArgument("a cycle needs at least 3 vertices");
  for (std::size_t a = 0; a < cycle.size(); ++a) {
    if (cycle[a] >= n) throw InvalidArgument(fmt::format("cycle vertex {} out of range", cycle[a] + 1));
    for (std::size_t b = a + 1; b < cycle.size(); ++b)
      if (cycle[a] == cycle[b])
        throw InvalidArgument(fmt::format("vertex {} repeated in cycle", cycle[a] + 1));
  }
}

}  // namespace

double edge_probability(double w_i, double w_j, double total) {
  check_positive(w_i, w_j, total);
  const double prod = w_i * w_j;
  return prod / (total + prod);
}

double chung_lu_probability(double w_i, double w_j, double total) {
  check_positive(w_i, w_j, total);
  return std::min(1.0, w_i * w_j / total);
}

GrgGraph sample_grg(const WeightVector& weights, Seed seed) {
  const double total = weights.total;
  return sample_pairs(weights, seed, [total](double a, double b) {
    const double prod = a * b;
    return prod / (total + prod);
  });
}

GrgGraph sample_chung_lu(const WeightVector& weights, Seed seed) {
  const double total = weights.total;
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i] * weights[i] > total)
      throw InvalidArgument(fmt::format(
          "Chung-Lu requires W_i^2 <= L_n; vertex {} has W^2 = {} > L_n = {}", i + 1,
          weights[i] * weights[i], total));
  return sample_pairs(weights, seed, [total](double a, double b) { return a * b / total; });
}

double cycle_probability(const WeightVector& weights, std::span<const Vertex> cycle) {
  check_cycle(cycle, weights.size());
  double p = 1.0;
  for (std::size_t a = 0; a < cycle.size(); ++a) {
    const Vertex u = cycle[a];
    const Vertex v = cycle[(a + 1) % cycle.size()];
    p *= edge_probability(weights[u], weights[v], weights.total);
  }
  return p;
}

EdgeProbabilities::EdgeProbabilities(const WeightVector& weights)
    : n_(weights.size()), table_(n_ * n_, 0.0) {
  for (Vertex i = 0; i < n_; ++i)
    for (Vertex j = i + 1; j < n_; ++j) {
      const double p = edge_probability(weights[i], weights[j], weights.total);
      table_[i * n_ + j] = p;
      table_[j * n_ + i] = p;
    }
}

double EdgeProbabilities::cycle(std::span<const Vertex> cycle) const {
  double p = 1.0;
  for (std::size_t a = 0; a < cycle.size(); ++a)
    p *= (*this)(cycle[a], cycle[(a + 1) % cycle.size()]);
  return p;
}

}  // namespace grg
