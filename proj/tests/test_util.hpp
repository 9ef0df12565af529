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

#ifndef GRG_TESTS_TEST_UTIL_HPP_
#define GRG_TESTS_TEST_UTIL_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "grg/graph.hpp"
#include "grg/weights.hpp"

namespace grg::testing {

// Erdos-Renyi graph from a plain std::mt19937, independent of the
// library's samplers.
inline GrgGraph random_graph(std::size_t n, double p, std::uint32_t seed) {
  std::mt19937 gen(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (coin(gen)) edges.emplace_back(i, j);
  return GrgGraph::from_edges(n, edges);
}

inline WeightVector random_weights(std::size_t n, double lo, double hi, std::uint32_t seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> w(n);
  for (double& x : w) x = u(gen);
  return WeightVector::from_values(std::move(w));
}

inline WeightVector constant_weights(std::size_t n, double s) {
  return WeightVector::from_values(std::vector<double>(n, s));
}

}  // namespace grg::testing

#endif  // GRG_TESTS_TEST_UTIL_HPP_
