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

#ifndef GRG_SPECTRAL_HPP_
#define GRG_SPECTRAL_HPP_

#include <cstddef>
#include <cstdint>

#include "grg/graph.hpp"

namespace grg {

// Lower bound on the adjacency spectral radius from the vertex, edge and
// triangle counts:
//   lambda_1 >= (6 D + sqrt(36 D^2 + 32 e^3 / n)) / (4 e).
double spectral_lower_bound(std::size_t n, std::uint64_t edges, std::uint64_t triangles);

// Epidemic threshold tau = 1 / lambda_1.
double epidemic_threshold(double lambda1);

struct PowerIterationOptions {
  double tolerance = 1e-10;  // on the residual |A x - rho x| / |x|
  std::size_t max_iters = 1000000;
};

// Dominant adjacency eigenvalue by power iteration on A + I (the shift
// removes the +-lambda_1 oscillation of bipartite graphs). Returns the
// Rayleigh quotient once the residual is within tolerance; throws
// ConvergenceError otherwise.
double power_iteration_lambda1(const GrgGraph& graph, PowerIterationOptions options = {});

namespace reference {
double power_iteration_lambda1(const GrgGraph& graph, PowerIterationOptions options = {});
}

struct ThresholdReport {
  std::size_t n = 0;
  std::uint64_t edges = 0;
  std::uint64_t triangles = 0;
  double lower_bound = 0.0;     // on lambda_1
  double lambda1 = 0.0;         // power iteration
  double tau_estimate = 0.0;    // 1 / lambda1
  double tau_upper_bound = 0.0; // 1 / lower_bound
  bool bound_holds = false;     // lower_bound <= lambda1 + 1e-6
};

inline constexpr double kSpectralBoundSlack = 1e-6;

ThresholdReport threshold_report(const GrgGraph& graph, PowerIterationOptions options = {});

}  // namespace grg

#endif  // GRG_SPECTRAL_HPP_
