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

#include "grg/spectral.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include <fmt/format.h>

#include "grg/cycles.hpp"
#include "grg/error.hpp"

namespace grg {
namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void multiply_serial(const GrgGraph& g, const std::vector<double>& x, std::vector<double>& y) {
  for (Vertex v = 0; v < g.n(); ++v) {
    double s = 0.0;
    for (Vertex u : g.neighbors(v)) s += x[u];
    y[v] = s;
  }
}

void multiply_parallel(const GrgGraph& g, const std::vector<double>& x, std::vector<double>& y) {
  const long long n = static_cast<long long>(g.n());
#pragma omp parallel for schedule(static)
  for (long long v = 0; v < n; ++v) {
    double s = 0.0;
    for (Vertex u : g.neighbors(static_cast<Vertex>(v))) s += x[u];
    y[v] = s;
  }
}

template <class Multiply>
double power_iteration(const GrgGraph& graph, PowerIterationOptions options, Multiply multiply) {
  const std::size_t n = graph.n();
  if (n == 0) throw InvalidArgument("power iteration needs a nonempty graph");
  if (graph.edge_count() == 0) return 0.0;
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> ax(n);
  for (std::size_t it = 0; it < options.max_iters; ++it) {
    multiply(graph, x, ax);
    const double rho = dot(x, ax);  // |x| = 1
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = ax[i] - rho * x[i];
      residual += r * r;
    }
    if (std::sqrt(residual) <= options.tolerance) return rho;
    // x <- (A + I) x / |(A + I) x|
    for (std::size_t i = 0; i < n; ++i) ax[i] += x[i];
    const double norm = std::sqrt(dot(ax, ax));
    for (std::size_t i = 0; i < n; ++i) x[i] = ax[i] / norm;
  }
  throw ConvergenceError(fmt::format("power iteration did not converge within {} iterations",
                                     options.max_iters));
}

}  // namespace

double spectral_lower_bound(std::size_t n, std::uint64_t edges, std::uint64_t triangles) {
  if (edges == 0) throw InvalidArgument("spectral lower bound needs at least one edge");
  if (n == 0) throw InvalidArgument("spectral lower bound needs n >= 1");
  const double e = static_cast<double>(edges);
  const double d = static_cast<double>(triangles);
  return (6.0 * d + std::sqrt(36.0 * d * d + 32.0 * e * e * e / static_cast<double>(n))) /
         (4.0 * e);
}

double epidemic_threshold(double lambda1) {
  if (!(lambda1 > 0.0)) throw InvalidArgument("epidemic threshold needs lambda_1 > 0");
  return 1.0 / lambda1;
}

double power_iteration_lambda1(const GrgGraph& graph, PowerIterationOptions options) {
  return power_iteration(graph, options, multiply_parallel);
}

namespace reference {
double power_iteration_lambda1(const GrgGraph& graph, PowerIterationOptions options) {
  return power_iteration(graph, options, multiply_serial);
}
}  // namespace reference

ThresholdReport threshold_report(const GrgGraph& graph, PowerIterationOptions options) {
  ThresholdReport r;
  r.n = graph.n();
  r.edges = graph.edge_count();
  r.triangles = graph.n() >= 3 ? count_triangles(graph).count : 0;
  r.lambda1 = power_iteration_lambda1(graph, options);
  if (r.edges == 0) {
    // No edges: lambda_1 = 0 and the threshold is unbounded.
    r.lower_bound = 0.0;
    r.tau_estimate = std::numeric_limits<double>::infinity();
    r.tau_upper_bound = std::numeric_limits<double>::infinity();
    r.bound_holds = true;
    return r;
  }
  r.lower_bound = spectral_lower_bound(r.n, r.edges, r.triangles);
  r.tau_estimate = epidemic_threshold(r.lambda1);
  r.tau_upper_bound = epidemic_threshold(r.lower_bound);
  r.bound_holds = r.lower_bound <= r.lambda1 + kSpectralBoundSlack;
  return r;
}

}  // namespace grg
