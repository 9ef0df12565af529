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

#include "grg/chen_stein.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "grg/error.hpp"
#include "grg/poisson.hpp"

namespace grg {
namespace {

using Path = std::array<Vertex, kMaxCycleLength>;

bool has_cycle_edge(std::span<const Vertex> cycle, Vertex x, Vertex y) {
  const std::size_t k = cycle.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex a = cycle[i];
    const Vertex b = cycle[(i + 1) % k];
    if ((a == x && b == y) || (a == y && b == x)) return true;
  }
  return false;
}

// Visits every candidate cycle beta sharing an edge with alpha exactly once.
// A cycle through the edge {u, v} is the edge plus a u..v path on k - 2
// further vertices; it is attributed to the first alpha edge it contains.
// The sink receives beta (not canonicalized) and the number of shared edges.
template <class Sink>
void for_each_neighbor(std::span<const Vertex> alpha, std::size_t n, Sink&& sink) {
  const int k = static_cast<int>(alpha.size());
  Path beta{};
  for (int e = 0; e < k; ++e) {
    const Vertex u = alpha[e];
    const Vertex v = alpha[(e + 1) % k];
    beta[0] = u;
    beta[k - 1] = v;
    auto fill = [&](auto& self, int depth) -> void {
      if (depth == k - 1) {
        std::span<const Vertex> b(beta.data(), static_cast<std::size_t>(k));
        int first = -1;
        int shared = 0;
        for (int f = 0; f < k; ++f) {
          if (has_cycle_edge(b, alpha[f], alpha[(f + 1) % k])) {
            if (first < 0) first = f;
            ++shared;
          }
        }
        if (first == e) sink(b, shared);
        return;
      }
      for (Vertex x = 0; x < n; ++x) {
        if (x == u || x == v) continue;
        bool used = false;
        for (int d = 1; d < depth; ++d) used |= beta[d] == x;
        if (used) continue;
        beta[depth] = x;
        self(self, depth + 1);
      }
    };
    fill(fill, 1);
  }
}

void check_cap(std::size_t n, int k, std::uint64_t cap) {
  const std::uint64_t total = candidate_count(n, k);
  if (total > cap)
    throw CapExceeded(fmt::format("|I({})| = {} on {} vertices exceeds the cap {}", k, total, n,
                                  cap));
}

// Contribution of every alpha whose minimum vertex is v0.
ChenSteinTerms terms_from(const EdgeProbabilities& prob, int k, Vertex v0) {
  ChenSteinTerms t;
  for_each_candidate_from(prob.n(), k, v0, [&](std::span<const Vertex> alpha) {
    const double p_alpha = prob.cycle(alpha);
    t.lambda_capital += p_alpha;
    for_each_neighbor(alpha, prob.n(), [&](std::span<const Vertex> beta, int shared) {
      const double p_beta = prob.cycle(beta);
      t.b1 += p_alpha * p_beta;
      if (shared == k) return;  // beta == alpha
      double p_pair = p_alpha;
      const std::size_t kk = beta.size();
      for (std::size_t i = 0; i < kk; ++i) {
        const Vertex x = beta[i];
        const Vertex y = beta[(i + 1) % kk];
        if (!has_cycle_edge(alpha, x, y)) p_pair *= prob(x, y);
      }
      t.b2 += p_pair;
    });
  });
  return t;
}

// Closed-form triangle terms for the edges {u, v} with u the smaller end.
ChenSteinTerms triangle_terms_from(const EdgeProbabilities& prob, Vertex u) {
  const std::size_t n = prob.n();
  ChenSteinTerms t;
  double self_pairs = 0.0;  // sum over edges of p_uv^2 S2, each triangle 3 times
  double lambda3 = 0.0;     // sum over edges of p_uv S1, each triangle 3 times
  for (Vertex v = u + 1; v < n; ++v) {
    const double p_uv = prob(u, v);
    double s1 = 0.0, s2 = 0.0;
    for (Vertex w = 0; w < n; ++w) {
      if (w == u || w == v) continue;
      const double q = prob(u, w) * prob(v, w);
      s1 += q;
      s2 += q * q;
    }
    const double cross = s1 * s1 - s2;
    lambda3 += p_uv * s1;
    self_pairs += p_uv * p_uv * s2;
    t.b1 += p_uv * p_uv * cross;
    t.b2 += p_uv * cross;
  }
  t.b1 += self_pairs / 3.0;
  t.lambda_capital = lambda3 / 3.0;
  return t;
}

template <class Kernel>
ChenSteinTerms reduce_parallel(std::size_t n, Kernel kernel) {
  std::vector<ChenSteinTerms> partial(n);
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long v = 0; v < count; ++v) partial[v] = kernel(static_cast<Vertex>(v));
  ChenSteinTerms t;
  for (const auto& p : partial) {
    t.b1 += p.b1;
    t.b2 += p.b2;
    t.lambda_capital += p.lambda_capital;
  }
  return t;
}

template <class Kernel>
ChenSteinTerms reduce_serial(std::size_t n, Kernel kernel) {
  ChenSteinTerms t;
  for (Vertex v = 0; v < n; ++v) {
    const auto p = kernel(v);
    t.b1 += p.b1;
    t.b2 += p.b2;
    t.lambda_capital += p.lambda_capital;
  }
  return t;
}

void check_exact_args(const WeightVector& weights, int k, std::uint64_t cap) {
  if (k < 3) throw InvalidArgument("cycle length must be >= 3");
  if (k > kMaxCycleLength) throw InvalidArgument("cycle length too large");
  if (static_cast<std::size_t>(k) <= weights.size()) check_cap(weights.size(), k, cap);
}

}  // namespace

std::string to_string(LambdaMode mode) { return mode == LambdaMode::kExact ? "exact" : "plugin"; }

LambdaMode lambda_mode_from_string(const std::string& name) {
  if (name == "exact") return LambdaMode::kExact;
  if (name == "plugin") return LambdaMode::kPlugin;
  throw InvalidArgument(fmt::format("unknown lambda mode '{}' (exact|plugin)", name));
}

bool shares_edge(std::span<const Vertex> a, std::span<const Vertex> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (has_cycle_edge(b, a[i], a[(i + 1) % a.size()])) return true;
  return false;
}

std::vector<CanonicalCycle> neighborhood(const CanonicalCycle& alpha, std::size_t n,
                                         std::uint64_t cap) {
  const int k = static_cast<int>(alpha.length());
  if (!is_canonical(alpha.vertices)) throw InvalidArgument("alpha is not a canonical cycle");
  if (alpha.vertices.back() >= n || static_cast<std::size_t>(k) > n)
    throw InvalidArgument("alpha does not fit on n vertices");
  check_cap(n, k, cap);
  std::vector<CanonicalCycle> out;
  for_each_neighbor(alpha.vertices, n,
                    [&](std::span<const Vertex> beta, int) { out.push_back(canonicalize(beta)); });
  std::sort(out.begin(), out.end());
  return out;
}

double pair_probability(const WeightVector& weights, std::span<const Vertex> alpha,
                        std::span<const Vertex> beta) {
  double p = cycle_probability(weights, alpha);
  (void)cycle_probability(weights, beta);  // validates beta
  const std::size_t k = beta.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex x = beta[i];
    const Vertex y = beta[(i + 1) % k];
    if (!has_cycle_edge(alpha, x, y)) p *= edge_probability(weights[x], weights[y], weights.total);
  }
  return p;
}

ChenSteinTerms b1_b2_exact(const WeightVector& weights, int k, std::uint64_t cap) {
  check_exact_args(weights, k, cap);
  if (static_cast<std::size_t>(k) > weights.size()) return {};
  const EdgeProbabilities prob(weights);
  return reduce_parallel(weights.size(), [&](Vertex v0) { return terms_from(prob, k, v0); });
}

ChenSteinTerms b1_b2_triangles(const WeightVector& weights) {
  if (weights.size() < 3) return {};
  const EdgeProbabilities prob(weights);
  return reduce_parallel(weights.size(), [&](Vertex u) { return triangle_terms_from(prob, u); });
}

namespace reference {

ChenSteinTerms b1_b2_exact(const WeightVector& weights, int k, std::uint64_t cap) {
  check_exact_args(weights, k, cap);
  if (static_cast<std::size_t>(k) > weights.size()) return {};
  const EdgeProbabilities prob(weights);
  return reduce_serial(weights.size(), [&](Vertex v0) { return terms_from(prob, k, v0); });
}

ChenSteinTerms b1_b2_triangles(const WeightVector& weights) {
  if (weights.size() < 3) return {};
  const EdgeProbabilities prob(weights);
  return reduce_serial(weights.size(), [&](Vertex u) { return triangle_terms_from(prob, u); });
}

}  // namespace reference

double lambda_capital(const WeightVector& weights, int k, std::uint64_t cap) {
  check_exact_args(weights, k, cap);
  const std::size_t n = weights.size();
  if (static_cast<std::size_t>(k) > n) return 0.0;
  const EdgeProbabilities prob(weights);
  std::vector<double> partial(n, 0.0);
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long v0 = 0; v0 < count; ++v0) {
    double s = 0.0;
    for_each_candidate_from(n, k, static_cast<Vertex>(v0),
                            [&](std::span<const Vertex> c) { s += prob.cycle(c); });
    partial[v0] = s;
  }
  return std::accumulate(partial.begin(), partial.end(), 0.0);
}

double lambda_plugin(const WeightVector& weights, int k) {
  if (k < 3) throw InvalidArgument("cycle length must be >= 3");
  double sum = 0.0, sum_sq = 0.0;
  for (double w : weights.values) {
    sum += w;
    sum_sq += w * w;
  }
  if (!(sum > 0.0)) throw InvalidArgument("lambda_plugin needs a nonempty weight vector");
  return std::pow(sum_sq / sum, k) / (2.0 * k);
}

std::vector<BoundReplication> bound_replications(const WeightSpec& spec, std::size_t n, int k,
                                                 std::size_t replications, Seed seed,
                                                 std::uint64_t cap) {
  if (replications < 1) throw InvalidArgument("replications must be >= 1");
  if (n < static_cast<std::size_t>(std::max(k, 3)))
    throw InvalidArgument(fmt::format("need n >= k (n={}, k={})", n, k));
  if (k != 3) check_cap(n, k, cap);
  std::vector<BoundReplication> rows(replications);
  // Nested regions run single-threaded; the per-replication kernels
  // parallelize internally with deterministic reductions.
  for (std::size_t r = 0; r < replications; ++r) {
    const Seed rep_seed = derive_seed(seed, r);
    const WeightVector w = sample_weights(spec, n, derive_seed(rep_seed, kWeightStream));
    rows[r].replication = r;
    rows[r].terms = k == 3 ? b1_b2_triangles(w) : b1_b2_exact(w, k, cap);
    rows[r].lambda_plugin = lambda_plugin(w, k);
  }
  return rows;
}

BoundReport summarize_bounds(const WeightSpec& spec, std::size_t n, int k,
                             std::span<const BoundReplication> rows, LambdaMode mode) {
  if (rows.empty()) throw InvalidArgument("no replications to summarize");
  BoundReport report;
  report.n = n;
  report.k = k;
  report.replications = rows.size();
  report.mode = mode;
  for (const auto& row : rows) {
    report.b1 += row.terms.b1;
    report.b2 += row.terms.b2;
    report.lambda_capital +=
        mode == LambdaMode::kExact ? row.terms.lambda_capital : row.lambda_plugin;
  }
  const double count = static_cast<double>(rows.size());
  report.b1 /= count;
  report.b2 /= count;
  report.lambda_capital /= count;
  report.lambda_target = lambda_k(analytic_moments(spec).ratio, k).lambda;
  report.gap = std::abs(report.lambda_capital - report.lambda_target);
  return report;
}

BoundReport bound_report(const WeightSpec& spec, std::size_t n, int k, std::size_t replications,
                         Seed seed, std::uint64_t cap, LambdaMode mode) {
  const auto rows = bound_replications(spec, n, k, replications, seed, cap);
  return summarize_bounds(spec, n, k, rows, mode);
}

}  // namespace grg
