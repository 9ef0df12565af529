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

#ifndef GRG_CHEN_STEIN_HPP_
#define GRG_CHEN_STEIN_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "grg/cycles.hpp"
#include "grg/grg_model.hpp"
#include "grg/rng.hpp"
#include "grg/weights.hpp"

namespace grg {

// Conditional (given the weights) Chen-Stein sums for one weight vector:
//   b1 = sum_a sum_{b in B_a} p_a p_b        (b = a included)
//   b2 = sum_a sum_{b in B_a, b != a} p_ab   (p_ab = E[Y_a Y_b | W])
// and Lambda = sum_a p_a, where B_a holds every candidate cycle sharing at
// least one edge with a.
struct ChenSteinTerms {
  double b1 = 0.0;
  double b2 = 0.0;
  double lambda_capital = 0.0;
};

enum class LambdaMode { kExact, kPlugin };

std::string to_string(LambdaMode mode);
LambdaMode lambda_mode_from_string(const std::string& name);

// Replication averages for one (spec, n, k). The right-hand side
// E(b1 + b2) + |E Lambda - lambda(k)| bounds the total variation distance
// only up to an unspecified multiplicative constant, which is not applied.
struct BoundReport {
  std::size_t n = 0;
  int k = 0;
  std::size_t replications = 0;
  double b1 = 0.0;
  double b2 = 0.0;
  double lambda_capital = 0.0;
  double lambda_target = 0.0;
  double gap = 0.0;
  LambdaMode mode = LambdaMode::kExact;

  double rhs() const { return b1 + b2 + gap; }
};

struct BoundReplication {
  std::size_t replication = 0;
  ChenSteinTerms terms;
  double lambda_plugin = 0.0;
};

// B_alpha as canonical cycles, alpha included, in sorted order. Throws
// CapExceeded when candidate_count(n, k) > cap.
std::vector<CanonicalCycle> neighborhood(const CanonicalCycle& alpha, std::size_t n,
                                         std::uint64_t cap = kDefaultCandidateCap);

bool shares_edge(std::span<const Vertex> a, std::span<const Vertex> b);

// E[Y_a Y_b | W]: product of edge probabilities over the union of the two
// edge sets.
double pair_probability(const WeightVector& weights, std::span<const Vertex> alpha,
                        std::span<const Vertex> beta);

// Exact b1, b2 and Lambda by enumerating I(k) and each B_alpha. Parallel
// over the minimum vertex of alpha with fixed per-vertex partial sums, so
// the floating-point result does not depend on the thread count.
ChenSteinTerms b1_b2_exact(const WeightVector& weights, int k,
                           std::uint64_t cap = kDefaultCandidateCap);

// Triangle-only closed form in O(n^3): for each edge {u, v} with
// q_w = p_uw p_vw, S1 = sum q_w and S2 = sum q_w^2,
//   Lambda = (1/3) sum p_uv S1,  b2 = sum p_uv (S1^2 - S2),
//   b1 = (1/3) sum p_uv^2 S2 + sum p_uv^2 (S1^2 - S2).
ChenSteinTerms b1_b2_triangles(const WeightVector& weights);

// Sum of cycle probabilities over I(k); 0 when n < k.
double lambda_capital(const WeightVector& weights, int k,
                      std::uint64_t cap = kDefaultCandidateCap);

// (1/2k) (sum W^2 / sum W)^k, an upper bound on Lambda.
double lambda_plugin(const WeightVector& weights, int k);

namespace reference {
ChenSteinTerms b1_b2_exact(const WeightVector& weights, int k,
                           std::uint64_t cap = kDefaultCandidateCap);
ChenSteinTerms b1_b2_triangles(const WeightVector& weights);
}  // namespace reference

// Per-replication terms for `replications` weight draws. k = 3 uses the
// closed form at any n; other k need candidate_count(n, k) <= cap.
std::vector<BoundReplication> bound_replications(const WeightSpec& spec, std::size_t n, int k,
                                                 std::size_t replications, Seed seed,
                                                 std::uint64_t cap = kDefaultCandidateCap);

BoundReport summarize_bounds(const WeightSpec& spec, std::size_t n, int k,
                             std::span<const BoundReplication> rows, LambdaMode mode);

BoundReport bound_report(const WeightSpec& spec, std::size_t n, int k, std::size_t replications,
                         Seed seed, std::uint64_t cap = kDefaultCandidateCap,
                         LambdaMode mode = LambdaMode::kExact);

}  // namespace grg

#endif  // GRG_CHEN_STEIN_HPP_
