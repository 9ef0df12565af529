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

#ifndef GRG_CYCLES_HPP_
#define GRG_CYCLES_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "grg/graph.hpp"

namespace grg {

// A k-cycle written as (v_0, ..., v_{k-1}) with v_0 the minimum vertex and
// v_1 < v_{k-1}. Every undirected cycle has exactly one such form among
// its 2k rotations and reflections.
struct CanonicalCycle {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.size(); }
  friend bool operator==(const CanonicalCycle&, const CanonicalCycle&) = default;
  friend auto operator<=>(const CanonicalCycle&, const CanonicalCycle&) = default;
};

bool is_canonical(std::span<const Vertex> cycle);
// Rotates and reflects a cycle of distinct vertices into canonical form.
CanonicalCycle canonicalize(std::span<const Vertex> cycle);

struct CycleCensus {
  int k = 0;
  std::uint64_t count = 0;
};

// (n)_k / (2k), the number of potential k-cycles on n labeled vertices.
// Throws InvalidArgument unless 3 <= k <= n, and std::overflow_error if
// (n)_k does not fit in 64 bits.
std::uint64_t candidate_count(std::size_t n, int k);

inline constexpr int kMaxCycleLength = 32;

// Exact k-cycle count. Parallel over the minimum vertex v_0; the integer
// reduction makes the result independent of the thread count.
CycleCensus count_k_cycles(const GrgGraph& graph, int k);

// Sorted-list intersection over i < j < l.
CycleCensus count_triangles(const GrgGraph& graph);

// Ordered k-tuples of distinct vertices with all k edges present, divided
// by 2k. Test oracle; refuses n > 10.
CycleCensus brute_force_count(const GrgGraph& graph, int k);

namespace reference {
// Single-threaded versions of the kernels above.
CycleCensus count_k_cycles(const GrgGraph& graph, int k);
CycleCensus count_triangles(const GrgGraph& graph);
}  // namespace reference

enum class EnumerationMode {
  kPresent,     // cycles present in the graph
  kCandidates,  // all of I(k) on the graph's vertex set
};

inline constexpr std::uint64_t kDefaultCandidateCap = 200000;

using CycleSink = std::function<void(std::span<const Vertex>)>;

// Yields each canonical cycle exactly once, ordered by v_0 and then
// lexicographically. Candidate mode throws CapExceeded when
// candidate_count(n, k) > cap.
void enumerate_cycles(const GrgGraph& graph, int k, EnumerationMode mode, const CycleSink& sink,
                      std::uint64_t cap = kDefaultCandidateCap);
std::vector<CanonicalCycle> collect_cycles(const GrgGraph& graph, int k, EnumerationMode mode,
                                           std::uint64_t cap = kDefaultCandidateCap);

// DFS kernels rooted at a fixed minimum vertex v_0. Exposed so that
// callers can partition work by v_0.
namespace detail {

template <class Sink>
void extend_present(const GrgGraph& g, int k, std::array<Vertex, kMaxCycleLength>& path, int depth,
                    Sink& sink) {
  const Vertex v0 = path[0];
  const Vertex last = path[depth - 1];
  if (depth == k - 1) {
    // Closing vertex: adjacent to both ends, larger than v_1.
    auto root = g.neighbors(v0);
    for (Vertex u : g.neighbors(last)) {
      if (u <= path[1]) continue;
      bool on_path = false;
      for (int d = 2; d < depth; ++d) on_path |= path[d] == u;
      if (on_path) continue;
      if (!std::binary_search(root.begin(), root.end(), u)) continue;
      path[depth] = u;
      sink(std::span<const Vertex>(path.data(), static_cast<std::size_t>(k)));
    }
    return;
  }
  for (Vertex u : g.neighbors(last)) {
    if (u <= v0) continue;
    bool on_path = false;
    for (int d = 1; d < depth; ++d) on_path |= path[d] == u;
    if (on_path) continue;
    path[depth] = u;
    extend_present(g, k, path, depth + 1, sink);
  }
}

template <class Sink>
void extend_candidates(std::size_t n, int k, std::array<Vertex, kMaxCycleLength>& path, int depth,
                       Sink& sink) {
  const Vertex v0 = path[0];
  const Vertex lower = depth == k - 1 ? path[1] : v0;
  for (Vertex u = lower + 1; u < n; ++u) {
    bool on_path = false;
    for (int d = 1; d < depth; ++d) on_path |= path[d] == u;
    if (on_path) continue;
    path[depth] = u;
    if (depth == k - 1)
      sink(std::span<const Vertex>(path.data(), static_cast<std::size_t>(k)));
    else
      extend_candidates(n, k, path, depth + 1, sink);
  }
}

}  // namespace detail

template <class Sink>
void for_each_cycle_from(const GrgGraph& graph, int k, Vertex v0, Sink&& sink) {
  std::array<Vertex, kMaxCycleLength> path{};
  path[0] = v0;
  for (Vertex v1 : graph.neighbors(v0)) {
    if (v1 <= v0) continue;
    path[1] = v1;
    detail::extend_present(graph, k, path, 2, sink);
  }
}

template <class Sink>
void for_each_candidate_from(std::size_t n, int k, Vertex v0, Sink&& sink) {
  std::array<Vertex, kMaxCycleLength> path{};
  path[0] = v0;
  for (Vertex v1 = v0 + 1; v1 < n; ++v1) {
    path[1] = v1;
    detail::extend_candidates(n, k, path, 2, sink);
  }
}

}  // namespace grg

#endif  // GRG_CYCLES_HPP_
