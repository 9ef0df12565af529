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

#include "grg/cycles.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

#include "grg/error.hpp"

namespace grg {
namespace {

void check_length(int k) {
  if (k < 3) throw InvalidArgument(fmt::format("cycle length must be >= 3, got {}", k));
  if (k > kMaxCycleLength)
    throw InvalidArgument(fmt::format("cycle length {} exceeds the supported maximum {}", k,
                                      kMaxCycleLength));
}

std::uint64_t count_from(const GrgGraph& graph, int k, Vertex v0) {
  std::uint64_t count = 0;
  for_each_cycle_from(graph, k, v0, [&count](std::span<const Vertex>) { ++count; });
  return count;
}

// Triangles {i, j, l} with i < j < l and i the given vertex.
std::uint64_t triangles_from(const GrgGraph& graph, Vertex i) {
  std::uint64_t count = 0;
  auto ni = graph.neighbors(i);
  auto first_above = [](std::span<const Vertex> list, Vertex v) {
    return std::upper_bound(list.begin(), list.end(), v);
  };
  for (auto jt = first_above(ni, i); jt != ni.end(); ++jt) {
    const Vertex j = *jt;
    auto nj = graph.neighbors(j);
    auto a = jt + 1;
    auto b = first_above(nj, j);
    while (a != ni.end() && b != nj.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        ++count;
        ++a;
        ++b;
      }
    }
  }
  return count;
}

}  // namespace

bool is_canonical(std::span<const Vertex> cycle) {
  if (cycle.size() < 3) return false;
  for (std::size_t a = 1; a < cycle.size(); ++a)
    if (cycle[a] <= cycle[0]) return false;
  return cycle[1] < cycle.back();
}

CanonicalCycle canonicalize(std::span<const Vertex> cycle) {
  const std::size_t k = cycle.size();
  if (k < 3) throw InvalidArgument("a cycle needs at least 3 vertices");
  const std::size_t start =
      static_cast<std::size_t>(std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
  CanonicalCycle out;
  out.vertices.resize(k);
  const bool forward = cycle[(start + 1) % k] < cycle[(start + k - 1) % k];
  for (std::size_t a = 0; a < k; ++a)
    out.vertices[a] = forward ? cycle[(start + a) % k] : cycle[(start + k - a) % k];
  return out;
}

std::uint64_t candidate_count(std::size_t n, int k) {
  if (k < 3) throw InvalidArgument(fmt::format("cycle length must be >= 3, got {}", k));
  if (static_cast<std::size_t>(k) > n)
    throw InvalidArgument(fmt::format("cycle length {} exceeds vertex count {}", k, n));
  std::uint64_t falling = 1;
  for (int i = 0; i < k; ++i)
    if (__builtin_mul_overflow(falling, static_cast<std::uint64_t>(n - i), &falling))
      throw std::overflow_error(fmt::format("(n)_k overflows 64 bits for n={}, k={}", n, k));
  return falling / (2 * static_cast<std::uint64_t>(k));
}

CycleCensus count_k_cycles(const GrgGraph& graph, int k) {
  check_length(k);
  if (static_cast<std::size_t>(k) > graph.n()) return {k, 0};
  const long long n = static_cast<long long>(graph.n());
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : total)
  for (long long v0 = 0; v0 < n; ++v0) total += count_from(graph, k, static_cast<Vertex>(v0));
  return {k, total};
}

CycleCensus count_triangles(const GrgGraph& graph) {
  const long long n = static_cast<long long>(graph.n());
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : total)
  for (long long i = 0; i < n; ++i) total += triangles_from(graph, static_cast<Vertex>(i));
  return {3, total};
}

namespace reference {

CycleCensus count_k_cycles(const GrgGraph& graph, int k) {
  check_length(k);
  std::uint64_t total = 0;
  if (static_cast<std::size_t>(k) <= graph.n())
    for (Vertex v0 = 0; v0 < graph.n(); ++v0) total += count_from(graph, k, v0);
  return {k, total};
}

CycleCensus count_triangles(const GrgGraph& graph) {
  std::uint64_t total = 0;
  for (Vertex i = 0; i < graph.n(); ++i) total += triangles_from(graph, i);
  return {3, total};
}

}  // namespace reference

CycleCensus brute_force_count(const GrgGraph& graph, int k) {
  check_length(k);
  const std::size_t n = graph.n();
  if (n > 10) throw InvalidArgument("brute_force_count is limited to n <= 10");
  if (static_cast<std::size_t>(k) > n) return {k, 0};
  // Plain adjacency matrix, independent of the sorted-list lookups.
  std::vector<char> adj(n * n, 0);
  for (auto [u, v] : graph.edges()) adj[u * n + v] = adj[v * n + u] = 1;

  std::vector<Vertex> tuple(static_cast<std::size_t>(k));
  std::vector<char> used(n, 0);
  std::uint64_t hits = 0;
  std::function<void(int)> place = [&](int depth) {
    if (depth == k) {
      bool all = true;
      for (int a = 0; a < k; ++a) all &= adj[tuple[a] * n + tuple[(a + 1) % k]] != 0;
      hits += all ? 1 : 0;
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      tuple[depth] = v;
      place(depth + 1);
      used[v] = 0;
    }
  };
  place(0);
  return {k, hits / (2 * static_cast<std::uint64_t>(k))};
}

void enumerate_cycles(const GrgGraph& graph, int k, EnumerationMode mode, const CycleSink& sink,
                      std::uint64_t cap) {
  check_length(k);
  const std::size_t n = graph.n();
  if (static_cast<std::size_t>(k) > n) return;
  if (mode == EnumerationMode::kCandidates) {
    const std::uint64_t total = candidate_count(n, k);
    if (total > cap)
      throw CapExceeded(fmt::format("|I({})| = {} on {} vertices exceeds the cap {}", k, total, n,
                                    cap));
    for (Vertex v0 = 0; v0 < n; ++v0) for_each_candidate_from(n, k, v0, sink);
    return;
  }
  for (Vertex v0 = 0; v0 < n; ++v0) for_each_cycle_from(graph, k, v0, sink);
}

std::vector<CanonicalCycle> collect_cycles(const GrgGraph& graph, int k, EnumerationMode mode,
                                           std::uint64_t cap) {
  std::vector<CanonicalCycle> out;
  enumerate_cycles(
      graph, k, mode,
      [&out](std::span<const Vertex> c) { out.push_back({{c.begin(), c.end()}}); }, cap);
  return out;
}

}  // namespace grg
