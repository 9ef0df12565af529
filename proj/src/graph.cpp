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

#include "grg/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "grg/error.hpp"

namespace grg {

GrgGraph GrgGraph::from_adjacency(std::vector<std::vector<Vertex>> adjacency,
                                  WeightVector weights) {
  const std::size_t n = adjacency.size();
  if (!weights.values.empty() && weights.size() != n)
    throw InvalidArgument("weight vector size does not match vertex count");
  GrgGraph g;
  g.n_ = n;
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + adjacency[v].size();
  g.targets_.reserve(g.offsets_[n]);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& list = adjacency[v];
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i] >= n) throw InvalidArgument(fmt::format("vertex id {} out of range", list[i]));
      if (list[i] == v) throw InvalidArgument(fmt::format("self-loop at vertex {}", v + 1));
      if (i > 0 && list[i - 1] >= list[i])
        throw InvalidArgument(fmt::format("neighbor list of vertex {} not strictly sorted", v + 1));
    }
    g.targets_.insert(g.targets_.end(), list.begin(), list.end());
  }
  if (g.targets_.size() % 2 != 0) throw InvalidArgument("adjacency is not symmetric");
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v))
      if (!g.has_edge(u, v)) throw InvalidArgument("adjacency is not symmetric");
  g.weights_ = std::move(weights);
  return g;
}

GrgGraph GrgGraph::from_edges(std::size_t n, std::span<const Edge> edges, WeightVector weights) {
  std::vector<std::vector<Vertex>> adjacency(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw InvalidArgument(fmt::format("edge ({}, {}) has a vertex id out of range", u + 1, v + 1));
    if (u == v) throw InvalidArgument(fmt::format("self-loop at vertex {}", u + 1));
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& list = adjacency[v];
    std::sort(list.begin(), list.end());
    auto dup = std::adjacent_find(list.begin(), list.end());
    if (dup != list.end())
      throw InvalidArgument(fmt::format("duplicate edge ({}, {})", v + 1, *dup + 1));
  }
  return from_adjacency(std::move(adjacency), std::move(weights));
}

GrgGraph GrgGraph::complete(std::size_t n) {
  std::vector<std::vector<Vertex>> adjacency(n);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u = 0; u < n; ++u)
      if (u != v) adjacency[v].push_back(u);
  return from_adjacency(std::move(adjacency));
}

GrgGraph GrgGraph::cycle(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle graph needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return from_edges(n, edges);
}

bool GrgGraph::has_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return false;
  // Search the shorter list.
  if (degree(u) > degree(v)) std::swap(u, v);
  auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> GrgGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

void write_edge_list(std::ostream& out, const GrgGraph& graph) {
  out << graph.n() << ' ' << graph.edge_count() << '\n';
  for (auto [u, v] : graph.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

GrgGraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("edge list: missing \"n m\" header");
  long long n = -1, m = -1;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m) || (header >> extra) || n < 0 || m < 0)
      throw ParseError(fmt::format("edge list line {}: malformed \"n m\" header", line_no));
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_line())
      throw ParseError(fmt::format("edge list: expected {} edges, found {}", m, i));
    std::istringstream row(line);
    long long u = 0, v = 0;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra))
      throw ParseError(fmt::format("edge list line {}: expected \"u v\"", line_no));
    if (u < 1 || v < 1 || u > n || v > n)
      throw ParseError(fmt::format("edge list line {}: vertex id out of range 1..{}", line_no, n));
    edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
  }
  if (next_line()) throw ParseError(fmt::format("edge list line {}: more than {} edges", line_no, m));
  try {
    return GrgGraph::from_edges(static_cast<std::size_t>(n), edges);
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

GrgGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(fmt::format("cannot open edge list '{}'", path));
  return read_edge_list(in);
}

}  // namespace grg
