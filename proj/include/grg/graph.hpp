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

#ifndef GRG_GRAPH_HPP_
#define GRG_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grg/weights.hpp"

namespace grg {

// 0-based vertex id. Textual I/O is 1-based.
using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph stored as compressed, strictly sorted neighbor
// lists. Immutable after construction.
class GrgGraph {
 public:
  GrgGraph() = default;

  // Builds from an edge list; rejects self-loops, duplicates and
  // out-of-range ids. `weights` is either empty or of size n.
  static GrgGraph from_edges(std::size_t n, std::span<const Edge> edges,
                             WeightVector weights = {});

  // Builds from per-vertex neighbor lists that are already strictly
  // sorted and symmetric (checked).
  static GrgGraph from_adjacency(std::vector<std::vector<Vertex>> adjacency,
                                 WeightVector weights = {});

  static GrgGraph complete(std::size_t n);
  static GrgGraph cycle(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t edge_count() const { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  const WeightVector& weights() const { return weights_; }

  // Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
  WeightVector weights_;
};

// "n m" header, then m lines "u v" with 1-based ids.
void write_edge_list(std::ostream& out, const GrgGraph& graph);
GrgGraph read_edge_list(std::istream& in);
GrgGraph read_edge_list_file(const std::string& path);

}  // namespace grg

#endif  // GRG_GRAPH_HPP_
