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

#include <doctest.h>

#include <array>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "grg/error.hpp"
#include "grg/graph.hpp"
#include "grg/grg_model.hpp"
#include "test_util.hpp"

using namespace grg;

TEST_CASE("edge probability") {
  CHECK(edge_probability(1, 1, 2) == doctest::Approx(1.0 / 3.0));
  CHECK(edge_probability(1e-12, 5, 10) < 1e-12);
  CHECK_THROWS_AS(edge_probability(0, 1, 2), InvalidArgument);
  CHECK_THROWS_AS(edge_probability(1, -1, 2), InvalidArgument);
  CHECK_THROWS_AS(edge_probability(1, 1, 0), InvalidArgument);
}

TEST_CASE("erdos-renyi special case") {
  for (double lambda : {0.5, 1.0, 3.0}) {
    for (std::size_t n : {10u, 100u, 1000u}) {
      const double dn = static_cast<double>(n);
      const double w = dn * lambda / (dn - lambda);
      CHECK(edge_probability(w, w, dn * w) == doctest::Approx(lambda / dn).epsilon(1e-13));
    }
  }
}

TEST_CASE("edge probability is symmetric and monotone") {
  const double total = 50.0;
  for (double a = 0.5; a < 10; a += 0.75) {
    for (double b = 0.5; b < 10; b += 0.75) {
      CHECK(edge_probability(a, b, total) == edge_probability(b, a, total));
      CHECK(edge_probability(a + 0.1, b, total) > edge_probability(a, b, total));
      CHECK(edge_probability(a, b, total) < 1.0);
    }
  }
}

TEST_CASE("two-vertex graph has edge with probability 1/3") {
  const WeightVector w = WeightVector::from_values({1, 1});
  const int reps = 100000;
  int hits = 0;
  for (int r = 0; r < reps; ++r) hits += sample_grg(w, derive_seed(9, r)).edge_count() == 1;
  const double p = 1.0 / 3.0;
  const double se = std::sqrt(p * (1 - p) / reps);
  CHECK(std::abs(hits / static_cast<double>(reps) - p) < 3 * se);
}

TEST_CASE("erdos-renyi mean edge count") {
  const std::size_t n = 100;
  const double lambda = 1.0;
  const WeightVector w = grg::testing::constant_weights(n, n * lambda / (n - lambda));
  const int reps = 2000;
  double sum = 0, sum2 = 0;
  for (int r = 0; r < reps; ++r) {
    const double e = static_cast<double>(sample_grg(w, derive_seed(17, r)).edge_count());
    sum += e;
    sum2 += e * e;
  }
  const double mean = sum / reps;
  const double se = std::sqrt((sum2 / reps - mean * mean) / reps);
  CHECK(std::abs(mean - 4950.0 / 100.0) < 3 * se);
}

TEST_CASE("hub vertex has the largest expected degree") {
  std::vector<double> values(30, 1.0);
  values[7] = 40.0;
  const WeightVector w = WeightVector::from_values(values);
  const EdgeProbabilities probs(w);
  auto expected_degree = [&](Vertex i) {
    double d = 0;
    for (Vertex j = 0; j < 30; ++j)
      if (j != i) d += probs(i, j);
    return d;
  };
  for (Vertex i = 0; i < 30; ++i)
    if (i != 7) CHECK(expected_degree(7) > expected_degree(i));
  std::vector<double> mean_degree(30, 0.0);
  for (int r = 0; r < 500; ++r) {
    const GrgGraph g = sample_grg(w, derive_seed(3, r));
    for (Vertex i = 0; i < 30; ++i) mean_degree[i] += static_cast<double>(g.degree(i));
  }
  for (Vertex i = 0; i < 30; ++i)
    if (i != 7) CHECK(mean_degree[7] > mean_degree[i]);
}

TEST_CASE("per-pair edge frequencies match the edge probabilities") {
  const WeightVector w = WeightVector::from_values({0.5, 1, 2, 4, 8});
  const EdgeProbabilities probs(w);
  const int reps = 10000;
  std::array<std::array<int, 5>, 5> hits{};
  for (int r = 0; r < reps; ++r) {
    const GrgGraph g = sample_grg(w, derive_seed(21, r));
    for (auto [u, v] : g.edges()) ++hits[u][v];
  }
  for (Vertex i = 0; i < 5; ++i) {
    for (Vertex j = i + 1; j < 5; ++j) {
      const double p = probs(i, j);
      CHECK(p == doctest::Approx(edge_probability(w[i], w[j], w.total)));
      const double se = std::sqrt(p * (1 - p) / reps);
      CHECK(std::abs(hits[i][j] / static_cast<double>(reps) - p) < 4 * se);
    }
  }
}

TEST_CASE("sampled graphs are simple and symmetric") {
  const WeightVector w = grg::testing::random_weights(40, 0.5, 20, 8);
  for (int r = 0; r < 20; ++r) {
    const GrgGraph g = sample_grg(w, derive_seed(5, r));
    for (Vertex u = 0; u < g.n(); ++u) {
      CHECK_FALSE(g.has_edge(u, u));
      for (Vertex v : g.neighbors(u)) CHECK(g.has_edge(v, u));
    }
    CHECK(g.weights().values == w.values);
  }
}

TEST_CASE("sampling is deterministic per seed") {
  const WeightVector w = grg::testing::random_weights(60, 0.5, 20, 2);
  CHECK(sample_grg(w, 77).edges() == sample_grg(w, 77).edges());
  CHECK(sample_grg(w, 77).edges() != sample_grg(w, 78).edges());
}

TEST_CASE("chung-lu variant") {
  CHECK(chung_lu_probability(1, 1, 2) == doctest::Approx(0.5));
  CHECK(chung_lu_probability(2, 1, 4) == doctest::Approx(0.5));
  CHECK(chung_lu_probability(1, 1, 4) == doctest::Approx(0.25));
  try {
    sample_chung_lu(WeightVector::from_values({3, 1}), 1);
    FAIL("expected an error");
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()).find("vertex 1") != std::string::npos);
  }
  CHECK_NOTHROW(sample_chung_lu(WeightVector::from_values({2, 1, 1}), 1));
}

TEST_CASE("cycle probability") {
  const WeightVector ones = grg::testing::constant_weights(4, 1.0);
  const std::vector<Vertex> tri = {0, 1, 2};
  CHECK(cycle_probability(ones, tri) == doctest::Approx(0.008).epsilon(1e-14));
  CHECK(EdgeProbabilities(ones).cycle(tri) == doctest::Approx(0.008).epsilon(1e-14));

  const std::size_t n = 12;
  const double lambda = 2.0;
  const WeightVector er = grg::testing::constant_weights(n, n * lambda / (n - lambda));
  const std::vector<Vertex> quad = {0, 3, 7, 11};
  CHECK(cycle_probability(er, quad) == doctest::Approx(std::pow(lambda / n, 4)).epsilon(1e-13));

  const std::vector<Vertex> repeated = {0, 1, 0};
  CHECK_THROWS_AS(cycle_probability(ones, repeated), InvalidArgument);
}

TEST_CASE("graph construction validation") {
  const std::vector<Edge> loop = {{0, 0}};
  const std::vector<Edge> dup = {{0, 1}, {1, 0}};
  const std::vector<Edge> range = {{0, 5}};
  CHECK_THROWS_AS(GrgGraph::from_edges(3, loop), InvalidArgument);
  CHECK_THROWS_AS(GrgGraph::from_edges(3, dup), InvalidArgument);
  CHECK_THROWS_AS(GrgGraph::from_edges(3, range), InvalidArgument);
  CHECK(GrgGraph::complete(5).edge_count() == 10);
  CHECK(GrgGraph::cycle(5).edge_count() == 5);
}

TEST_CASE("edge list round trip") {
  for (std::uint32_t seed = 0; seed < 20; ++seed) {
    const GrgGraph g = grg::testing::random_graph(15, 0.3, seed);
    std::stringstream buf;
    write_edge_list(buf, g);
    CHECK(read_edge_list(buf).edges() == g.edges());
  }
  std::stringstream k4("4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
  CHECK(read_edge_list(k4).edges() == GrgGraph::complete(4).edges());
}

TEST_CASE("malformed edge lists") {
  const std::vector<std::string> bad = {
      "",                 // no header
      "3\n",              // incomplete header
      "3 2\n1 2\n",       // fewer edges than declared
      "3 1\n1 4\n",       // id out of range
      "3 1\n0 2\n",       // ids are 1-based
      "3 1\n1 1\n",       // self-loop
      "3 2\n1 2\n2 1\n",  // duplicate
      "3 1\n1 x\n",       // not an integer
      "3 1\n1 2\n2 3\n",  // more edges than declared
  };
  for (const std::string& text : bad) {
    CAPTURE(text);
    std::stringstream in(text);
    CHECK_THROWS_AS(read_edge_list(in), ParseError);
  }
  CHECK_THROWS_AS(read_edge_list_file("/nonexistent/graph.edges"), ParseError);
}
