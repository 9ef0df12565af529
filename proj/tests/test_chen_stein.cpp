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

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>
#include <vector>

#include "grg/chen_stein.hpp"
#include "grg/error.hpp"
#include "grg/grg_model.hpp"
#include "test_util.hpp"

using namespace grg;
using grg::testing::constant_weights;
using grg::testing::random_weights;

namespace {

using EdgeSet = std::set<std::pair<Vertex, Vertex>>;

EdgeSet edge_set(const std::vector<Vertex>& c) {
  EdgeSet out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Vertex a = c[i], b = c[(i + 1) % c.size()];
    out.emplace(std::min(a, b), std::max(a, b));
  }
  return out;
}

double edge_set_probability(const WeightVector& w, const EdgeSet& edges) {
  double p = 1.0;
  for (auto [a, b] : edges) p *= edge_probability(w[a], w[b], w.total);
  return p;
}

std::vector<std::vector<Vertex>> all_candidates(std::size_t n, int k) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& c : collect_cycles(GrgGraph::from_edges(n, {}), k, EnumerationMode::kCandidates))
    out.push_back(c.vertices);
  return out;
}

// Quadratic scan over all pairs of I(k), using edge sets built from scratch.
ChenSteinTerms brute_force_terms(const WeightVector& w, int k) {
  const auto cycles = all_candidates(w.size(), k);
  std::vector<EdgeSet> edges;
  std::vector<double> p;
  for (const auto& c : cycles) {
    edges.push_back(edge_set(c));
    p.push_back(edge_set_probability(w, edges.back()));
  }
  ChenSteinTerms t;
  for (std::size_t a = 0; a < cycles.size(); ++a) {
    t.lambda_capital += p[a];
    for (std::size_t b = 0; b < cycles.size(); ++b) {
      EdgeSet shared;
      std::set_intersection(edges[a].begin(), edges[a].end(), edges[b].begin(), edges[b].end(),
                            std::inserter(shared, shared.end()));
      if (shared.empty()) continue;
      t.b1 += p[a] * p[b];
      if (a == b) continue;
      EdgeSet both = edges[a];
      both.insert(edges[b].begin(), edges[b].end());
      t.b2 += edge_set_probability(w, both);
    }
  }
  return t;
}

// Sum over ordered k-tuples of distinct vertices, divided by 2k.
double tuple_lambda(const WeightVector& w, int k) {
  const std::size_t n = w.size();
  std::vector<Vertex> tuple(k);
  std::vector<bool> used(n, false);
  double sum = 0;
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      double p = 1.0;
      for (int i = 0; i < k; ++i) {
        const Vertex a = tuple[i], b = tuple[(i + 1) % k];
        p *= edge_probability(w[a], w[b], w.total);
      }
      sum += p;
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      tuple[depth] = v;
      self(self, depth + 1);
      used[v] = false;
    }
  };
  rec(rec, 0);
  return sum / (2.0 * k);
}

void check_terms_close(const ChenSteinTerms& a, const ChenSteinTerms& b) {
  CHECK(a.b1 == doctest::Approx(b.b1).epsilon(1e-12));
  CHECK(a.b2 == doctest::Approx(b.b2).epsilon(1e-12));
  CHECK(a.lambda_capital == doctest::Approx(b.lambda_capital).epsilon(1e-12));
}

}  // namespace

TEST_CASE("neighborhood examples") {
  const CanonicalCycle t012{{0, 1, 2}};
  const auto all4 = neighborhood(t012, 4);
  CHECK(all4 == collect_cycles(GrgGraph::from_edges(4, {}), 3, EnumerationMode::kCandidates));
  const auto six = neighborhood(t012, 6);
  CHECK(std::find(six.begin(), six.end(), CanonicalCycle{{3, 4, 5}}) == six.end());
  const auto five = neighborhood(t012, 5);
  CHECK(std::find(five.begin(), five.end(), CanonicalCycle{{0, 3, 4}}) == five.end());
  CHECK(std::find(five.begin(), five.end(), t012) != five.end());
  CHECK_THROWS_AS(neighborhood(CanonicalCycle{{0, 2, 1}}, 5), InvalidArgument);
  CHECK_THROWS_AS(neighborhood(t012, 200, 1000), CapExceeded);
}

TEST_CASE("neighborhood equals the edge-sharing filter and is symmetric") {
  for (std::size_t n : {5u, 6u, 7u}) {
    for (int k : {3, 4, 5}) {
      if (static_cast<std::size_t>(k) > n) continue;
      const auto cycles = all_candidates(n, k);
      std::set<std::pair<std::vector<Vertex>, std::vector<Vertex>>> related;
      for (const auto& a : cycles) {
        std::vector<std::vector<Vertex>> expected;
        for (const auto& b : cycles) {
          EdgeSet shared;
          const EdgeSet ea = edge_set(a), eb = edge_set(b);
          std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                                std::inserter(shared, shared.end()));
          if (!shared.empty()) expected.push_back(b);
          CHECK(shares_edge(a, b) == !shared.empty());
        }
        std::vector<std::vector<Vertex>> got;
        for (const auto& c : neighborhood(CanonicalCycle{a}, n)) got.push_back(c.vertices);
        CHECK(got == expected);
        for (const auto& b : got) related.emplace(a, b);
      }
      for (const auto& [a, b] : related) CHECK(related.count({b, a}) == 1);
    }
  }
}

TEST_CASE("pair probability") {
  const WeightVector ones = constant_weights(4, 1.0);
  const std::vector<Vertex> a = {0, 1, 2};
  const std::vector<Vertex> b = {0, 1, 3};
  CHECK(pair_probability(ones, a, a) == doctest::Approx(cycle_probability(ones, a)));
  CHECK(pair_probability(ones, a, b) == doctest::Approx(3.2e-4).epsilon(1e-12));
  const WeightVector w = random_weights(6, 0.5, 5, 4);
  const std::vector<Vertex> c = {0, 1, 2};
  const std::vector<Vertex> d = {3, 4, 5};
  CHECK(pair_probability(w, c, d) ==
        doctest::Approx(cycle_probability(w, c) * cycle_probability(w, d)).epsilon(1e-14));
}

TEST_CASE("pair probability bounds") {
  for (std::uint32_t seed = 0; seed < 5; ++seed) {
    const WeightVector w = random_weights(7, 0.2, 6, seed);
    const auto cycles = all_candidates(7, 4);
    for (std::size_t i = 0; i < cycles.size(); i += 7) {
      for (std::size_t j = 0; j < cycles.size(); j += 3) {
        const double pa = cycle_probability(w, cycles[i]);
        const double pb = cycle_probability(w, cycles[j]);
        const double pab = pair_probability(w, cycles[i], cycles[j]);
        CHECK(pab <= std::min(pa, pb) * (1 + 1e-12));
        CHECK(pab >= pa * pb * (1 - 1e-12));
      }
    }
  }
}

TEST_CASE("exact terms on four unit weights") {
  const ChenSteinTerms t = b1_b2_exact(constant_weights(4, 1.0), 3);
  CHECK(t.b1 == doctest::Approx(1.024e-3).epsilon(1e-12));
  CHECK(t.b2 == doctest::Approx(3.84e-3).epsilon(1e-12));
  CHECK(t.lambda_capital == doctest::Approx(0.032).epsilon(1e-12));
  CHECK(lambda_capital(constant_weights(4, 1.0), 3) == doctest::Approx(0.032).epsilon(1e-12));
  CHECK(lambda_plugin(constant_weights(4, 1.0), 3) == doctest::Approx(1.0 / 6.0));
}

TEST_CASE("exact terms agree with the quadratic oracle") {
  for (std::uint32_t seed = 0; seed < 6; ++seed) {
    for (std::size_t n : {5u, 6u, 7u}) {
      const WeightVector w = random_weights(n, 0.3, 8, seed * 31 + n);
      for (int k = 3; k <= std::min<int>(5, n); ++k) {
        CAPTURE(n);
        CAPTURE(k);
        check_terms_close(b1_b2_exact(w, k), brute_force_terms(w, k));
      }
    }
  }
}

TEST_CASE("triangle closed form agrees with enumeration") {
  for (std::uint32_t seed = 0; seed < 10; ++seed) {
    const WeightVector w = random_weights(3 + seed, 0.3, 10, seed + 77);
    check_terms_close(b1_b2_triangles(w), b1_b2_exact(w, 3));
  }
}

TEST_CASE("parallel terms match the serial reference") {
  const int saved = omp_get_max_threads();
  const WeightVector w = random_weights(11, 0.3, 10, 99);
  for (int threads : {1, 2, 3}) {
    omp_set_num_threads(threads);
    for (int k = 3; k <= 5; ++k) {
      const ChenSteinTerms a = b1_b2_exact(w, k);
      const ChenSteinTerms b = reference::b1_b2_exact(w, k);
      CHECK(a.b1 == b.b1);
      CHECK(a.b2 == b.b2);
      CHECK(a.lambda_capital == b.lambda_capital);
    }
    const ChenSteinTerms t = b1_b2_triangles(w);
    const ChenSteinTerms u = reference::b1_b2_triangles(w);
    CHECK(t.b1 == u.b1);
    CHECK(t.b2 == u.b2);
  }
  omp_set_num_threads(saved);
}

TEST_CASE("lambda capital against ordered tuples") {
  for (std::size_t n = 3; n <= 8; ++n) {
    const WeightVector w = random_weights(n, 0.3, 6, 1000 + n);
    for (int k = 3; k <= static_cast<int>(std::min<std::size_t>(n, 6)); ++k)
      CHECK(lambda_capital(w, k) == doctest::Approx(tuple_lambda(w, k)).epsilon(1e-12));
  }
}

TEST_CASE("lambda capital in the erdos-renyi case") {
  const std::size_t n = 20;
  const double lambda = 2.0;
  const WeightVector w = constant_weights(n, n * lambda / (n - lambda));
  for (int k = 3; k <= 5; ++k) {
    const double expected = static_cast<double>(candidate_count(n, k)) * std::pow(lambda / n, k);
    CHECK(lambda_capital(w, k) == doctest::Approx(expected).epsilon(1e-12));
  }
  CHECK(lambda_capital(constant_weights(3, 1.0), 4) == 0.0);
}

TEST_CASE("plug-in lambda dominates the exact value") {
  for (double s : {0.5, 2.0, 7.0})
    CHECK(lambda_plugin(constant_weights(9, s), 4) == doctest::Approx(std::pow(s, 4) / 8.0));
  for (std::uint32_t seed = 0; seed < 100; ++seed) {
    const WeightVector w = random_weights(4 + seed % 9, 0.1, 20, seed);
    CHECK(lambda_plugin(w, 3) >= lambda_capital(w, 3));
  }
}

TEST_CASE("constant weight triangle closed form") {
  // With one edge probability q: b1 = |I|(1 + 3(n-3)) q^6, b2 = |I| 3(n-3) q^5.
  for (std::size_t n : {5u, 10u, 20u}) {
    const WeightVector w = constant_weights(n, 1.0);
    const double q = edge_probability(1, 1, static_cast<double>(n));
    const double count = static_cast<double>(candidate_count(n, 3));
    const double ring = 3.0 * (static_cast<double>(n) - 3.0);
    const ChenSteinTerms t = b1_b2_triangles(w);
    CHECK(t.b1 == doctest::Approx(count * (1 + ring) * std::pow(q, 6)).epsilon(1e-12));
    CHECK(t.b2 == doctest::Approx(count * ring * std::pow(q, 5)).epsilon(1e-12));
  }
}

TEST_CASE("degenerate and shrinking instances") {
  const ChenSteinTerms single = b1_b2_exact(constant_weights(3, 2.0), 3);
  CHECK(single.b2 == 0.0);
  CHECK(single.b1 == doctest::Approx(single.lambda_capital * single.lambda_capital));

  const WeightVector base = random_weights(6, 0.5, 10, 3);
  ChenSteinTerms previous = b1_b2_exact(base, 3);
  for (double scale = 0.8; scale > 0.01; scale *= 0.5) {
    std::vector<double> values = base.values;
    for (double& v : values) v *= scale;
    const ChenSteinTerms now = b1_b2_exact(WeightVector::from_values(values), 3);
    CHECK(now.b1 < previous.b1);
    CHECK(now.b2 < previous.b2);
    previous = now;
  }
}

TEST_CASE("cap handling") {
  const WeightVector w = constant_weights(60, 1.0);
  CHECK_THROWS_AS(b1_b2_exact(w, 4, 1000), CapExceeded);
  CHECK_THROWS_AS(lambda_capital(w, 4, 1000), CapExceeded);
  CHECK_THROWS_AS(bound_report(WeightSpec::constant(1.0), 60, 4, 1, 1, 1000), CapExceeded);
  CHECK_NOTHROW(bound_report(WeightSpec::constant(1.0), 60, 3, 1, 1, 1000));
}

TEST_CASE("bound report") {
  const BoundReport r = bound_report(WeightSpec::constant(1.0), 4, 3, 2, 7);
  CHECK(r.b1 == doctest::Approx(1.024e-3).epsilon(1e-12));
  CHECK(r.b2 == doctest::Approx(3.84e-3).epsilon(1e-12));
  CHECK(r.lambda_target == doctest::Approx(1.0 / 6.0));
  CHECK(r.gap == doctest::Approx(1.0 / 6.0 - 0.032));
  CHECK(r.rhs() == doctest::Approx(r.b1 + r.b2 + r.gap));
  const BoundReport plug = bound_report(WeightSpec::constant(1.0), 4, 3, 1, 7,
                                        kDefaultCandidateCap, LambdaMode::kPlugin);
  CHECK(plug.lambda_capital == doctest::Approx(1.0 / 6.0));
  CHECK(plug.gap == doctest::Approx(0.0));
  CHECK(lambda_mode_from_string(to_string(LambdaMode::kPlugin)) == LambdaMode::kPlugin);
  CHECK_THROWS_AS(lambda_mode_from_string("fuzzy"), InvalidArgument);
}

TEST_CASE("bound report is independent of thread count") {
  const int saved = omp_get_max_threads();
  const auto spec = WeightSpec::pareto_shifted(9.5, 10, 1);
  omp_set_num_threads(1);
  const BoundReport a = bound_report(spec, 16, 4, 3, 5);
  omp_set_num_threads(3);
  const BoundReport b = bound_report(spec, 16, 4, 3, 5);
  omp_set_num_threads(saved);
  CHECK(a.b1 == b.b1);
  CHECK(a.b2 == b.b2);
  CHECK(a.lambda_capital == b.lambda_capital);
}

TEST_CASE("census mean given the weights equals lambda capital") {
  const WeightVector w = sample_weights(WeightSpec::pareto_shifted(9.5, 10, 1), 300, 5);
  const ChenSteinTerms t = b1_b2_triangles(w);
  const int reps = 3000;
  double sum = 0, sum2 = 0;
  for (int r = 0; r < reps; ++r) {
    const double c = static_cast<double>(count_triangles(sample_grg(w, derive_seed(77, r))).count);
    sum += c;
    sum2 += c * c;
  }
  const double mean = sum / reps;
  const double var = (sum2 - reps * mean * mean) / (reps - 1);
  CHECK(std::abs(mean - t.lambda_capital) <= 4 * std::sqrt(var / reps));
  // Var(S | W) = Lambda - b1 + b2 exactly.
  const double predicted = 1 + (t.b2 - t.b1) / t.lambda_capital;
  CHECK(var / mean == doctest::Approx(predicted).epsilon(0.15));
}
