// Copyright 2026 The lkl Authors
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

#include "doctest.h"

#include <cmath>
#include <numeric>
#include <random>

#include "lkl/centrality.hpp"
#include "lkl/error.hpp"
#include "oracles.hpp"

using lkl::ConMode;
using lkl::MultiDigraph;
using lkl::NodeId;
using lkl::PageRankOptions;

namespace {

MultiDigraph Edges(std::initializer_list<std::tuple<const char*, const char*, double>> edges) {
  MultiDigraph g;
  for (const auto& [u, v, w] : edges) g.add_edge(u, v, w);
  return g;
}

double Sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

}  // namespace

TEST_CASE("con_pair examples") {
  const MultiDigraph g = Edges({{"a", "c", 1}, {"b", "c", 1}});
  CHECK(lkl::con_pair(g, g.node("a"), g.node("b"), ConMode::kBinarized) == 1.0);

  // min(3, 2) on the single shared target, checked by hand.
  const MultiDigraph w = Edges({{"a", "c", 3}, {"b", "c", 2}});
  CHECK(lkl::con_pair(w, w.node("a"), w.node("b"), ConMode::kWeighted) == 2.0);
  CHECK(lkl::con_pair(w, w.node("a"), w.node("b"), ConMode::kBinarized) == 1.0);

  const MultiDigraph d = Edges({{"a", "x", 1}, {"b", "y", 1}});
  CHECK(lkl::con_pair(d, d.node("a"), d.node("b"), ConMode::kBinarized) == 0.0);

  CHECK_THROWS_AS(lkl::con_pair(g, g.node("a"), g.node("a"), ConMode::kBinarized), lkl::Error);
}

TEST_CASE("con_scores examples") {
  // Every attacker of c shares c with the two others.
  const MultiDigraph star = Edges({{"a", "c", 1}, {"b", "c", 1}, {"d", "c", 1}});
  const auto con = lkl::con_scores(star, ConMode::kBinarized).scores;
  CHECK(con[star.node("a").index] == 2.0);
  CHECK(con[star.node("b").index] == 2.0);
  CHECK(con[star.node("d").index] == 2.0);
  CHECK(con[star.node("c").index] == 0.0);
  CHECK(con == lkl::testing::NaiveCon(star, ConMode::kBinarized));

  const MultiDigraph single = Edges({{"a", "b", 1}});
  CHECK(lkl::con_scores(single, ConMode::kBinarized).scores == std::vector<double>{0, 0});

  MultiDigraph empty;
  for (const char* l : {"p", "q", "r"}) empty.add_node(l);
  CHECK(lkl::con_scores(empty, ConMode::kBinarized).scores == std::vector<double>{0, 0, 0});
  CHECK(lkl::con_scores(empty, ConMode::kWeighted).scores == std::vector<double>{0, 0, 0});
}

TEST_CASE("property: con_scores equals the naive oracle, symmetry, monotonicity") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const MultiDigraph g = lkl::testing::RandomGraph(rng, n, 0.45, 5, trial % 2 == 1);

    const auto bin = lkl::con_scores(g, ConMode::kBinarized).scores;
    CHECK(bin == lkl::testing::NaiveCon(g, ConMode::kBinarized));
    for (double s : bin) CHECK(s == std::floor(s));

    const auto weighted = lkl::con_scores(g, ConMode::kWeighted).scores;
    const auto oracle = lkl::testing::NaiveCon(g, ConMode::kWeighted);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(weighted[i] - oracle[i]) <= 1e-12);

    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        for (ConMode mode : {ConMode::kBinarized, ConMode::kWeighted}) {
          CHECK(lkl::con_pair(g, NodeId{u}, NodeId{v}, mode) ==
                lkl::con_pair(g, NodeId{v}, NodeId{u}, mode));
        }
      }
    }

    if (n >= 2) {
      MultiDigraph more = g;
      const std::size_t u = rng() % n;
      std::size_t w = rng() % n;
      if (w == u) w = (w + 1) % n;
      more.add_edge(NodeId{u}, NodeId{w}, 1.0);
      CHECK(lkl::con_scores(more, ConMode::kBinarized).scores[u] >= bin[u]);
      CHECK(lkl::con_scores(more, ConMode::kWeighted).scores[u] >= weighted[u]);
    }
  }
}

TEST_CASE("pagerank_reversed on a directed cycle is uniform") {
  const MultiDigraph g = Edges({{"a", "b", 1}, {"b", "c", 1}, {"c", "a", 1}});
  const auto pr = lkl::pagerank_reversed(g);
  for (double v : pr.values) CHECK(v == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("pagerank_reversed two-node example matches the hand solution") {
  // Reversed graph b -> a, a dangling. With x = PR(a):
  //   1 - x = 0.075 + 0.425 x   =>   x = 0.925 / 1.425.
  const MultiDigraph g = Edges({{"a", "b", 1}});
  const auto pr = lkl::pagerank_reversed(g);
  CHECK(pr.values[0] == doctest::Approx(0.925 / 1.425).epsilon(1e-10));
  CHECK(pr.values[1] == doctest::Approx(0.5 / 1.425).epsilon(1e-10));
  CHECK(std::abs(pr.values[0] - 0.649122807017544) < 1e-9);
  const auto dense = lkl::testing::DensePageRank(g, 0.85, false, true);
  CHECK(std::abs(pr.values[0] - dense[0]) < 1e-9);
}

TEST_CASE("hub with many out-edges gains rank after reversal") {
  // h attacks x and y; z attacks nobody. Both are attacked once.
  // Dense solve gives h = 37/80, z = 3/80, x = 0.430625, y = 0.069375.
  const MultiDigraph g = Edges({{"h", "x", 1}, {"h", "y", 1}, {"x", "h", 1}, {"y", "z", 1}});
  REQUIRE(g.in_degree(g.node("h")) == g.in_degree(g.node("z")));
  const auto pr = lkl::pagerank_reversed(g).values;
  CHECK(pr[g.node("h").index] == doctest::Approx(37.0 / 80.0).epsilon(1e-9));
  CHECK(pr[g.node("z").index] == doctest::Approx(3.0 / 80.0).epsilon(1e-9));
  CHECK(pr[g.node("x").index] == doctest::Approx(0.430625).epsilon(1e-9));
  CHECK(pr[g.node("y").index] == doctest::Approx(0.069375).epsilon(1e-9));
  CHECK(pr[g.node("h").index] > pr[g.node("z").index]);
}

TEST_CASE("property: PageRank sums to one, is positive, matches the dense solve") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const bool weighted = trial % 2 == 1;
    const MultiDigraph g = lkl::testing::RandomGraph(rng, n, 0.3, 6, weighted);
    PageRankOptions opts;
    opts.weighted = weighted;
    const auto pr = lkl::pagerank_reversed(g, opts);
    CHECK(std::abs(Sum(pr.values) - 1.0) < 1e-9);
    for (double v : pr.values) CHECK(v > 0.0);
    CHECK(pr.residual < opts.tol);

    const auto dense = lkl::testing::DensePageRank(g, 0.85, weighted, true);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(pr.values[i] - dense[i]) < 1e-8);

    // Two independent routes to the reversed-edge PageRank.
    const auto via_reverse = lkl::pagerank(g.reversed(), opts);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::abs(pr.values[i] - via_reverse.values[i]) < 1e-12);
    }
    // Determinism.
    CHECK(lkl::pagerank_reversed(g, opts).values == pr.values);
  }
}

TEST_CASE("property: weight scaling leaves PageRank and weighted CON ranking unchanged") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const MultiDigraph g = lkl::testing::RandomGraph(rng, n, 0.4, 1, true);
    const double c = 0.5 + static_cast<double>(rng() % 1000) / 100.0;
    MultiDigraph scaled;
    for (auto label : g.labels()) scaled.add_node(label);
    for (std::size_t u = 0; u < n; ++u) {
      for (const lkl::Edge& e : g.out_edges(NodeId{u})) {
        scaled.add_edge(NodeId{u}, NodeId{e.node}, c * e.weight);
      }
    }
    PageRankOptions opts;
    opts.weighted = true;
    const auto a = lkl::pagerank_reversed(g, opts).values;
    const auto b = lkl::pagerank_reversed(scaled, opts).values;
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-12);

    const auto ca = lkl::con_scores(g, ConMode::kWeighted).scores;
    const auto cb = lkl::con_scores(scaled, ConMode::kWeighted).scores;
    for (std::size_t i = 0; i < n; ++i) CHECK(cb[i] == doctest::Approx(c * ca[i]).epsilon(1e-12));
  }
}

TEST_CASE("PageRank error paths") {
  CHECK_THROWS_AS(lkl::pagerank_reversed(MultiDigraph{}), lkl::Error);
  const MultiDigraph g = Edges({{"a", "b", 1}, {"b", "c", 1}});
  PageRankOptions bad;
  bad.damping = 1.0;
  CHECK_THROWS_AS(lkl::pagerank_reversed(g, bad), lkl::Error);

  PageRankOptions tight;
  tight.max_iter = 2;
  tight.tol = 1e-15;
  try {
    (void)lkl::pagerank_reversed(g, tight);
    FAIL("expected ConvergenceError");
  } catch (const lkl::ConvergenceError& e) {
    CHECK(e.code() == lkl::ErrorCode::kNoConvergence);
    CHECK(e.iterations() == 2);
    CHECK(e.residual() > 0.0);
  }
}
