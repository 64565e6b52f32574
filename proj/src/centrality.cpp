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

#include "lkl/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lkl/error.hpp"

namespace lkl {

double con_pair(const MultiDigraph& g, NodeId u, NodeId v, ConMode mode) {
  if (u == v) {
    throw Error(ErrorCode::kInvalidArgument, "con_pair requires distinct nodes");
  }
  // Sorted adjacency: merge the two out-lists.
  const auto a = g.out_edges(u);
  const auto b = g.out_edges(v);
  double total = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].node < b[j].node) {
      ++i;
    } else if (b[j].node < a[i].node) {
      ++j;
    } else {
      total += mode == ConMode::kBinarized ? 1.0 : std::min(a[i].weight, b[j].weight);
      ++i;
      ++j;
    }
  }
  return total;
}

ConScoreVector con_scores(const MultiDigraph& g, ConMode mode) {
  const std::size_t n = g.node_count();
  ConScoreVector out{std::vector<double>(n, 0.0), mode};

  if (mode == ConMode::kBinarized) {
    // Counts stay integral until the end.
    std::vector<unsigned long long> counts(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      const auto in = g.in_edges(NodeId{x});
      if (in.size() < 2) continue;
      for (const Edge& e : in) counts[e.node] += in.size() - 1;
    }
    for (std::size_t u = 0; u < n; ++u) out.scores[u] = static_cast<double>(counts[u]);
    return out;
  }

  // For an in-list sorted by weight a_0 <= ... <= a_{k-1}, the element at
  // position p gets sum_{q<p} a_q + a_p * (k-1-p).
  std::vector<Edge> sorted;
  for (std::size_t x = 0; x < n; ++x) {
    const auto in = g.in_edges(NodeId{x});
    const std::size_t k = in.size();
    if (k < 2) continue;
    sorted.assign(in.begin(), in.end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Edge& l, const Edge& r) { return l.weight < r.weight; });
    double prefix = 0.0;
    for (std::size_t p = 0; p < k; ++p) {
      out.scores[sorted[p].node] += prefix + sorted[p].weight * static_cast<double>(k - 1 - p);
      prefix += sorted[p].weight;
    }
  }
  return out;
}

namespace {

enum class Walk { kForward, kReversed };

PageRankVector PowerIterate(const MultiDigraph& g, const PageRankOptions& opts, Walk walk) {
  const std::size_t n = g.node_count();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "PageRank of an empty graph");
  if (!(opts.damping > 0.0 && opts.damping < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "damping must lie in (0, 1)");
  }
  if (!(opts.tol > 0.0) || opts.max_iter < 1) {
    throw Error(ErrorCode::kInvalidArgument, "tol must be > 0 and max_iter >= 1");
  }

  auto steps = [&](std::size_t x) {
    return walk == Walk::kForward ? g.out_edges(NodeId{x}) : g.in_edges(NodeId{x});
  };

  // Per-node normalizer of the walk's transition probabilities.
  std::vector<double> out_mass(n, 0.0);
  for (std::size_t x = 0; x < n; ++x) {
    const auto s = steps(x);
    if (opts.weighted) {
      for (const Edge& e : s) out_mass[x] += e.weight;
    } else {
      out_mass[x] = static_cast<double>(s.size());
    }
  }

  const double d = opts.damping;
  const double inv_n = 1.0 / static_cast<double>(n);
  std::vector<double> rank(n, inv_n);
  std::vector<double> next(n);

  PageRankVector result;
  result.damping = d;
  double residual = 0.0;
  for (int iter = 1; iter <= opts.max_iter; ++iter) {
    double dangling = 0.0;
    for (std::size_t x = 0; x < n; ++x)
      if (out_mass[x] == 0.0) dangling += rank[x];

    std::fill(next.begin(), next.end(), (1.0 - d) * inv_n + d * dangling * inv_n);
    for (std::size_t x = 0; x < n; ++x) {
      if (out_mass[x] == 0.0) continue;
      const double share = d * rank[x] / out_mass[x];
      for (const Edge& e : steps(x)) {
        next[e.node] += opts.weighted ? share * e.weight : share;
      }
    }

    residual = 0.0;
    for (std::size_t x = 0; x < n; ++x) residual += std::abs(next[x] - rank[x]);
    rank.swap(next);
    if (residual < opts.tol) {
      const double sum = std::accumulate(rank.begin(), rank.end(), 0.0);
      for (double& r : rank) r /= sum;
      result.values = std::move(rank);
      result.iterations = iter;
      result.residual = residual;
      return result;
    }
  }
  throw ConvergenceError(opts.max_iter, residual);
}

}  // namespace

PageRankVector pagerank(const MultiDigraph& g, const PageRankOptions& opts) {
  return PowerIterate(g, opts, Walk::kForward);
}

PageRankVector pagerank_reversed(const MultiDigraph& g, const PageRankOptions& opts) {
  return PowerIterate(g, opts, Walk::kReversed);
}

}  // namespace lkl
