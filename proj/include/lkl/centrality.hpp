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

#pragma once

#include <vector>

#include "lkl/graph.hpp"

namespace lkl {

/// Binarized counts shared out-neighbors; weighted sums
/// min(w(u,x), w(v,x)) over shared out-neighbors x.
enum class ConMode { kBinarized, kWeighted };

struct ConScoreVector {
  std::vector<double> scores;
  ConMode mode = ConMode::kBinarized;
};

/// Common out-neighbor score of two distinct nodes. Throws
/// kInvalidArgument when u == v.
double con_pair(const MultiDigraph& g, NodeId u, NodeId v, ConMode mode);

/// CON(u) = sum over v != u of con_pair(u, v), for every node.
///
/// Computed target-by-target: every shared target x contributes to each
/// ordered pair of its distinct in-neighbors, so the cost is
/// sum_x indeg(x)^2 rather than n^2 * deg.
ConScoreVector con_scores(const MultiDigraph& g, ConMode mode);

struct PageRankOptions {
  double damping = 0.85;
  double tol = 1e-10;  // L1 change between sweeps
  int max_iter = 200;
  bool weighted = false;  // weight-proportional transitions

  friend bool operator==(const PageRankOptions&, const PageRankOptions&) = default;
};

struct PageRankVector {
  std::vector<double> values;
  double damping = 0.85;
  int iterations = 0;
  double residual = 0.0;
};

/// Standard PageRank of `g` by power iteration. Walkers follow out-edges,
/// dangling mass is spread uniformly, teleportation is uniform.
/// Throws ConvergenceError after max_iter sweeps without reaching tol and
/// kInvalidArgument for an empty graph or damping outside (0, 1).
PageRankVector pagerank(const MultiDigraph& g, const PageRankOptions& opts = {});

/// PageRank on the reversed-edge network, computed by walking in-edges of
/// `g` directly. Equal to pagerank(g.reversed(), opts).
PageRankVector pagerank_reversed(const MultiDigraph& g, const PageRankOptions& opts = {});

}  // namespace lkl
