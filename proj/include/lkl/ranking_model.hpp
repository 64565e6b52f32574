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

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "lkl/graph.hpp"
#include "lkl/leader.hpp"

namespace lkl {

struct RankingModelParams {
  std::size_t n = 200;
  double alpha = 0.5;  // attachment strength, in (0, 1)
  std::uint64_t seed = 0;

  /// Throws kInvalidArgument unless n >= 2 and 0 < alpha < 1.
  void validate() const;
};

/// Output of the directed ranking model.
///
/// Nodes are stored in rank order: node index i has rank i + 1 and label
/// "i+1". `rank_of[k]` is the rank drawn for the k-th vertex before the
/// reordering, so it is a uniformly random permutation of 1..n.
struct GeneratedGraph {
  RankingModelParams params;
  MultiDigraph graph;
  std::vector<std::size_t> rank_of;
  NodeId copy_node;
  NodeId template_node;                                 // max out-degree node before the copy step
  std::vector<std::pair<NodeId, NodeId>> copied_edges;  // added by the copy step
};

/// Samples a digraph on ranks 1..n where (i, j), i != j, is present
/// independently with probability j^-alpha, then picks a uniform copy node
/// and gives it every out-neighbor of the maximum out-degree node (lowest
/// index on ties). Edges already present are left alone; a copy onto the
/// copy node itself is skipped. All edges have weight 1.
///
/// RNG draw order is part of the reproducibility contract: the label
/// permutation, then one uniform per ordered pair in row-major order, then
/// the copy node.
GeneratedGraph generate(const RankingModelParams& params);

/// In-degrees of `generated.graph` before the copy step.
std::vector<std::size_t> pre_copy_in_degrees(const GeneratedGraph& generated);

struct InDegreeDistribution {
  std::map<std::size_t, std::size_t> histogram;  // in-degree -> node count
  std::size_t max_degree = 0;
  double mean = 0.0;
  double stddev = 0.0;  // population standard deviation
  double median = 0.0;
  double tail_fraction = 0.0;  // share of nodes with degree > mean + 2 stddev
};

InDegreeDistribution in_degree_distribution(const MultiDigraph& g);

struct CopyNodeAnalysis {
  double copy_con = 0.0;
  double template_con = 0.0;
  double epsilon_of_copy = 0.0;
  bool copy_is_lkl = false;  // in the argmax set and above the threshold
};

/// Runs binarized CON and default reversed PageRank on the generated graph.
CopyNodeAnalysis copy_node_analysis(const GeneratedGraph& generated, double threshold = 0.5);

}  // namespace lkl
