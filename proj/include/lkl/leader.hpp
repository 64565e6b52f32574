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
#include <span>
#include <string>
#include <vector>

#include "lkl/centrality.hpp"
#include "lkl/graph.hpp"

namespace lkl {

struct Normalized {
  std::vector<double> values;
  bool degenerate = false;  // max == min; every value mapped to 0
};

/// Min-max rescaling onto [0, 1]. Throws kInvalidArgument on empty input.
Normalized normalize(std::span<const double> values);

/// Which network the PageRank walk runs on. Low-key leader analysis uses
/// the reversed-edge network; kForward (standard PageRank on the network
/// as given) exists for reproduction sweeps.
enum class PageRankOrientation { kReversed, kForward };

struct NodeRecord {
  NodeId node;
  std::string label;
  double con = 0.0;
  double pr = 0.0;
  double con_norm = 0.0;
  double pr_norm = 0.0;
  double epsilon = 0.0;  // con_norm - pr_norm
};

/// Per-node scores sorted by epsilon descending, ties by node index.
struct CentralityReport {
  std::vector<NodeRecord> records;
  ConMode con_mode = ConMode::kBinarized;
  PageRankOptions pagerank;
  PageRankOrientation orientation = PageRankOrientation::kReversed;
  int pagerank_iterations = 0;
  double pagerank_residual = 0.0;
  bool con_degenerate = false;
  bool pr_degenerate = false;
};

/// Normalizes both vectors and takes their difference. Labels are left
/// empty; analyze() fills them in. Throws kInvalidArgument when the vectors
/// differ in length or are empty.
CentralityReport epsilon_scores(const ConScoreVector& con, const PageRankVector& pr);

struct AnalysisOptions {
  ConMode con_mode = ConMode::kBinarized;
  PageRankOptions pagerank;
  PageRankOrientation orientation = PageRankOrientation::kReversed;
};

/// CON scores, PageRank (reversed-edge by default), and epsilon for every
/// node of `g`.
CentralityReport analyze(const MultiDigraph& g, const AnalysisOptions& opts = {});

struct LklVerdict {
  std::vector<NodeId> leaders;  // argmax-epsilon set, by node index
  double epsilon_max = 0.0;
  double threshold = 0.5;
  bool exists = false;  // epsilon_max > threshold
};

/// Epsilon values closer than this to the maximum count as tied; mathematically
/// equal strengths can differ by a few ulps after normalization.
inline constexpr double kEpsilonTieTolerance = 1e-12;

/// A low-key leader is a node of maximum epsilon, provided that maximum is
/// strictly above `threshold`. Every tied node is returned.
LklVerdict detect_lkl(const CentralityReport& report, double threshold = 0.5);

enum class Movement { kNeutral, kConUp, kPrUp };

struct SlopeEntry {
  NodeId node;
  std::string label;
  int con_rank = 0;  // 1-based
  int pr_rank = 0;
  int movement = 0;  // pr_rank - con_rank
  Movement cls = Movement::kNeutral;
};

struct SlopeGraphSpec {
  std::vector<NodeId> con_ranking;  // best first
  std::vector<NodeId> pr_ranking;
  std::vector<SlopeEntry> entries;  // indexed by node
  int movement_threshold = 5;
};

/// Rankings by raw CON and raw reversed PageRank, descending with ties by
/// node index. A node is kConUp when its CON rank is at least
/// `movement_threshold` places better than its PageRank rank, kPrUp in the
/// mirror case.
SlopeGraphSpec slope_graph(const CentralityReport& report, int movement_threshold);

struct BatchSummary {
  double threshold = 0.5;
  std::size_t count_with_lkl = 0;
  std::size_t total = 0;
  double fraction = 0.0;
  std::vector<LklVerdict> verdicts;  // input order
};

BatchSummary batch_lkl(std::span<const CentralityReport> reports, double threshold);

}  // namespace lkl
