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

#include "lkl/leader.hpp"

#include <algorithm>
#include <numeric>

#include "lkl/error.hpp"

namespace lkl {

Normalized normalize(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::kInvalidArgument, "normalize of empty list");
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  Normalized out;
  out.values.resize(values.size(), 0.0);
  if (*hi == *lo) {
    out.degenerate = true;
    return out;
  }
  const double span = *hi - *lo;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out.values[i] = (values[i] - *lo) / span;
  }
  return out;
}

CentralityReport epsilon_scores(const ConScoreVector& con, const PageRankVector& pr) {
  if (con.scores.size() != pr.values.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "CON and PageRank vectors cover different node sets (" +
                    std::to_string(con.scores.size()) + " vs " + std::to_string(pr.values.size()) +
                    ")");
  }
  const Normalized cn = normalize(con.scores);
  const Normalized pn = normalize(pr.values);

  CentralityReport report;
  report.con_mode = con.mode;
  report.pagerank.damping = pr.damping;
  report.pagerank_iterations = pr.iterations;
  report.pagerank_residual = pr.residual;
  report.con_degenerate = cn.degenerate;
  report.pr_degenerate = pn.degenerate;
  report.records.reserve(con.scores.size());
  for (std::size_t i = 0; i < con.scores.size(); ++i) {
    report.records.push_back(NodeRecord{NodeId{i},
                                        {},
                                        con.scores[i],
                                        pr.values[i],
                                        cn.values[i],
                                        pn.values[i],
                                        cn.values[i] - pn.values[i]});
  }
  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const NodeRecord& a, const NodeRecord& b) { return a.epsilon > b.epsilon; });
  return report;
}

CentralityReport analyze(const MultiDigraph& g, const AnalysisOptions& opts) {
  const ConScoreVector con = con_scores(g, opts.con_mode);
  const PageRankVector pr = opts.orientation == PageRankOrientation::kReversed
                                ? pagerank_reversed(g, opts.pagerank)
                                : pagerank(g, opts.pagerank);
  CentralityReport report = epsilon_scores(con, pr);
  report.pagerank = opts.pagerank;
  report.orientation = opts.orientation;
  for (NodeRecord& r : report.records) r.label = g.label(r.node);
  return report;
}

LklVerdict detect_lkl(const CentralityReport& report, double threshold) {
  if (report.records.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "detect_lkl on an empty report");
  }
  LklVerdict v;
  v.threshold = threshold;
  v.epsilon_max = report.records.front().epsilon;
  for (const NodeRecord& r : report.records) v.epsilon_max = std::max(v.epsilon_max, r.epsilon);
  for (const NodeRecord& r : report.records) {
    if (v.epsilon_max - r.epsilon <= kEpsilonTieTolerance) v.leaders.push_back(r.node);
  }
  std::sort(v.leaders.begin(), v.leaders.end());
  v.exists = v.epsilon_max > threshold;
  return v;
}

namespace {

std::vector<NodeId> RankBy(const CentralityReport& report, double NodeRecord::* score) {
  std::vector<const NodeRecord*> rows;
  rows.reserve(report.records.size());
  for (const NodeRecord& r : report.records) rows.push_back(&r);
  std::sort(rows.begin(), rows.end(), [score](const NodeRecord* a, const NodeRecord* b) {
    if (a->*score != b->*score) return a->*score > b->*score;
    return a->node < b->node;
  });
  std::vector<NodeId> ranking;
  ranking.reserve(rows.size());
  for (const NodeRecord* r : rows) ranking.push_back(r->node);
  return ranking;
}

}  // namespace

SlopeGraphSpec slope_graph(const CentralityReport& report, int movement_threshold) {
  if (movement_threshold < 1) {
    throw Error(ErrorCode::kInvalidArgument, "movement threshold must be >= 1");
  }
  SlopeGraphSpec spec;
  spec.movement_threshold = movement_threshold;
  spec.con_ranking = RankBy(report, &NodeRecord::con);
  spec.pr_ranking = RankBy(report, &NodeRecord::pr);

  const std::size_t n = report.records.size();
  spec.entries.resize(n);
  for (const NodeRecord& r : report.records) {
    if (r.node.index >= n) {
      throw Error(ErrorCode::kInvalidArgument, "report node indices are not dense");
    }
    spec.entries[r.node.index].node = r.node;
    spec.entries[r.node.index].label = r.label;
  }
  for (std::size_t pos = 0; pos < n; ++pos) {
    spec.entries[spec.con_ranking[pos].index].con_rank = static_cast<int>(pos + 1);
    spec.entries[spec.pr_ranking[pos].index].pr_rank = static_cast<int>(pos + 1);
  }
  for (SlopeEntry& e : spec.entries) {
    e.movement = e.pr_rank - e.con_rank;
    if (e.movement >= movement_threshold) {
      e.cls = Movement::kConUp;
    } else if (-e.movement >= movement_threshold) {
      e.cls = Movement::kPrUp;
    }
  }
  return spec;
}

BatchSummary batch_lkl(std::span<const CentralityReport> reports, double threshold) {
  if (reports.empty()) throw Error(ErrorCode::kInvalidArgument, "batch of zero reports");
  BatchSummary s;
  s.threshold = threshold;
  s.total = reports.size();
  s.verdicts.reserve(reports.size());
  for (const CentralityReport& r : reports) {
    s.verdicts.push_back(detect_lkl(r, threshold));
    if (s.verdicts.back().exists) ++s.count_with_lkl;
  }
  s.fraction = static_cast<double>(s.count_with_lkl) / static_cast<double>(s.total);
  return s;
}

}  // namespace lkl
