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

#include "lkl/ranking_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lkl/error.hpp"
#include "lkl/rng.hpp"

namespace lkl {

void RankingModelParams::validate() const {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "ranking model needs n >= 2");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "attachment strength alpha must lie in (0, 1)");
  }
}

GeneratedGraph generate(const RankingModelParams& params) {
  params.validate();
  const std::size_t n = params.n;
  Rng rng(params.seed);

  GeneratedGraph out;
  out.params = params;
  out.rank_of.resize(n);
  std::iota(out.rank_of.begin(), out.rank_of.end(), std::size_t{1});
  rng.shuffle(std::span<std::size_t>(out.rank_of));

  for (std::size_t i = 0; i < n; ++i) out.graph.add_node(std::to_string(i + 1));

  std::vector<double> p(n);
  for (std::size_t j = 0; j < n; ++j) {
    p[j] = std::pow(static_cast<double>(j + 1), -params.alpha);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (rng.uniform01() < p[j]) out.graph.add_edge(NodeId{i}, NodeId{j}, 1.0);
    }
  }

  out.copy_node = NodeId{static_cast<std::size_t>(rng.uniform_index(n))};
  out.template_node = NodeId{0};
  for (std::size_t i = 1; i < n; ++i) {
    if (out.graph.out_degree(NodeId{i}) > out.graph.out_degree(out.template_node)) {
      out.template_node = NodeId{i};
    }
  }

  // Copy from a snapshot: when the copy node is itself a target the
  // template's list must not change underneath us.
  const auto template_out = out.graph.out_edges(out.template_node);
  const std::vector<Edge> targets(template_out.begin(), template_out.end());
  for (const Edge& e : targets) {
    const NodeId target{e.node};
    if (target == out.copy_node || out.graph.has_edge(out.copy_node, target)) continue;
    out.graph.add_edge(out.copy_node, target, 1.0);
    out.copied_edges.emplace_back(out.copy_node, target);
  }
  return out;
}

std::vector<std::size_t> pre_copy_in_degrees(const GeneratedGraph& generated) {
  const std::size_t n = generated.graph.node_count();
  std::vector<std::size_t> deg(n);
  for (std::size_t i = 0; i < n; ++i) deg[i] = generated.graph.in_degree(NodeId{i});
  for (const auto& [src, dst] : generated.copied_edges) --deg[dst.index];
  return deg;
}

InDegreeDistribution in_degree_distribution(const MultiDigraph& g) {
  InDegreeDistribution dist;
  const std::size_t n = g.node_count();
  if (n == 0) return dist;

  std::vector<std::size_t> deg(n);
  for (std::size_t i = 0; i < n; ++i) {
    deg[i] = g.in_degree(NodeId{i});
    ++dist.histogram[deg[i]];
  }
  const double count = static_cast<double>(n);
  dist.max_degree = *std::max_element(deg.begin(), deg.end());
  dist.mean = std::accumulate(deg.begin(), deg.end(), 0.0) / count;
  double ss = 0.0;
  for (std::size_t d : deg)
    ss += (static_cast<double>(d) - dist.mean) * (static_cast<double>(d) - dist.mean);
  dist.stddev = std::sqrt(ss / count);

  std::vector<std::size_t> sorted = deg;
  std::sort(sorted.begin(), sorted.end());
  dist.median = n % 2 == 1 ? static_cast<double>(sorted[n / 2])
                           : 0.5 * static_cast<double>(sorted[n / 2 - 1] + sorted[n / 2]);

  const double cut = dist.mean + 2.0 * dist.stddev;
  const auto above = std::count_if(deg.begin(), deg.end(),
                                   [cut](std::size_t d) { return static_cast<double>(d) > cut; });
  dist.tail_fraction = static_cast<double>(above) / count;
  return dist;
}

CopyNodeAnalysis copy_node_analysis(const GeneratedGraph& generated, double threshold) {
  const CentralityReport report = analyze(generated.graph);
  const LklVerdict verdict = detect_lkl(report, threshold);

  CopyNodeAnalysis a;
  for (const NodeRecord& r : report.records) {
    if (r.node == generated.copy_node) {
      a.copy_con = r.con;
      a.epsilon_of_copy = r.epsilon;
    }
    if (r.node == generated.template_node) a.template_con = r.con;
  }
  const bool in_argmax = std::find(verdict.leaders.begin(), verdict.leaders.end(),
                                   generated.copy_node) != verdict.leaders.end();
  a.copy_is_lkl = in_argmax && verdict.exists;
  return a;
}

}  // namespace lkl
