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

// Independent reference computations used by the unit and acceptance
// tests. Nothing here calls the library's scoring code; graphs are only
// read through node_count() and weight().

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lkl/centrality.hpp"
#include "lkl/graph.hpp"

namespace lkl::testing {

// O(n^3) double loop straight from the definition.
inline std::vector<double> NaiveCon(const MultiDigraph& g, ConMode mode) {
  const std::size_t n = g.node_count();
  std::vector<double> con(n, 0.0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      for (std::size_t w = 0; w < n; ++w) {
        const double a = g.weight(NodeId{u}, NodeId{w});
        const double b = g.weight(NodeId{v}, NodeId{w});
        if (a > 0.0 && b > 0.0) con[u] += mode == ConMode::kBinarized ? 1.0 : std::min(a, b);
      }
    }
  }
  return con;
}

// Solves (I - d P^T) x = (1 - d)/n * 1 directly, P row-stochastic with
// dangling rows replaced by the uniform distribution. `reversed` builds P
// from the flipped edges.
inline std::vector<double> DensePageRank(const MultiDigraph& g, double damping, bool weighted,
                                         bool reversed) {
  const auto n = static_cast<Eigen::Index>(g.node_count());
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      const NodeId from{static_cast<std::size_t>(reversed ? j : i)};
      const NodeId to{static_cast<std::size_t>(reversed ? i : j)};
      const double w = g.weight(from, to);
      if (w > 0.0) p(i, j) = weighted ? w : 1.0;
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    const double s = p.row(i).sum();
    if (s > 0.0) {
      p.row(i) /= s;
    } else {
      p.row(i).setConstant(1.0 / static_cast<double>(n));
    }
  }
  const Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n) - damping * p.transpose();
  const Eigen::VectorXd b = Eigen::VectorXd::Constant(n, (1.0 - damping) / static_cast<double>(n));
  Eigen::VectorXd x = a.fullPivLu().solve(b);
  x /= x.sum();
  return {x.data(), x.data() + n};
}

// Random digraph on n nodes labelled "0".."n-1"; each ordered pair is an
// edge with probability `density`. Integer weights 1..max_weight when
// max_weight > 1, otherwise weight 1; `real_weights` draws from (0, 10].
inline MultiDigraph RandomGraph(std::mt19937_64& rng, std::size_t n, double density,
                                int max_weight = 1, bool real_weights = false) {
  MultiDigraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_node(std::to_string(i));
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> count(1, std::max(1, max_weight));
  std::uniform_real_distribution<double> real(0.0, 10.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || coin(rng) >= density) continue;
      double w = 1.0;
      if (real_weights) {
        do w = real(rng);
        while (w <= 0.0);
      } else {
        w = count(rng);
      }
      g.add_edge(NodeId{i}, NodeId{j}, w);
    }
  }
  return g;
}

// Off-diagonal sum of a dominance matrix read straight from its text:
// skips '#' comments and blank lines, drops the header row and each row's
// label cell. Diagonal cells and NA/- entries contribute nothing. No
// quoting support; fixtures only quote the header.
inline double RawMatrixOffDiagonalSum(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool header = true;
  std::size_t row = 0;
  double total = 0.0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    const char delim = line.find('\t') != std::string::npos ? '\t' : ',';
    std::istringstream cells(line);
    std::string cell;
    std::getline(cells, cell, delim);
    for (std::size_t col = 0; std::getline(cells, cell, delim); ++col) {
      if (col == row || cell.empty() || cell == "NA" || cell == "-") continue;
      total += std::stod(cell);
    }
    ++row;
  }
  return total;
}

}  // namespace lkl::testing
