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

#include "lkl/graph.hpp"

#include <algorithm>
#include <cmath>

#include "lkl/error.hpp"

namespace lkl {
namespace {

// Adds weight into a sorted adjacency list. Returns true if a new entry was
// created.
bool Accumulate(std::vector<Edge>& list, std::size_t node, double weight) {
  auto it = std::lower_bound(list.begin(), list.end(), node,
                             [](const Edge& e, std::size_t n) { return e.node < n; });
  if (it != list.end() && it->node == node) {
    it->weight += weight;
    return false;
  }
  list.insert(it, Edge{node, weight});
  return true;
}

}  // namespace

NodeId MultiDigraph::add_node(std::string_view label) {
  if (auto it = index_.find(label); it != index_.end()) return {it->second};
  const std::size_t id = labels_.size();
  labels_.emplace_back(label);
  index_.emplace(std::string(label), id);
  out_.emplace_back();
  in_.emplace_back();
  return {id};
}

std::optional<NodeId> MultiDigraph::find(std::string_view label) const {
  if (auto it = index_.find(label); it != index_.end()) return NodeId{it->second};
  return std::nullopt;
}

NodeId MultiDigraph::node(std::string_view label) const {
  if (auto id = find(label)) return *id;
  throw Error(ErrorCode::kUnknownNode, "unknown node '" + std::string(label) + "'");
}

void MultiDigraph::check(NodeId u) const {
  if (u.index >= labels_.size()) {
    throw Error(ErrorCode::kUnknownNode, "node index " + std::to_string(u.index) +
                                             " out of range (n=" + std::to_string(labels_.size()) +
                                             ")");
  }
}

void MultiDigraph::add_edge(NodeId u, NodeId v, double weight) {
  check(u);
  check(v);
  if (u == v) {
    throw Error(ErrorCode::kSelfLoop, "self-loop on node '" + labels_[u.index] + "'");
  }
  if (!(weight > 0.0) || !std::isfinite(weight)) {
    throw Error(ErrorCode::kNonPositiveWeight,
                "edge weight must be positive and finite, got " + std::to_string(weight));
  }
  const bool created = Accumulate(out_[u.index], v.index, weight);
  Accumulate(in_[v.index], u.index, weight);
  if (created) ++edge_count_;
}

void MultiDigraph::add_edge(std::string_view u, std::string_view v, double weight) {
  if (u == v) {
    throw Error(ErrorCode::kSelfLoop, "self-loop on node '" + std::string(u) + "'");
  }
  const NodeId a = add_node(u);
  const NodeId b = add_node(v);
  add_edge(a, b, weight);
}

double MultiDigraph::total_weight() const noexcept {
  double total = 0.0;
  for (const auto& list : out_)
    for (const Edge& e : list) total += e.weight;
  return total;
}

const std::string& MultiDigraph::label(NodeId u) const {
  check(u);
  return labels_[u.index];
}

std::span<const Edge> MultiDigraph::out_edges(NodeId u) const {
  check(u);
  return out_[u.index];
}

std::span<const Edge> MultiDigraph::in_edges(NodeId u) const {
  check(u);
  return in_[u.index];
}

double MultiDigraph::weight(NodeId u, NodeId v) const {
  check(u);
  check(v);
  const auto& list = out_[u.index];
  auto it = std::lower_bound(list.begin(), list.end(), v.index,
                             [](const Edge& e, std::size_t n) { return e.node < n; });
  return (it != list.end() && it->node == v.index) ? it->weight : 0.0;
}

MultiDigraph MultiDigraph::reversed() const {
  MultiDigraph r(semantics_);
  r.labels_ = labels_;
  r.index_ = index_;
  r.out_ = in_;
  r.in_ = out_;
  r.edge_count_ = edge_count_;
  return r;
}

}  // namespace lkl
