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

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lkl {

/// Dense node index, 0..n-1 within one graph.
struct NodeId {
  std::size_t index = 0;

  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

/// How edge weights should be read: interaction counts (dominance, copied
/// model edges) or real-valued magnitudes (trade volume, rating strength).
enum class WeightSemantics { kCount, kVolume };

struct Edge {
  std::size_t node = 0;  // the other endpoint
  double weight = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Directed multigraph with parallel edges collapsed into one weighted edge.
///
/// Adjacency lists are kept sorted by neighbor index, so iteration order is
/// a pure function of the inserted edges. No self-loops, no zero weights.
/// Not synchronized: build on one thread, then share read-only.
class MultiDigraph {
 public:
  explicit MultiDigraph(WeightSemantics semantics = WeightSemantics::kCount)
      : semantics_(semantics) {}

  /// Returns the id of `label`, inserting a fresh node if it is unseen.
  NodeId add_node(std::string_view label);

  /// Looks up a label; throws kUnknownNode if absent.
  NodeId node(std::string_view label) const;
  std::optional<NodeId> find(std::string_view label) const;

  /// Adds `weight` to edge (u, v), creating it if needed.
  /// Throws kSelfLoop when u == v and kNonPositiveWeight when weight <= 0
  /// (or is not finite).
  void add_edge(NodeId u, NodeId v, double weight);
  void add_edge(std::string_view u, std::string_view v, double weight);

  std::size_t node_count() const noexcept { return labels_.size(); }
  /// Number of distinct (u, v) pairs.
  std::size_t edge_count() const noexcept { return edge_count_; }
  double total_weight() const noexcept;

  WeightSemantics semantics() const noexcept { return semantics_; }
  void set_semantics(WeightSemantics s) noexcept { semantics_ = s; }

  const std::string& label(NodeId u) const;
  std::span<const std::string> labels() const noexcept { return labels_; }

  std::span<const Edge> out_edges(NodeId u) const;
  std::span<const Edge> in_edges(NodeId u) const;

  std::size_t out_degree(NodeId u) const { return out_edges(u).size(); }
  std::size_t in_degree(NodeId u) const { return in_edges(u).size(); }

  /// Accumulated weight of (u, v), 0 when absent.
  double weight(NodeId u, NodeId v) const;
  bool has_edge(NodeId u, NodeId v) const { return weight(u, v) > 0.0; }

  /// Same nodes and labels, every edge flipped.
  MultiDigraph reversed() const;

  /// Same labels in the same order, same weighted edges. Semantics flag is
  /// metadata and does not take part in the comparison.
  friend bool operator==(const MultiDigraph& a, const MultiDigraph& b) {
    return a.labels_ == b.labels_ && a.out_ == b.out_;
  }

 private:
  void check(NodeId u) const;

  WeightSemantics semantics_;
  std::vector<std::string> labels_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<std::vector<Edge>> out_;
  std::vector<std::vector<Edge>> in_;
  std::size_t edge_count_ = 0;
};

}  // namespace lkl
