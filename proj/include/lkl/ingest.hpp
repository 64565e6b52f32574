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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lkl/graph.hpp"

namespace lkl {

enum class Format { kDominanceMatrix, kSignedEdgeList, kWeightedEdgeList };

/// Arrow convention for dominance matrices. kColumnDominatesRow reads
/// M[r][c] = k as "row r was dominated by column c, k times" and produces
/// the edge c -> r with weight k.
enum class Direction { kColumnDominatesRow, kRowDominatesColumn };

struct DatasetDescriptor {
  std::filesystem::path path;
  std::optional<Format> format;  // nullopt: detect from extension / content
  Direction direction = Direction::kColumnDominatesRow;
};

/// A parsed graph plus non-fatal diagnostics (ignored diagonal entries,
/// skipped self-loop rows).
struct ParseResult {
  MultiDigraph graph;
  std::vector<std::string> warnings;
};

// Every parser accepts comma- or tab-delimited UTF-8 text (delimiter picked
// from the first content line), double-quoted fields, CRLF line endings, a
// leading BOM, and skips blank lines and lines starting with '#'.
// Errors are ParseError with a 1-based line/column.

/// Square count matrix: a header row of column labels (optionally preceded
/// by an empty corner cell), then one row per node: label, then n
/// non-negative numbers. Row labels must be a permutation of the header.
/// Nodes are numbered in header order.
ParseResult parse_dominance_matrix(std::string_view text,
                                   Direction direction = Direction::kColumnDominatesRow);

/// SOURCE,TARGET,RATING[,TIME] rows with integer ratings in [-10, 10].
/// Negative rows become edges SOURCE -> TARGET of weight |RATING|; other
/// rows are dropped, so only users touching a negative rating become nodes.
/// A first line whose RATING field is not numeric is taken as a header.
ParseResult parse_signed_edge_list(std::string_view text);

/// SOURCE,TARGET,WEIGHT rows with positive weights; repeated pairs
/// accumulate. A first line whose WEIGHT field is not numeric is taken as a
/// header. `#node,<label>` lines declare a node at that position, which is
/// how serialize() preserves node order and isolated nodes.
ParseResult parse_weighted_edge_list(std::string_view text);

/// Canonical interchange form:
///   source,target,weight
///   #node,<label>            (one per node, index order)
///   <source>,<target>,<w>    (sorted by source index, then target index)
/// Weights use the shortest round-trip decimal form, so integers print
/// without a decimal point.
std::string serialize(const MultiDigraph& g);

/// Guesses the format: extension first (.dom/.matrix, .signed,
/// .wel/.edges), then content. Content with 3-4 columns and a numeric third
/// field is an edge list, signed if any third field is negative or the
/// rows carry a fourth column; anything else is a dominance matrix.
Format detect_format(const std::filesystem::path& path, std::string_view text);

/// Reads and parses a file. Throws kIo when it cannot be read; parse
/// errors are rethrown with the path prefixed.
ParseResult load(const DatasetDescriptor& descriptor);

std::string read_file(const std::filesystem::path& path);

std::string_view format_name(Format f);
std::optional<Format> parse_format_name(std::string_view name);
std::string_view direction_name(Direction d);
std::optional<Direction> parse_direction_name(std::string_view name);

}  // namespace lkl
