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

#include "lkl/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "lkl/error.hpp"

namespace lkl {
namespace {

struct Row {
  std::size_t line = 0;
  std::vector<std::string> fields;
};

struct Lines {
  std::vector<std::pair<std::size_t, std::string_view>> content;  // not blank
  char delimiter = ',';
};

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

bool IsComment(std::string_view line) { return !line.empty() && line.front() == '#'; }

Lines SplitLines(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  Lines out;
  std::size_t number = 0;
  bool delimiter_set = false;
  while (!text.empty()) {
    ++number;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (Trim(line).empty()) continue;
    if (!delimiter_set && !IsComment(line)) {
      out.delimiter = line.find('\t') != std::string_view::npos ? '\t' : ',';
      delimiter_set = true;
    }
    out.content.emplace_back(number, line);
  }
  return out;
}

// Splits one CSV line. Quoted fields keep their content verbatim ("" is an
// escaped quote); unquoted fields are trimmed.
std::vector<std::string> SplitFields(std::string_view line, char delim, std::size_t line_no) {
  std::vector<std::string> fields;
  std::size_t i = 0;
  while (true) {
    while (i < line.size() && line[i] == ' ' && delim != ' ') ++i;
    std::string field;
    if (i < line.size() && line[i] == '"') {
      const std::size_t open = i++;
      bool closed = false;
      while (i < line.size()) {
        if (line[i] == '"') {
          if (i + 1 < line.size() && line[i + 1] == '"') {
            field.push_back('"');
            i += 2;
            continue;
          }
          closed = true;
          ++i;
          break;
        }
        field.push_back(line[i++]);
      }
      if (!closed) throw ParseError(line_no, open + 1, "unterminated quoted field");
      while (i < line.size() && line[i] != delim) {
        if (line[i] != ' ' && line[i] != '\r') {
          throw ParseError(line_no, i + 1, "unexpected character after quoted field");
        }
        ++i;
      }
    } else {
      const std::size_t end = std::min(line.find(delim, i), line.size());
      field = std::string(Trim(line.substr(i, end - i)));
      i = end;
    }
    fields.push_back(std::move(field));
    if (i >= line.size()) break;
    ++i;  // delimiter
    if (i == line.size()) {
      fields.emplace_back();
      break;
    }
  }
  return fields;
}

std::optional<double> ParseNumber(std::string_view s) {
  s = Trim(s);
  if (s.starts_with('+')) s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

std::optional<long long> ParseInteger(std::string_view s) {
  s = Trim(s);
  if (s.starts_with('+')) s.remove_prefix(1);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

bool IsMissing(std::string_view s) {
  s = Trim(s);
  return s.empty() || s == "NA" || s == "na" || s == "NaN" || s == "-";
}

std::vector<Row> ContentRows(const Lines& lines) {
  std::vector<Row> rows;
  for (const auto& [number, text] : lines.content) {
    if (IsComment(text)) continue;
    rows.push_back(Row{number, SplitFields(text, lines.delimiter, number)});
  }
  return rows;
}

std::string FormatWeight(double w) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, w);
  return std::string(buf, res.ptr);
}

std::string QuoteLabel(const std::string& label) {
  const bool plain = !label.empty() && label.front() != '#' && label.front() != ' ' &&
                     label.back() != ' ' && label.find_first_of(",\t\"\r\n") == std::string::npos;
  if (plain) return label;
  std::string out = "\"";
  for (char c : label) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

ParseResult parse_dominance_matrix(std::string_view text, Direction direction) {
  const std::vector<Row> rows = ContentRows(SplitLines(text));
  ParseResult result{MultiDigraph(WeightSemantics::kCount), {}};
  if (rows.empty()) return result;

  const Row& header = rows.front();
  const std::size_t data_rows = rows.size() - 1;
  // The header either has a corner cell (n + 1 fields) or not (n fields).
  std::size_t first_label = 0;
  if (header.fields.size() == data_rows + 1) {
    first_label = 1;
  } else if (header.fields.size() != data_rows) {
    throw ParseError(header.line, 0,
                     "matrix is not square: header has " + std::to_string(header.fields.size()) +
                         " fields but there are " + std::to_string(data_rows) + " data rows");
  }

  std::vector<std::string> labels(header.fields.begin() + first_label, header.fields.end());
  for (std::size_t c = 0; c < labels.size(); ++c) {
    if (result.graph.find(labels[c])) {
      throw ParseError(header.line, c + first_label + 1, "duplicate label '" + labels[c] + "'");
    }
    result.graph.add_node(labels[c]);
  }
  const std::size_t n = labels.size();

  std::set<std::size_t> seen_rows;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const Row& row = rows[r];
    if (row.fields.size() != n + 1) {
      throw ParseError(row.line, 0,
                       "matrix is not square: expected " + std::to_string(n + 1) + " fields, got " +
                           std::to_string(row.fields.size()));
    }
    const auto self = result.graph.find(row.fields[0]);
    if (!self) {
      throw ParseError(row.line, 1, "row label '" + row.fields[0] + "' is not in the header");
    }
    if (!seen_rows.insert(self->index).second) {
      throw ParseError(row.line, 1, "duplicate row label '" + row.fields[0] + "'");
    }
    for (std::size_t c = 0; c < n; ++c) {
      const std::string& cell = row.fields[c + 1];
      const NodeId col{c};
      if (col == *self) {
        if (IsMissing(cell)) continue;
        const auto v = ParseNumber(cell);
        if (!v) throw ParseError(row.line, c + 2, "non-numeric cell '" + cell + "'");
        if (*v != 0.0) {
          result.warnings.push_back("line " + std::to_string(row.line) +
                                    ": ignored diagonal entry " + cell + " for '" + labels[c] +
                                    "'");
        }
        continue;
      }
      const auto v = ParseNumber(cell);
      if (!v) throw ParseError(row.line, c + 2, "non-numeric cell '" + cell + "'");
      if (*v < 0.0) throw ParseError(row.line, c + 2, "negative count '" + cell + "'");
      if (*v == 0.0) continue;
      if (direction == Direction::kColumnDominatesRow) {
        result.graph.add_edge(col, *self, *v);
      } else {
        result.graph.add_edge(*self, col, *v);
      }
    }
  }
  return result;
}

ParseResult parse_signed_edge_list(std::string_view text) {
  const std::vector<Row> rows = ContentRows(SplitLines(text));
  ParseResult result{MultiDigraph(WeightSemantics::kVolume), {}};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& row = rows[i];
    if (row.fields.size() < 3 || row.fields.size() > 4) {
      throw ParseError(row.line, 0,
                       "expected SOURCE,TARGET,RATING[,TIME], got " +
                           std::to_string(row.fields.size()) + " fields");
    }
    const auto rating = ParseInteger(row.fields[2]);
    if (!rating) {
      if (i == 0 && !ParseNumber(row.fields[2])) continue;  // header
      throw ParseError(row.line, 3, "rating '" + row.fields[2] + "' is not an integer");
    }
    if (*rating < -10 || *rating > 10) {
      throw ParseError(row.line, 3, "rating " + std::to_string(*rating) + " outside [-10, 10]");
    }
    if (row.fields[0].empty() || row.fields[1].empty()) {
      throw ParseError(row.line, 0, "empty node label");
    }
    if (*rating >= 0) continue;
    if (row.fields[0] == row.fields[1]) {
      result.warnings.push_back("line " + std::to_string(row.line) + ": skipped self-rating by '" +
                                row.fields[0] + "'");
      continue;
    }
    result.graph.add_edge(row.fields[0], row.fields[1], static_cast<double>(-*rating));
  }
  return result;
}

ParseResult parse_weighted_edge_list(std::string_view text) {
  const Lines lines = SplitLines(text);
  ParseResult result{MultiDigraph(WeightSemantics::kVolume), {}};
  bool first_row = true;
  for (const auto& [number, line] : lines.content) {
    if (IsComment(line)) {
      if (line.starts_with("#node,") || line.starts_with("#node\t")) {
        const auto fields = SplitFields(line, line[5], number);
        if (fields.size() != 2) throw ParseError(number, 0, "malformed #node directive");
        result.graph.add_node(fields[1]);
      }
      continue;
    }
    const auto fields = SplitFields(line, lines.delimiter, number);
    const bool header_candidate = first_row;
    first_row = false;
    if (fields.size() != 3) {
      throw ParseError(
          number, 0,
          "expected SOURCE,TARGET,WEIGHT, got " + std::to_string(fields.size()) + " fields");
    }
    const auto w = ParseNumber(fields[2]);
    if (!w) {
      if (header_candidate) continue;
      throw ParseError(number, 3, "weight '" + fields[2] + "' is not a number");
    }
    if (!(*w > 0.0)) throw ParseError(number, 3, "weight must be positive, got " + fields[2]);
    if (fields[0].empty() || fields[1].empty()) throw ParseError(number, 0, "empty node label");
    if (fields[0] == fields[1]) {
      result.warnings.push_back("line " + std::to_string(number) + ": skipped self-loop on '" +
                                fields[0] + "'");
      continue;
    }
    result.graph.add_edge(fields[0], fields[1], *w);
  }
  return result;
}

std::string serialize(const MultiDigraph& g) {
  std::string out = "source,target,weight\n";
  for (const std::string& label : g.labels()) out += "#node," + QuoteLabel(label) + "\n";
  for (std::size_t u = 0; u < g.node_count(); ++u) {
    for (const Edge& e : g.out_edges(NodeId{u})) {
      out += QuoteLabel(g.label(NodeId{u}));
      out += ',';
      out += QuoteLabel(g.label(NodeId{e.node}));
      out += ',';
      out += FormatWeight(e.weight);
      out += '\n';
    }
  }
  return out;
}

Format detect_format(const std::filesystem::path& path, std::string_view text) {
  const std::string ext = path.extension().string();
  if (ext == ".dom" || ext == ".matrix") return Format::kDominanceMatrix;
  if (ext == ".signed") return Format::kSignedEdgeList;
  if (ext == ".wel" || ext == ".edges") return Format::kWeightedEdgeList;

  const Lines lines = SplitLines(text);
  for (const auto& [number, line] : lines.content) {
    if (line.starts_with("#node,") || line.starts_with("#node\t")) return Format::kWeightedEdgeList;
  }
  std::vector<Row> rows;
  try {
    rows = ContentRows(lines);
  } catch (const ParseError&) {
    return Format::kDominanceMatrix;  // let the real parser report it
  }
  if (rows.size() >= 2) {
    const std::size_t k = rows.size() - 1;
    const auto& header = rows.front().fields;
    if (header.size() == k || header.size() == k + 1) {
      std::set<std::string> cols(header.end() - static_cast<std::ptrdiff_t>(k), header.end());
      std::set<std::string> row_labels;
      bool square = true;
      for (std::size_t r = 1; r < rows.size() && square; ++r) {
        square = rows[r].fields.size() == k + 1;
        if (square) row_labels.insert(rows[r].fields[0]);
      }
      if (square && cols == row_labels) return Format::kDominanceMatrix;
    }
  }
  bool signed_list = false;
  for (const Row& row : rows) {
    if (row.fields.size() == 4) signed_list = true;
    if (row.fields.size() >= 3) {
      if (const auto v = ParseNumber(row.fields[2]); v && *v < 0.0) signed_list = true;
    }
  }
  if (!rows.empty() && rows.front().fields.size() >= 3 && rows.front().fields.size() <= 4) {
    return signed_list ? Format::kSignedEdgeList : Format::kWeightedEdgeList;
  }
  return Format::kDominanceMatrix;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "error reading '" + path.string() + "'");
  return buf.str();
}

ParseResult load(const DatasetDescriptor& descriptor) {
  const std::string text = read_file(descriptor.path);
  const Format format = descriptor.format.value_or(detect_format(descriptor.path, text));
  try {
    switch (format) {
      case Format::kDominanceMatrix: return parse_dominance_matrix(text, descriptor.direction);
      case Format::kSignedEdgeList: return parse_signed_edge_list(text);
      case Format::kWeightedEdgeList: return parse_weighted_edge_list(text);
    }
  } catch (const ParseError& e) {
    throw Error(ErrorCode::kParse, descriptor.path.string() + ": " + e.what());
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown format");
}

std::string_view format_name(Format f) {
  switch (f) {
    case Format::kDominanceMatrix: return "dominance-matrix";
    case Format::kSignedEdgeList: return "signed-edge-list";
    case Format::kWeightedEdgeList: return "weighted-edge-list";
  }
  return "unknown";
}

std::optional<Format> parse_format_name(std::string_view name) {
  if (name == "dominance-matrix" || name == "matrix") return Format::kDominanceMatrix;
  if (name == "signed-edge-list" || name == "signed") return Format::kSignedEdgeList;
  if (name == "weighted-edge-list" || name == "weighted") return Format::kWeightedEdgeList;
  return std::nullopt;
}

std::string_view direction_name(Direction d) {
  return d == Direction::kColumnDominatesRow ? "column-dominates-row" : "row-dominates-column";
}

std::optional<Direction> parse_direction_name(std::string_view name) {
  if (name == "column-dominates-row") return Direction::kColumnDominatesRow;
  if (name == "row-dominates-column") return Direction::kRowDominatesColumn;
  return std::nullopt;
}

}  // namespace lkl
