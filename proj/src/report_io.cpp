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

#include "lkl/report_io.hpp"

#include <charconv>

#include "json.hpp"
#include "lkl/error.hpp"

namespace lkl {
namespace {

using nlohmann::json;

std::string Num(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string_view con_mode_name(ConMode mode) {
  return mode == ConMode::kBinarized ? "binarized" : "weighted";
}

std::optional<ConMode> parse_con_mode_name(std::string_view name) {
  if (name == "binarized") return ConMode::kBinarized;
  if (name == "weighted") return ConMode::kWeighted;
  return std::nullopt;
}

std::string_view orientation_name(PageRankOrientation o) {
  return o == PageRankOrientation::kReversed ? "reversed" : "forward";
}

std::optional<PageRankOrientation> parse_orientation_name(std::string_view name) {
  if (name == "reversed") return PageRankOrientation::kReversed;
  if (name == "forward") return PageRankOrientation::kForward;
  return std::nullopt;
}

std::string report_to_json(const CentralityReport& report, std::span<const double> thresholds,
                           std::string_view metadata_json) {
  json doc;
  doc["schema_version"] = kReportSchemaVersion;
  if (!metadata_json.empty()) {
    json meta = json::parse(metadata_json, nullptr, /*allow_exceptions=*/false);
    if (!meta.is_object()) {
      throw Error(ErrorCode::kInvalidArgument, "report metadata must be a JSON object");
    }
    doc["metadata"] = std::move(meta);
  } else {
    doc["metadata"] = json::object();
  }
  doc["con_mode"] = con_mode_name(report.con_mode);
  doc["pagerank"] = {
      {"damping", report.pagerank.damping},
      {"tol", report.pagerank.tol},
      {"max_iter", report.pagerank.max_iter},
      {"weighted", report.pagerank.weighted},
      {"orientation", orientation_name(report.orientation)},
      {"iterations", report.pagerank_iterations},
      {"residual", report.pagerank_residual},
  };
  doc["normalization"] = {{"con_degenerate", report.con_degenerate},
                          {"pr_degenerate", report.pr_degenerate}};

  json nodes = json::array();
  for (const NodeRecord& r : report.records) {
    nodes.push_back({{"index", r.node.index},
                     {"label", r.label},
                     {"con", r.con},
                     {"pr", r.pr},
                     {"con_norm", r.con_norm},
                     {"pr_norm", r.pr_norm},
                     {"epsilon", r.epsilon}});
  }
  doc["nodes"] = std::move(nodes);

  json verdicts = json::array();
  if (!report.records.empty()) {
    for (double t : thresholds) {
      const LklVerdict v = detect_lkl(report, t);
      json leaders = json::array();
      json indices = json::array();
      for (NodeId id : v.leaders) {
        indices.push_back(id.index);
        for (const NodeRecord& r : report.records) {
          if (r.node == id) leaders.push_back(r.label);
        }
      }
      verdicts.push_back({{"threshold", t},
                          {"exists", v.exists},
                          {"epsilon_max", v.epsilon_max},
                          {"leaders", std::move(leaders)},
                          {"leader_indices", std::move(indices)}});
    }
  }
  doc["verdicts"] = std::move(verdicts);
  return doc.dump(2) + "\n";
}

CentralityReport report_from_json(std::string_view text) {
  const json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw Error(ErrorCode::kParse, "report is not a JSON object");
  }
  try {
    if (doc.at("schema_version").get<int>() != kReportSchemaVersion) {
      throw Error(ErrorCode::kParse,
                  "unsupported report schema_version " + doc.at("schema_version").dump());
    }
    CentralityReport report;
    const auto mode = parse_con_mode_name(doc.at("con_mode").get<std::string>());
    if (!mode) throw Error(ErrorCode::kParse, "unknown con_mode");
    report.con_mode = *mode;
    const json& pr = doc.at("pagerank");
    report.pagerank.damping = pr.at("damping").get<double>();
    report.pagerank.tol = pr.at("tol").get<double>();
    report.pagerank.max_iter = pr.at("max_iter").get<int>();
    report.pagerank.weighted = pr.at("weighted").get<bool>();
    const auto orientation = parse_orientation_name(pr.at("orientation").get<std::string>());
    if (!orientation) throw Error(ErrorCode::kParse, "unknown PageRank orientation");
    report.orientation = *orientation;
    report.pagerank_iterations = pr.at("iterations").get<int>();
    report.pagerank_residual = pr.at("residual").get<double>();
    report.con_degenerate = doc.at("normalization").at("con_degenerate").get<bool>();
    report.pr_degenerate = doc.at("normalization").at("pr_degenerate").get<bool>();
    for (const json& node : doc.at("nodes")) {
      report.records.push_back(
          NodeRecord{NodeId{node.at("index").get<std::size_t>()},
                     node.at("label").get<std::string>(), node.at("con").get<double>(),
                     node.at("pr").get<double>(), node.at("con_norm").get<double>(),
                     node.at("pr_norm").get<double>(), node.at("epsilon").get<double>()});
    }
    return report;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed report: ") + e.what());
  }
}

std::string generated_sidecar_json(const GeneratedGraph& generated,
                                   const CopyNodeAnalysis* analysis) {
  const MultiDigraph& g = generated.graph;
  json doc = {
      {"schema_version", kReportSchemaVersion},
      {"model", "directed-ranking"},
      {"rng", "mt19937_64"},
      {"n", generated.params.n},
      {"alpha", generated.params.alpha},
      {"seed", generated.params.seed},
      {"nodes", g.node_count()},
      {"edges", g.edge_count()},
      {"copy_node",
       {{"index", generated.copy_node.index}, {"label", g.label(generated.copy_node)}}},
      {"template_node",
       {{"index", generated.template_node.index}, {"label", g.label(generated.template_node)}}},
      {"copied_edges", generated.copied_edges.size()},
  };
  if (analysis != nullptr) {
    doc["copy_analysis"] = {{"copy_con", analysis->copy_con},
                            {"template_con", analysis->template_con},
                            {"epsilon_of_copy", analysis->epsilon_of_copy},
                            {"copy_is_lkl", analysis->copy_is_lkl}};
  }
  return doc.dump(2) + "\n";
}

std::string report_to_csv(const CentralityReport& report, std::optional<std::size_t> top_k) {
  std::string out = "rank,node,con,pr,con_norm,pr_norm,epsilon\n";
  const std::size_t rows = std::min(report.records.size(), top_k.value_or(report.records.size()));
  for (std::size_t i = 0; i < rows; ++i) {
    const NodeRecord& r = report.records[i];
    out += std::to_string(i + 1) + ',' + CsvField(r.label) + ',' + Num(r.con) + ',' + Num(r.pr) +
           ',' + Num(r.con_norm) + ',' + Num(r.pr_norm) + ',' + Num(r.epsilon) + '\n';
  }
  return out;
}

}  // namespace lkl
