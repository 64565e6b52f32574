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

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "lkl/centrality.hpp"
#include "lkl/error.hpp"
#include "lkl/graph.hpp"
#include "lkl/ingest.hpp"
#include "lkl/leader.hpp"
#include "lkl/lkl.h"
#include "lkl/ranking_model.hpp"
#include "lkl/render.hpp"
#include "lkl/report_io.hpp"

struct lkl_graph {
  lkl::MultiDigraph graph;
  std::vector<std::string> warnings;
};

struct lkl_report {
  lkl::CentralityReport report;
};

struct lkl_generated {
  lkl::GeneratedGraph generated;
  lkl_graph view;
};

namespace {

thread_local std::string g_last_error;

lkl_status ToStatus(lkl::ErrorCode code) {
  switch (code) {
    case lkl::ErrorCode::kInvalidArgument: return LKL_ERR_INVALID_ARGUMENT;
    case lkl::ErrorCode::kSelfLoop: return LKL_ERR_SELF_LOOP;
    case lkl::ErrorCode::kNonPositiveWeight: return LKL_ERR_NONPOSITIVE_WEIGHT;
    case lkl::ErrorCode::kUnknownNode: return LKL_ERR_UNKNOWN_NODE;
    case lkl::ErrorCode::kParse: return LKL_ERR_PARSE;
    case lkl::ErrorCode::kNoConvergence: return LKL_ERR_NO_CONVERGENCE;
    case lkl::ErrorCode::kIo: return LKL_ERR_IO;
  }
  return LKL_ERR_INTERNAL;
}

lkl_status Fail(lkl_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
lkl_status Guard(F&& body) noexcept {
  try {
    body();
    return LKL_OK;
  } catch (const lkl::Error& e) {
    return Fail(ToStatus(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(LKL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(LKL_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(LKL_ERR_INTERNAL, "unknown error");
  }
}

#define LKL_REQUIRE(cond, what) \
  if (!(cond)) return Fail(LKL_ERR_INVALID_ARGUMENT, what)

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

std::optional<lkl::Format> ToFormat(lkl_format f) {
  switch (f) {
    case LKL_FORMAT_DOMINANCE_MATRIX: return lkl::Format::kDominanceMatrix;
    case LKL_FORMAT_SIGNED_EDGE_LIST: return lkl::Format::kSignedEdgeList;
    case LKL_FORMAT_WEIGHTED_EDGE_LIST: return lkl::Format::kWeightedEdgeList;
    case LKL_FORMAT_AUTO: break;
  }
  return std::nullopt;
}

lkl_format FromFormat(lkl::Format f) {
  switch (f) {
    case lkl::Format::kDominanceMatrix: return LKL_FORMAT_DOMINANCE_MATRIX;
    case lkl::Format::kSignedEdgeList: return LKL_FORMAT_SIGNED_EDGE_LIST;
    case lkl::Format::kWeightedEdgeList: return LKL_FORMAT_WEIGHTED_EDGE_LIST;
  }
  return LKL_FORMAT_AUTO;
}

lkl::Direction ToDirection(lkl_direction d) {
  return d == LKL_DIRECTION_ROW_DOMINATES_COLUMN ? lkl::Direction::kRowDominatesColumn
                                                 : lkl::Direction::kColumnDominatesRow;
}

bool ValidFormat(lkl_format f) {
  return f >= LKL_FORMAT_AUTO && f <= LKL_FORMAT_WEIGHTED_EDGE_LIST;
}
bool ValidDirection(lkl_direction d) {
  return d == LKL_DIRECTION_COLUMN_DOMINATES_ROW || d == LKL_DIRECTION_ROW_DOMINATES_COLUMN;
}

std::optional<std::size_t> TopK(size_t top_k) {
  return top_k == 0 ? std::nullopt : std::optional<std::size_t>(top_k);
}

lkl::AnalysisOptions ToOptions(const lkl_analysis_options& o) {
  lkl::AnalysisOptions opts;
  opts.con_mode =
      o.con_mode == LKL_CON_WEIGHTED ? lkl::ConMode::kWeighted : lkl::ConMode::kBinarized;
  opts.pagerank.damping = o.damping;
  opts.pagerank.tol = o.tol;
  opts.pagerank.max_iter = o.max_iter;
  opts.pagerank.weighted = o.pr_weighted != 0;
  opts.orientation = o.pr_orientation == LKL_PR_FORWARD ? lkl::PageRankOrientation::kForward
                                                        : lkl::PageRankOrientation::kReversed;
  return opts;
}

lkl::CopyNodeAnalysis ToCopy(const lkl_copy_analysis& a) {
  return {a.copy_con, a.template_con, a.epsilon_of_copy, a.copy_is_lkl != 0};
}

}  // namespace

extern "C" {

const char* lkl_version(void) { return "1.0.0"; }

const char* lkl_last_error(void) { return g_last_error.c_str(); }

const char* lkl_status_name(lkl_status status) {
  switch (status) {
    case LKL_OK: return "ok";
    case LKL_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LKL_ERR_SELF_LOOP: return "self-loop";
    case LKL_ERR_NONPOSITIVE_WEIGHT: return "non-positive weight";
    case LKL_ERR_UNKNOWN_NODE: return "unknown node";
    case LKL_ERR_PARSE: return "parse error";
    case LKL_ERR_NO_CONVERGENCE: return "no convergence";
    case LKL_ERR_IO: return "i/o error";
    case LKL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void lkl_string_free(char* s) { std::free(s); }

lkl_status lkl_graph_create(lkl_graph** out) {
  LKL_REQUIRE(out != nullptr, "out is NULL");
  return Guard([&] { *out = new lkl_graph{}; });
}

void lkl_graph_destroy(lkl_graph* g) { delete g; }

lkl_status lkl_graph_add_node(lkl_graph* g, const char* label, size_t* index_out) {
  LKL_REQUIRE(g != nullptr && label != nullptr, "graph or label is NULL");
  return Guard([&] {
    const lkl::NodeId id = g->graph.add_node(label);
    if (index_out != nullptr) *index_out = id.index;
  });
}

lkl_status lkl_graph_add_edge(lkl_graph* g, const char* source, const char* target, double weight) {
  LKL_REQUIRE(g != nullptr && source != nullptr && target != nullptr, "NULL argument");
  return Guard(
      [&] { g->graph.add_edge(std::string_view(source), std::string_view(target), weight); });
}

lkl_status lkl_graph_add_edge_by_index(lkl_graph* g, size_t source, size_t target, double weight) {
  LKL_REQUIRE(g != nullptr, "graph is NULL");
  return Guard([&] { g->graph.add_edge(lkl::NodeId{source}, lkl::NodeId{target}, weight); });
}

size_t lkl_graph_node_count(const lkl_graph* g) { return g ? g->graph.node_count() : 0; }
size_t lkl_graph_edge_count(const lkl_graph* g) { return g ? g->graph.edge_count() : 0; }
double lkl_graph_total_weight(const lkl_graph* g) { return g ? g->graph.total_weight() : 0.0; }

lkl_status lkl_graph_node_label(const lkl_graph* g, size_t index, const char** label) {
  LKL_REQUIRE(g != nullptr && label != nullptr, "NULL argument");
  return Guard([&] { *label = g->graph.label(lkl::NodeId{index}).c_str(); });
}

lkl_status lkl_graph_find_node(const lkl_graph* g, const char* label, size_t* index_out) {
  LKL_REQUIRE(g != nullptr && label != nullptr && index_out != nullptr, "NULL argument");
  return Guard([&] { *index_out = g->graph.node(label).index; });
}

lkl_status lkl_graph_weight(const lkl_graph* g, size_t source, size_t target, double* weight) {
  LKL_REQUIRE(g != nullptr && weight != nullptr, "NULL argument");
  return Guard([&] { *weight = g->graph.weight(lkl::NodeId{source}, lkl::NodeId{target}); });
}

lkl_status lkl_graph_out_degree(const lkl_graph* g, size_t node, size_t* degree) {
  LKL_REQUIRE(g != nullptr && degree != nullptr, "NULL argument");
  return Guard([&] { *degree = g->graph.out_degree(lkl::NodeId{node}); });
}

lkl_status lkl_graph_in_degree(const lkl_graph* g, size_t node, size_t* degree) {
  LKL_REQUIRE(g != nullptr && degree != nullptr, "NULL argument");
  return Guard([&] { *degree = g->graph.in_degree(lkl::NodeId{node}); });
}

lkl_status lkl_graph_reverse(const lkl_graph* g, lkl_graph** out) {
  LKL_REQUIRE(g != nullptr && out != nullptr, "NULL argument");
  return Guard([&] { *out = new lkl_graph{g->graph.reversed(), {}}; });
}

lkl_status lkl_graph_parse(const char* text, size_t length, lkl_format format,
                           lkl_direction direction, lkl_graph** out) {
  LKL_REQUIRE(out != nullptr && (text != nullptr || length == 0), "NULL argument");
  LKL_REQUIRE(ValidFormat(format) && ValidDirection(direction), "bad format or direction");
  return Guard([&] {
    const std::string_view view(text ? text : "", length);
    const lkl::Format f = ToFormat(format).value_or(lkl::detect_format({}, view));
    lkl::ParseResult parsed;
    switch (f) {
      case lkl::Format::kDominanceMatrix:
        parsed = lkl::parse_dominance_matrix(view, ToDirection(direction));
        break;
      case lkl::Format::kSignedEdgeList: parsed = lkl::parse_signed_edge_list(view); break;
      case lkl::Format::kWeightedEdgeList: parsed = lkl::parse_weighted_edge_list(view); break;
    }
    *out = new lkl_graph{std::move(parsed.graph), std::move(parsed.warnings)};
  });
}

lkl_status lkl_graph_load(const char* path, lkl_format format, lkl_direction direction,
                          lkl_graph** out, lkl_format* detected) {
  LKL_REQUIRE(path != nullptr && out != nullptr, "NULL argument");
  LKL_REQUIRE(ValidFormat(format) && ValidDirection(direction), "bad format or direction");
  return Guard([&] {
    lkl::DatasetDescriptor desc{path, ToFormat(format), ToDirection(direction)};
    if (!desc.format) desc.format = lkl::detect_format(desc.path, lkl::read_file(desc.path));
    lkl::ParseResult parsed = lkl::load(desc);
    if (detected != nullptr) *detected = FromFormat(*desc.format);
    *out = new lkl_graph{std::move(parsed.graph), std::move(parsed.warnings)};
  });
}

size_t lkl_graph_warning_count(const lkl_graph* g) { return g ? g->warnings.size() : 0; }

const char* lkl_graph_warning(const lkl_graph* g, size_t i) {
  if (g == nullptr || i >= g->warnings.size()) return nullptr;
  return g->warnings[i].c_str();
}

lkl_status lkl_graph_serialize(const lkl_graph* g, char** out) {
  LKL_REQUIRE(g != nullptr && out != nullptr, "NULL argument");
  return Guard([&] { *out = Dup(lkl::serialize(g->graph)); });
}

void lkl_analysis_options_init(lkl_analysis_options* opts) {
  if (opts == nullptr) return;
  const lkl::PageRankOptions d;
  opts->con_mode = LKL_CON_BINARIZED;
  opts->damping = d.damping;
  opts->tol = d.tol;
  opts->max_iter = d.max_iter;
  opts->pr_weighted = d.weighted ? 1 : 0;
  opts->pr_orientation = LKL_PR_REVERSED;
}

lkl_status lkl_analyze(const lkl_graph* g, const lkl_analysis_options* opts, lkl_report** out) {
  LKL_REQUIRE(g != nullptr && out != nullptr, "NULL argument");
  lkl_analysis_options o;
  lkl_analysis_options_init(&o);
  if (opts != nullptr) o = *opts;
  LKL_REQUIRE(o.con_mode == LKL_CON_BINARIZED || o.con_mode == LKL_CON_WEIGHTED, "bad con mode");
  LKL_REQUIRE(o.pr_orientation == LKL_PR_REVERSED || o.pr_orientation == LKL_PR_FORWARD,
              "bad PageRank orientation");
  return Guard([&] { *out = new lkl_report{lkl::analyze(g->graph, ToOptions(o))}; });
}

void lkl_report_destroy(lkl_report* r) { delete r; }

size_t lkl_report_size(const lkl_report* r) { return r ? r->report.records.size() : 0; }

lkl_status lkl_report_record(const lkl_report* r, size_t position, lkl_node_record* out) {
  LKL_REQUIRE(r != nullptr && out != nullptr, "NULL argument");
  LKL_REQUIRE(position < r->report.records.size(), "record position out of range");
  const lkl::NodeRecord& rec = r->report.records[position];
  *out = lkl_node_record{rec.node.index, rec.label.c_str(), rec.con,    rec.pr,
                         rec.con_norm,   rec.pr_norm,       rec.epsilon};
  return LKL_OK;
}

lkl_status lkl_report_pagerank_info(const lkl_report* r, int* iterations, double* residual) {
  LKL_REQUIRE(r != nullptr, "report is NULL");
  if (iterations != nullptr) *iterations = r->report.pagerank_iterations;
  if (residual != nullptr) *residual = r->report.pagerank_residual;
  return LKL_OK;
}

lkl_status lkl_report_degenerate(const lkl_report* r, int* con_degenerate, int* pr_degenerate) {
  LKL_REQUIRE(r != nullptr, "report is NULL");
  if (con_degenerate != nullptr) *con_degenerate = r->report.con_degenerate ? 1 : 0;
  if (pr_degenerate != nullptr) *pr_degenerate = r->report.pr_degenerate ? 1 : 0;
  return LKL_OK;
}

lkl_status lkl_detect(const lkl_report* r, double threshold, lkl_verdict* out, size_t* leaders,
                      size_t capacity) {
  LKL_REQUIRE(r != nullptr && out != nullptr, "NULL argument");
  return Guard([&] {
    const lkl::LklVerdict v = lkl::detect_lkl(r->report, threshold);
    *out = lkl_verdict{v.exists ? 1 : 0, v.epsilon_max, v.threshold, v.leaders.size()};
    if (leaders != nullptr) {
      for (std::size_t i = 0; i < v.leaders.size() && i < capacity; ++i)
        leaders[i] = v.leaders[i].index;
    }
  });
}

lkl_status lkl_slope_entry(const lkl_report* r, int movement_threshold, size_t node_index,
                           int* con_rank, int* pr_rank, lkl_movement* movement) {
  LKL_REQUIRE(r != nullptr, "report is NULL");
  return Guard([&] {
    const lkl::SlopeGraphSpec spec = lkl::slope_graph(r->report, movement_threshold);
    if (node_index >= spec.entries.size()) {
      throw lkl::Error(lkl::ErrorCode::kUnknownNode, "node index out of range");
    }
    const lkl::SlopeEntry& e = spec.entries[node_index];
    if (con_rank != nullptr) *con_rank = e.con_rank;
    if (pr_rank != nullptr) *pr_rank = e.pr_rank;
    if (movement != nullptr) {
      *movement = e.cls == lkl::Movement::kConUp  ? LKL_MOVEMENT_CON_UP
                  : e.cls == lkl::Movement::kPrUp ? LKL_MOVEMENT_PR_UP
                                                  : LKL_MOVEMENT_NEUTRAL;
    }
  });
}

lkl_status lkl_batch(const lkl_report* const* reports, size_t count, double threshold,
                     lkl_batch_result* out) {
  LKL_REQUIRE(reports != nullptr && out != nullptr, "NULL argument");
  return Guard([&] {
    std::vector<lkl::CentralityReport> copies;
    copies.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      if (reports[i] == nullptr) throw lkl::Error(lkl::ErrorCode::kInvalidArgument, "NULL report");
      copies.push_back(reports[i]->report);
    }
    const lkl::BatchSummary s = lkl::batch_lkl(copies, threshold);
    *out = lkl_batch_result{s.count_with_lkl, s.total, s.fraction};
  });
}

lkl_status lkl_report_to_json(const lkl_report* r, const double* thresholds, size_t threshold_count,
                              const char* metadata_json, char** out) {
  LKL_REQUIRE(r != nullptr && out != nullptr, "NULL argument");
  LKL_REQUIRE(thresholds != nullptr || threshold_count == 0, "thresholds is NULL");
  return Guard([&] {
    *out = Dup(lkl::report_to_json(r->report, std::span<const double>(thresholds, threshold_count),
                                   metadata_json ? metadata_json : ""));
  });
}

lkl_status lkl_report_from_json(const char* json, size_t length, lkl_report** out) {
  LKL_REQUIRE(json != nullptr && out != nullptr, "NULL argument");
  return Guard(
      [&] { *out = new lkl_report{lkl::report_from_json(std::string_view(json, length))}; });
}

lkl_status lkl_report_to_csv(const lkl_report* r, size_t top_k, char** out) {
  LKL_REQUIRE(r != nullptr && out != nullptr, "NULL argument");
  return Guard([&] { *out = Dup(lkl::report_to_csv(r->report, TopK(top_k))); });
}

lkl_status lkl_report_slope_svg(const lkl_report* r, int movement_threshold, size_t top_k,
                                char** out) {
  LKL_REQUIRE(r != nullptr && out != nullptr, "NULL argument");
  return Guard([&] {
    *out = Dup(lkl::render_slope_svg(lkl::slope_graph(r->report, movement_threshold), TopK(top_k)));
  });
}

lkl_status lkl_report_histogram_svg(const lkl_report* r, size_t top_k, char** out) {
  LKL_REQUIRE(r != nullptr && out != nullptr, "NULL argument");
  return Guard([&] { *out = Dup(lkl::render_histogram_svg(r->report, TopK(top_k))); });
}

void lkl_model_params_init(lkl_model_params* params) {
  if (params == nullptr) return;
  const lkl::RankingModelParams d;
  params->n = d.n;
  params->alpha = d.alpha;
  params->seed = d.seed;
}

lkl_status lkl_generate(const lkl_model_params* params, lkl_generated** out) {
  LKL_REQUIRE(params != nullptr && out != nullptr, "NULL argument");
  return Guard([&] {
    lkl::GeneratedGraph gen = lkl::generate({params->n, params->alpha, params->seed});
    lkl::MultiDigraph copy = gen.graph;
    *out = new lkl_generated{std::move(gen), lkl_graph{std::move(copy), {}}};
  });
}

void lkl_generated_destroy(lkl_generated* gen) { delete gen; }

const lkl_graph* lkl_generated_graph(const lkl_generated* gen) {
  return gen ? &gen->view : nullptr;
}

lkl_status lkl_generated_nodes(const lkl_generated* gen, size_t* copy_node, size_t* template_node,
                               size_t* copied_edges) {
  LKL_REQUIRE(gen != nullptr, "generated graph is NULL");
  if (copy_node != nullptr) *copy_node = gen->generated.copy_node.index;
  if (template_node != nullptr) *template_node = gen->generated.template_node.index;
  if (copied_edges != nullptr) *copied_edges = gen->generated.copied_edges.size();
  return LKL_OK;
}

lkl_status lkl_generated_rank_of(const lkl_generated* gen, size_t* ranks, size_t capacity) {
  LKL_REQUIRE(gen != nullptr && ranks != nullptr, "NULL argument");
  LKL_REQUIRE(capacity >= gen->generated.rank_of.size(), "capacity smaller than n");
  std::copy(gen->generated.rank_of.begin(), gen->generated.rank_of.end(), ranks);
  return LKL_OK;
}

lkl_status lkl_generated_pre_copy_in_degrees(const lkl_generated* gen, size_t* degrees,
                                             size_t capacity) {
  LKL_REQUIRE(gen != nullptr && degrees != nullptr, "NULL argument");
  LKL_REQUIRE(capacity >= gen->generated.graph.node_count(), "capacity smaller than n");
  return Guard([&] {
    const auto deg = lkl::pre_copy_in_degrees(gen->generated);
    std::copy(deg.begin(), deg.end(), degrees);
  });
}

lkl_status lkl_copy_node_analysis(const lkl_generated* gen, double threshold,
                                  lkl_copy_analysis* out) {
  LKL_REQUIRE(gen != nullptr && out != nullptr, "NULL argument");
  return Guard([&] {
    const lkl::CopyNodeAnalysis a = lkl::copy_node_analysis(gen->generated, threshold);
    *out = lkl_copy_analysis{a.copy_con, a.template_con, a.epsilon_of_copy, a.copy_is_lkl ? 1 : 0};
  });
}

lkl_status lkl_generated_sidecar_json(const lkl_generated* gen, const lkl_copy_analysis* analysis,
                                      char** out) {
  LKL_REQUIRE(gen != nullptr && out != nullptr, "NULL argument");
  return Guard([&] {
    if (analysis != nullptr) {
      const lkl::CopyNodeAnalysis a = ToCopy(*analysis);
      *out = Dup(lkl::generated_sidecar_json(gen->generated, &a));
    } else {
      *out = Dup(lkl::generated_sidecar_json(gen->generated));
    }
  });
}

lkl_status lkl_in_degree_summary_of(const lkl_graph* g, lkl_in_degree_summary* out) {
  LKL_REQUIRE(g != nullptr && out != nullptr, "NULL argument");
  return Guard([&] {
    const lkl::InDegreeDistribution d = lkl::in_degree_distribution(g->graph);
    *out = lkl_in_degree_summary{d.max_degree, d.mean, d.stddev, d.median, d.tail_fraction};
  });
}

lkl_status lkl_in_degree_histogram_csv(const lkl_graph* g, char** out) {
  LKL_REQUIRE(g != nullptr && out != nullptr, "NULL argument");
  return Guard([&] {
    const lkl::InDegreeDistribution d = lkl::in_degree_distribution(g->graph);
    std::string csv = "in_degree,count\n";
    for (const auto& [degree, count] : d.histogram) {
      csv += std::to_string(degree) + ',' + std::to_string(count) + '\n';
    }
    *out = Dup(csv);
  });
}

}  // extern "C"
