/*
 * Copyright 2026 The lkl Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the low-key leader library.
 *
 * Every handle is opaque and owned by the caller; release it with the
 * matching *_destroy function. Strings returned through `char** out`
 * parameters are heap-allocated and must be released with
 * lkl_string_free. Strings returned as `const char*` are borrowed from the
 * handle and live as long as it does.
 *
 * Functions returning lkl_status set a thread-local message readable via
 * lkl_last_error() on failure. All functions are safe to call concurrently
 * on distinct handles, and on the same handle when every call is read-only.
 */
#ifndef LKL_LKL_H_
#define LKL_LKL_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(LKL_BUILDING_LIBRARY)
#define LKL_API __declspec(dllexport)
#else
#define LKL_API __declspec(dllimport)
#endif
#else
#define LKL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lkl_status {
  LKL_OK = 0,
  LKL_ERR_INVALID_ARGUMENT = 1,
  LKL_ERR_SELF_LOOP = 2,
  LKL_ERR_NONPOSITIVE_WEIGHT = 3,
  LKL_ERR_UNKNOWN_NODE = 4,
  LKL_ERR_PARSE = 5,
  LKL_ERR_NO_CONVERGENCE = 6,
  LKL_ERR_IO = 7,
  LKL_ERR_INTERNAL = 8
} lkl_status;

typedef enum lkl_format {
  LKL_FORMAT_AUTO = 0,
  LKL_FORMAT_DOMINANCE_MATRIX = 1,
  LKL_FORMAT_SIGNED_EDGE_LIST = 2,
  LKL_FORMAT_WEIGHTED_EDGE_LIST = 3
} lkl_format;

typedef enum lkl_direction {
  LKL_DIRECTION_COLUMN_DOMINATES_ROW = 0,
  LKL_DIRECTION_ROW_DOMINATES_COLUMN = 1
} lkl_direction;

typedef enum lkl_con_mode { LKL_CON_BINARIZED = 0, LKL_CON_WEIGHTED = 1 } lkl_con_mode;

typedef enum lkl_movement {
  LKL_MOVEMENT_NEUTRAL = 0,
  LKL_MOVEMENT_CON_UP = 1,
  LKL_MOVEMENT_PR_UP = 2
} lkl_movement;

typedef struct lkl_graph lkl_graph;
typedef struct lkl_report lkl_report;
typedef struct lkl_generated lkl_generated;

LKL_API const char* lkl_version(void);
LKL_API const char* lkl_last_error(void);
LKL_API const char* lkl_status_name(lkl_status status);
LKL_API void lkl_string_free(char* s);

/* ---- graphs ------------------------------------------------------------ */

LKL_API lkl_status lkl_graph_create(lkl_graph** out);
LKL_API void lkl_graph_destroy(lkl_graph* g);

/* Inserts `label` if unseen; writes its index either way. */
LKL_API lkl_status lkl_graph_add_node(lkl_graph* g, const char* label, size_t* index_out);
/* Accumulates weight onto (source, target), creating nodes as needed. */
LKL_API lkl_status lkl_graph_add_edge(lkl_graph* g, const char* source, const char* target,
                                      double weight);
LKL_API lkl_status lkl_graph_add_edge_by_index(lkl_graph* g, size_t source, size_t target,
                                               double weight);

LKL_API size_t lkl_graph_node_count(const lkl_graph* g);
LKL_API size_t lkl_graph_edge_count(const lkl_graph* g);
LKL_API double lkl_graph_total_weight(const lkl_graph* g);
LKL_API lkl_status lkl_graph_node_label(const lkl_graph* g, size_t index, const char** label);
LKL_API lkl_status lkl_graph_find_node(const lkl_graph* g, const char* label, size_t* index_out);
LKL_API lkl_status lkl_graph_weight(const lkl_graph* g, size_t source, size_t target,
                                    double* weight);
LKL_API lkl_status lkl_graph_out_degree(const lkl_graph* g, size_t node, size_t* degree);
LKL_API lkl_status lkl_graph_in_degree(const lkl_graph* g, size_t node, size_t* degree);
LKL_API lkl_status lkl_graph_reverse(const lkl_graph* g, lkl_graph** out);

/* Parses text in the given format (LKL_FORMAT_AUTO sniffs the content). */
LKL_API lkl_status lkl_graph_parse(const char* text, size_t length, lkl_format format,
                                   lkl_direction direction, lkl_graph** out);
/* Reads and parses a file. `detected` (optional) receives the format used. */
LKL_API lkl_status lkl_graph_load(const char* path, lkl_format format, lkl_direction direction,
                                  lkl_graph** out, lkl_format* detected);
/* Non-fatal parser diagnostics attached to a parsed graph. */
LKL_API size_t lkl_graph_warning_count(const lkl_graph* g);
LKL_API const char* lkl_graph_warning(const lkl_graph* g, size_t i);
/* Canonical weighted edge-list CSV. */
LKL_API lkl_status lkl_graph_serialize(const lkl_graph* g, char** out);

/* ---- analysis ---------------------------------------------------------- */

typedef enum lkl_pr_orientation {
  LKL_PR_REVERSED = 0, /* PageRank of the reversed-edge network */
  LKL_PR_FORWARD = 1   /* standard PageRank of the network as given */
} lkl_pr_orientation;

typedef struct lkl_analysis_options {
  lkl_con_mode con_mode;             /* LKL_CON_BINARIZED */
  double damping;                    /* 0.85 */
  double tol;                        /* 1e-10, L1 */
  int max_iter;                      /* 200 */
  int pr_weighted;                   /* 0: uniform over distinct neighbors */
  lkl_pr_orientation pr_orientation; /* LKL_PR_REVERSED */
} lkl_analysis_options;

LKL_API void lkl_analysis_options_init(lkl_analysis_options* opts);

LKL_API lkl_status lkl_analyze(const lkl_graph* g, const lkl_analysis_options* opts,
                               lkl_report** out);
LKL_API void lkl_report_destroy(lkl_report* r);

typedef struct lkl_node_record {
  size_t index;
  const char* label; /* borrowed from the report */
  double con;
  double pr;
  double con_norm;
  double pr_norm;
  double epsilon;
} lkl_node_record;

LKL_API size_t lkl_report_size(const lkl_report* r);
/* Records are in epsilon order (descending, ties by node index). */
LKL_API lkl_status lkl_report_record(const lkl_report* r, size_t position, lkl_node_record* out);
LKL_API lkl_status lkl_report_pagerank_info(const lkl_report* r, int* iterations, double* residual);
LKL_API lkl_status lkl_report_degenerate(const lkl_report* r, int* con_degenerate,
                                         int* pr_degenerate);

typedef struct lkl_verdict {
  int exists;
  double epsilon_max;
  double threshold;
  size_t leader_count;
} lkl_verdict;

/* Writes up to `capacity` leader node indices to `leaders` (may be NULL). */
LKL_API lkl_status lkl_detect(const lkl_report* r, double threshold, lkl_verdict* out,
                              size_t* leaders, size_t capacity);

LKL_API lkl_status lkl_slope_entry(const lkl_report* r, int movement_threshold, size_t node_index,
                                   int* con_rank, int* pr_rank, lkl_movement* movement);

typedef struct lkl_batch_result {
  size_t count_with_lkl;
  size_t total;
  double fraction;
} lkl_batch_result;

LKL_API lkl_status lkl_batch(const lkl_report* const* reports, size_t count, double threshold,
                             lkl_batch_result* out);

/* Output formats. top_k == 0 means no truncation. */
LKL_API lkl_status lkl_report_to_json(const lkl_report* r, const double* thresholds,
                                      size_t threshold_count, const char* metadata_json,
                                      char** out);
LKL_API lkl_status lkl_report_from_json(const char* json, size_t length, lkl_report** out);
LKL_API lkl_status lkl_report_to_csv(const lkl_report* r, size_t top_k, char** out);
LKL_API lkl_status lkl_report_slope_svg(const lkl_report* r, int movement_threshold, size_t top_k,
                                        char** out);
LKL_API lkl_status lkl_report_histogram_svg(const lkl_report* r, size_t top_k, char** out);

/* ---- directed ranking model ------------------------------------------- */

typedef struct lkl_model_params {
  size_t n;      /* 200 */
  double alpha;  /* 0.5 */
  uint64_t seed; /* 0 */
} lkl_model_params;

LKL_API void lkl_model_params_init(lkl_model_params* params);
LKL_API lkl_status lkl_generate(const lkl_model_params* params, lkl_generated** out);
LKL_API void lkl_generated_destroy(lkl_generated* gen);
/* Borrowed; valid while `gen` lives. */
LKL_API const lkl_graph* lkl_generated_graph(const lkl_generated* gen);
LKL_API lkl_status lkl_generated_nodes(const lkl_generated* gen, size_t* copy_node,
                                       size_t* template_node, size_t* copied_edges);
/* rank_of for the n pre-reordering vertices; capacity must be >= n. */
LKL_API lkl_status lkl_generated_rank_of(const lkl_generated* gen, size_t* ranks, size_t capacity);
/* In-degrees before the copy step; capacity must be >= n. */
LKL_API lkl_status lkl_generated_pre_copy_in_degrees(const lkl_generated* gen, size_t* degrees,
                                                     size_t capacity);

typedef struct lkl_copy_analysis {
  double copy_con;
  double template_con;
  double epsilon_of_copy;
  int copy_is_lkl;
} lkl_copy_analysis;

LKL_API lkl_status lkl_copy_node_analysis(const lkl_generated* gen, double threshold,
                                          lkl_copy_analysis* out);
/* Sidecar JSON with parameters and copy/template identities; `analysis`
 * may be NULL. */
LKL_API lkl_status lkl_generated_sidecar_json(const lkl_generated* gen,
                                              const lkl_copy_analysis* analysis, char** out);

typedef struct lkl_in_degree_summary {
  size_t max_degree;
  double mean;
  double stddev;
  double median;
  double tail_fraction; /* share of nodes above mean + 2 stddev */
} lkl_in_degree_summary;

LKL_API lkl_status lkl_in_degree_summary_of(const lkl_graph* g, lkl_in_degree_summary* out);
/* "in_degree,count" rows in ascending degree order. */
LKL_API lkl_status lkl_in_degree_histogram_csv(const lkl_graph* g, char** out);

#ifdef __cplusplus
}
#endif

#endif /* LKL_LKL_H_ */
