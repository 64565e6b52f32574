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

// lkl: command-line front end over the C API in lkl/lkl.h.
//
//   lkl analyze INPUT    centrality report, verdicts, optional SVGs
//   lkl batch DIR        verdicts for every network in a directory
//   lkl generate         directed ranking model graphs + copy-node analysis
//   lkl render REPORT    SVGs from a saved JSON report

#include <openssl/evp.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lkl/lkl.h"

namespace fs = std::filesystem;

namespace {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitBadConfig = 2,
  kExitParse = 3,
  kExitNoConvergence = 4,
  kExitIo = 5,
};

class CliError : public std::runtime_error {
 public:
  CliError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const noexcept { return code_; }

 private:
  int code_;
};

int ExitFor(lkl_status s) {
  switch (s) {
    case LKL_OK: return kExitOk;
    case LKL_ERR_PARSE: return kExitParse;
    case LKL_ERR_NO_CONVERGENCE: return kExitNoConvergence;
    case LKL_ERR_IO: return kExitIo;
    case LKL_ERR_INVALID_ARGUMENT: return kExitBadConfig;
    default: return kExitInternal;
  }
}

void Check(lkl_status s, const std::string& context) {
  if (s != LKL_OK) throw CliError(ExitFor(s), context + ": " + lkl_last_error());
}

struct GraphDeleter {
  void operator()(lkl_graph* g) const { lkl_graph_destroy(g); }
};
struct ReportDeleter {
  void operator()(lkl_report* r) const { lkl_report_destroy(r); }
};
struct GeneratedDeleter {
  void operator()(lkl_generated* g) const { lkl_generated_destroy(g); }
};
struct StringDeleter {
  void operator()(char* s) const { lkl_string_free(s); }
};

using Graph = std::unique_ptr<lkl_graph, GraphDeleter>;
using Report = std::unique_ptr<lkl_report, ReportDeleter>;
using Generated = std::unique_ptr<lkl_generated, GeneratedDeleter>;
using CString = std::unique_ptr<char, StringDeleter>;

template <typename F>
std::string TakeString(F&& producer, const std::string& context) {
  char* raw = nullptr;
  Check(producer(&raw), context);
  CString owned(raw);
  return std::string(owned.get());
}

void WriteFile(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CliError(kExitIo, "cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw CliError(kExitIo, "error writing '" + path.string() + "'");
}

std::string Sha256Hex(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(kExitIo, "cannot open '" + path.string() + "'");
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
  char buf[1 << 16];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    EVP_DigestUpdate(ctx.get(), buf, static_cast<size_t>(in.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), digest, &len);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

const std::map<std::string, lkl_format> kFormats = {
    {"auto", LKL_FORMAT_AUTO},
    {"dominance-matrix", LKL_FORMAT_DOMINANCE_MATRIX},
    {"signed-edge-list", LKL_FORMAT_SIGNED_EDGE_LIST},
    {"weighted-edge-list", LKL_FORMAT_WEIGHTED_EDGE_LIST},
};

const std::map<std::string, lkl_direction> kDirections = {
    {"column-dominates-row", LKL_DIRECTION_COLUMN_DOMINATES_ROW},
    {"row-dominates-column", LKL_DIRECTION_ROW_DOMINATES_COLUMN},
};

const std::map<std::string, lkl_pr_orientation> kOrientations = {
    {"reversed", LKL_PR_REVERSED},
    {"forward", LKL_PR_FORWARD},
};

const std::map<std::string, lkl_con_mode> kConModes = {
    {"binarized", LKL_CON_BINARIZED},
    {"weighted", LKL_CON_WEIGHTED},
};

std::string FormatName(lkl_format f) {
  for (const auto& [name, value] : kFormats)
    if (value == f) return name;
  return "auto";
}

// Shared analysis flags of analyze and batch.
struct AnalysisConfig {
  lkl_format format = LKL_FORMAT_AUTO;
  lkl_direction direction = LKL_DIRECTION_COLUMN_DOMINATES_ROW;
  lkl_con_mode con_mode = LKL_CON_BINARIZED;
  double damping = 0.85;
  double tol = 1e-10;
  int max_iter = 200;
  bool pr_weighted = false;
  lkl_pr_orientation orientation = LKL_PR_REVERSED;
  std::vector<double> thresholds;
  int movement_threshold = 5;
  std::size_t top_k = 0;  // 0: everything
  std::string out_dir = ".";

  lkl_analysis_options options() const {
    lkl_analysis_options o;
    lkl_analysis_options_init(&o);
    o.con_mode = con_mode;
    o.damping = damping;
    o.tol = tol;
    o.max_iter = max_iter;
    o.pr_weighted = pr_weighted ? 1 : 0;
    o.pr_orientation = orientation;
    return o;
  }

  std::vector<double> effective_thresholds() const {
    return thresholds.empty() ? std::vector<double>{0.5} : thresholds;
  }
};

void AddAnalysisFlags(CLI::App* cmd, AnalysisConfig& cfg) {
  cmd->add_option("--format", cfg.format, "input format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  cmd->add_option("--direction", cfg.direction, "dominance-matrix arrow convention")
      ->transform(CLI::CheckedTransformer(kDirections, CLI::ignore_case));
  cmd->add_option("--con-mode", cfg.con_mode, "CON scoring mode")
      ->transform(CLI::CheckedTransformer(kConModes, CLI::ignore_case));
  cmd->add_option("--damping", cfg.damping, "PageRank damping factor")->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--tol", cfg.tol, "PageRank L1 convergence tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-iter", cfg.max_iter, "PageRank iteration cap")->check(CLI::PositiveNumber);
  cmd->add_flag("--pr-weighted", cfg.pr_weighted, "weight-proportional PageRank transitions");
  cmd->add_option("--pr-orientation", cfg.orientation,
                  "network the PageRank walk runs on (reversed: reversed-edge network)")
      ->transform(CLI::CheckedTransformer(kOrientations, CLI::ignore_case));
  cmd->add_option("--threshold", cfg.thresholds, "low-key leader threshold (repeatable)")
      ->check(CLI::Range(0.0, 1.0))
      ->take_all()
      ->allow_extra_args(false);
  cmd->add_option("--movement-threshold", cfg.movement_threshold,
                  "slope graph rank difference that counts as movement")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--top-k", cfg.top_k, "rows kept in display files (0: all)");
  cmd->add_option("--out-dir", cfg.out_dir, "output directory");
}

void ValidateAnalysis(const AnalysisConfig& cfg) {
  if (!(cfg.damping > 0.0 && cfg.damping < 1.0)) {
    throw CliError(kExitBadConfig, "--damping must lie strictly inside (0, 1)");
  }
}

std::string AnalysisMetadata(const std::string& command, const std::string& input,
                             const std::string& sha256, lkl_format detected,
                             const AnalysisConfig& cfg) {
  nlohmann::json meta = {
      {"tool", "lkl"},
      {"version", lkl_version()},
      {"command", command},
      {"input",
       {{"path", input},
        {"sha256", sha256},
        {"format", FormatName(detected)},
        {"direction", cfg.direction == LKL_DIRECTION_COLUMN_DOMINATES_ROW
                          ? "column-dominates-row"
                          : "row-dominates-column"}}},
      {"thresholds", cfg.effective_thresholds()},
      {"movement_threshold", cfg.movement_threshold},
      {"top_k", cfg.top_k},
  };
  return meta.dump();
}

void WarnAll(const lkl_graph* g, const std::string& source) {
  for (size_t i = 0; i < lkl_graph_warning_count(g); ++i) {
    spdlog::warn("{}: {}", source, lkl_graph_warning(g, i));
  }
}

std::string LeaderLabels(const lkl_report* report, double threshold, lkl_verdict* verdict) {
  std::vector<size_t> leaders(lkl_report_size(report));
  Check(lkl_detect(report, threshold, verdict, leaders.data(), leaders.size()), "detect");
  leaders.resize(verdict->leader_count);
  std::string joined;
  for (size_t pos = 0; pos < lkl_report_size(report); ++pos) {
    lkl_node_record rec;
    Check(lkl_report_record(report, pos, &rec), "record");
    if (std::find(leaders.begin(), leaders.end(), rec.index) == leaders.end()) continue;
    if (!joined.empty()) joined += ';';
    joined += rec.label;
  }
  return joined;
}

int RunAnalyze(const std::string& input, const AnalysisConfig& cfg, bool svg) {
  ValidateAnalysis(cfg);
  lkl_graph* raw = nullptr;
  lkl_format detected = LKL_FORMAT_AUTO;
  Check(lkl_graph_load(input.c_str(), cfg.format, cfg.direction, &raw, &detected), input);
  Graph graph(raw);
  WarnAll(graph.get(), input);
  spdlog::info("{}: {} nodes, {} edges ({})", input, lkl_graph_node_count(graph.get()),
               lkl_graph_edge_count(graph.get()), FormatName(detected));

  const lkl_analysis_options opts = cfg.options();
  lkl_report* raw_report = nullptr;
  Check(lkl_analyze(graph.get(), &opts, &raw_report), "analysis of " + input);
  Report report(raw_report);

  fs::create_directories(cfg.out_dir);
  const std::string stem = fs::path(input).stem().string();
  const fs::path out(cfg.out_dir);
  const auto thresholds = cfg.effective_thresholds();
  const std::string meta = AnalysisMetadata("analyze", input, Sha256Hex(input), detected, cfg);

  WriteFile(out / (stem + ".report.json"), TakeString(
                                               [&](char** s) {
                                                 return lkl_report_to_json(
                                                     report.get(), thresholds.data(),
                                                     thresholds.size(), meta.c_str(), s);
                                               },
                                               "json report"));
  WriteFile(out / (stem + ".nodes.csv"),
            TakeString([&](char** s) { return lkl_report_to_csv(report.get(), cfg.top_k, s); },
                       "csv table"));
  if (svg) {
    WriteFile(out / (stem + ".slope.svg"),
              TakeString(
                  [&](char** s) {
                    return lkl_report_slope_svg(report.get(), cfg.movement_threshold, cfg.top_k, s);
                  },
                  "slope graph"));
    WriteFile(
        out / (stem + ".histogram.svg"),
        TakeString([&](char** s) { return lkl_report_histogram_svg(report.get(), cfg.top_k, s); },
                   "histogram"));
  }

  for (double t : thresholds) {
    lkl_verdict v;
    const std::string leaders = LeaderLabels(report.get(), t, &v);
    std::printf("threshold %g: %s; epsilon_max %.4f; leader(s) %s\n", t,
                v.exists ? "low-key leader found" : "no low-key leader", v.epsilon_max,
                leaders.c_str());
  }
  return kExitOk;
}

struct BatchItem {
  fs::path path;
  Report report;
  size_t nodes = 0;
  size_t edges = 0;
  std::string error;
};

int RunBatch(const std::string& dir, const AnalysisConfig& cfg, unsigned jobs) {
  ValidateAnalysis(cfg);
  if (!fs::is_directory(dir)) throw CliError(kExitIo, "'" + dir + "' is not a directory");
  std::vector<BatchItem> items;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (!entry.is_regular_file() || name.starts_with('.')) continue;
    items.push_back(BatchItem{entry.path(), nullptr, 0, 0, {}});
  }
  if (items.empty()) throw CliError(kExitBadConfig, "directory '" + dir + "' has no files");
  std::sort(items.begin(), items.end(), [](const BatchItem& a, const BatchItem& b) {
    return a.path.filename() < b.path.filename();
  });

  const lkl_analysis_options opts = cfg.options();
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < items.size(); i = next++) {
      BatchItem& item = items[i];
      lkl_graph* g = nullptr;
      if (lkl_graph_load(item.path.c_str(), cfg.format, cfg.direction, &g, nullptr) != LKL_OK) {
        item.error = lkl_last_error();
        continue;
      }
      Graph graph(g);
      item.nodes = lkl_graph_node_count(g);
      item.edges = lkl_graph_edge_count(g);
      lkl_report* r = nullptr;
      if (lkl_analyze(g, &opts, &r) != LKL_OK) {
        item.error = lkl_last_error();
        continue;
      }
      item.report.reset(r);
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(items.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  const auto thresholds = cfg.effective_thresholds();
  std::vector<const lkl_report*> reports;
  std::string verdicts = "network,nodes,edges,epsilon_max,leaders";
  for (double t : thresholds) verdicts += ",lkl_at_" + nlohmann::json(t).dump();
  verdicts += '\n';
  std::string skipped = "network,error\n";
  size_t skip_count = 0;
  for (const BatchItem& item : items) {
    const std::string name = item.path.filename().string();
    if (!item.report) {
      spdlog::warn("skipped {}: {}", name, item.error);
      skipped += nlohmann::json(name).dump() + ',' + nlohmann::json(item.error).dump() + '\n';
      ++skip_count;
      continue;
    }
    reports.push_back(item.report.get());
    lkl_verdict v;
    const std::string leaders = LeaderLabels(item.report.get(), thresholds.front(), &v);
    verdicts += nlohmann::json(name).dump() + ',' + std::to_string(item.nodes) + ',' +
                std::to_string(item.edges) + ',' + nlohmann::json(v.epsilon_max).dump() + ',' +
                nlohmann::json(leaders).dump();
    for (double t : thresholds) {
      lkl_verdict vt;
      Check(lkl_detect(item.report.get(), t, &vt, nullptr, 0), "detect");
      verdicts += vt.exists ? ",1" : ",0";
    }
    verdicts += '\n';
  }

  fs::create_directories(cfg.out_dir);
  const fs::path out(cfg.out_dir);
  WriteFile(out / "batch_verdicts.csv", verdicts);
  WriteFile(out / "batch_skipped.csv", skipped);
  if (reports.empty()) throw CliError(kExitParse, "no network in '" + dir + "' could be analyzed");

  std::string summary = "threshold,count_with_lkl,total,fraction,skipped\n";
  for (double t : thresholds) {
    lkl_batch_result res;
    Check(lkl_batch(reports.data(), reports.size(), t, &res), "batch");
    summary += nlohmann::json(t).dump() + ',' + std::to_string(res.count_with_lkl) + ',' +
               std::to_string(res.total) + ',' + nlohmann::json(res.fraction).dump() + ',' +
               std::to_string(skip_count) + '\n';
    std::printf("threshold %g: %zu of %zu networks have a low-key leader (%.2f%%)\n", t,
                res.count_with_lkl, res.total, 100.0 * res.fraction);
  }
  WriteFile(out / "batch_summary.csv", summary);
  if (skip_count > 0) std::printf("%zu file(s) skipped, see batch_skipped.csv\n", skip_count);
  return kExitOk;
}

int RunGenerate(const lkl_model_params& base, unsigned runs, double threshold,
                const std::string& out_dir) {
  if (runs < 1) throw CliError(kExitBadConfig, "--runs must be >= 1");
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw CliError(kExitBadConfig, "--threshold must lie in [0, 1]");
  }
  fs::create_directories(out_dir);
  const fs::path out(out_dir);
  std::string summary =
      "run,seed,copy_node,template_node,copied_edges,copy_con,template_con,epsilon_of_copy,"
      "copy_is_lkl\n";
  unsigned lkl_runs = 0;
  for (unsigned run = 0; run < runs; ++run) {
    lkl_model_params params = base;
    params.seed = base.seed + run;
    lkl_generated* raw = nullptr;
    Check(lkl_generate(&params, &raw), "generate");
    Generated gen(raw);
    const lkl_graph* g = lkl_generated_graph(gen.get());

    size_t copy = 0, tmpl = 0, copied = 0;
    Check(lkl_generated_nodes(gen.get(), &copy, &tmpl, &copied), "generated nodes");
    lkl_copy_analysis analysis;
    Check(lkl_copy_node_analysis(gen.get(), threshold, &analysis), "copy-node analysis");
    if (analysis.copy_is_lkl) ++lkl_runs;

    char name[32];
    std::snprintf(name, sizeof name, "run_%04u", run);
    WriteFile(out / (std::string(name) + ".edges.csv"),
              TakeString([&](char** s) { return lkl_graph_serialize(g, s); }, "serialize"));
    WriteFile(
        out / (std::string(name) + ".json"),
        TakeString([&](char** s) { return lkl_generated_sidecar_json(gen.get(), &analysis, s); },
                   "sidecar"));
    WriteFile(out / (std::string(name) + ".indegree.csv"),
              TakeString([&](char** s) { return lkl_in_degree_histogram_csv(g, s); }, "histogram"));

    const char* copy_label = nullptr;
    const char* tmpl_label = nullptr;
    Check(lkl_graph_node_label(g, copy, &copy_label), "label");
    Check(lkl_graph_node_label(g, tmpl, &tmpl_label), "label");
    summary += std::to_string(run) + ',' + std::to_string(params.seed) + ',' + copy_label + ',' +
               tmpl_label + ',' + std::to_string(copied) + ',' +
               nlohmann::json(analysis.copy_con).dump() + ',' +
               nlohmann::json(analysis.template_con).dump() + ',' +
               nlohmann::json(analysis.epsilon_of_copy).dump() + ',' +
               (analysis.copy_is_lkl ? "1" : "0") + '\n';
    spdlog::info("{} seed {}: copy node {} epsilon {:.4f}{}", name, params.seed, copy_label,
                 analysis.epsilon_of_copy, analysis.copy_is_lkl ? " (low-key leader)" : "");
    if (runs == 1) {
      std::printf("copy node %s (template %s): epsilon %.4f, %s\n", copy_label, tmpl_label,
                  analysis.epsilon_of_copy,
                  analysis.copy_is_lkl ? "low-key leader" : "not the low-key leader");
    }
  }
  WriteFile(out / "generate_summary.csv", summary);
  const double fraction = static_cast<double>(lkl_runs) / runs;
  WriteFile(out / "generate_frequency.csv", "runs,copy_is_lkl,fraction\n" + std::to_string(runs) +
                                                ',' + std::to_string(lkl_runs) + ',' +
                                                nlohmann::json(fraction).dump() + '\n');
  std::printf("copy node was the low-key leader in %u of %u runs (%.2f%%)\n", lkl_runs, runs,
              100.0 * fraction);
  return kExitOk;
}

int RunRender(const std::string& report_path, int movement_threshold, std::size_t top_k,
              const std::string& out_dir) {
  std::ifstream in(report_path, std::ios::binary);
  if (!in) throw CliError(kExitIo, "cannot open '" + report_path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  lkl_report* raw = nullptr;
  Check(lkl_report_from_json(text.data(), text.size(), &raw), report_path);
  Report report(raw);

  fs::create_directories(out_dir);
  std::string stem = fs::path(report_path).stem().string();
  if (stem.ends_with(".report")) stem.resize(stem.size() - 7);
  const fs::path out(out_dir);
  WriteFile(out / (stem + ".slope.svg"), TakeString(
                                             [&](char** s) {
                                               return lkl_report_slope_svg(
                                                   report.get(), movement_threshold, top_k, s);
                                             },
                                             "slope graph"));
  WriteFile(out / (stem + ".histogram.svg"),
            TakeString([&](char** s) { return lkl_report_histogram_svg(report.get(), top_k, s); },
                       "histogram"));
  return kExitOk;
}

void ConfigureLogging() {
  spdlog::set_pattern("[%l] %v");
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("LKL_LOG")) {
    const auto level = spdlog::level::from_str(env);
    // from_str maps unknown names to "off"; only honour it when asked for.
    if (level != spdlog::level::off || std::string(env) == "off") spdlog::set_level(level);
  }
}

}  // namespace

int main(int argc, char** argv) {
  ConfigureLogging();
  CLI::App app{"Low-key leader detection in adversarial directed networks"};
  app.set_config("--config", "", "TOML-style config file; command-line flags take precedence");
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lkl_version()));

  AnalysisConfig analyze_cfg;
  std::string analyze_input;
  bool analyze_svg = false;
  CLI::App* analyze = app.add_subcommand("analyze", "analyze one network");
  analyze->add_option("input", analyze_input, "network file")->required();
  AddAnalysisFlags(analyze, analyze_cfg);
  analyze->add_flag("--svg", analyze_svg, "also write slope graph and histogram SVGs");

  AnalysisConfig batch_cfg;
  std::string batch_dir;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  CLI::App* batch = app.add_subcommand("batch", "analyze every network file in a directory");
  batch->add_option("dir", batch_dir, "directory of network files")->required();
  AddAnalysisFlags(batch, batch_cfg);
  batch->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  lkl_model_params model;
  lkl_model_params_init(&model);
  unsigned runs = 1;
  double gen_threshold = 0.5;
  std::string gen_out = ".";
  CLI::App* generate = app.add_subcommand("generate", "sample directed ranking model graphs");
  generate->add_option("--n", model.n, "number of nodes")->check(CLI::Range(2, 1 << 20));
  generate->add_option("--alpha", model.alpha, "attachment strength in (0, 1)");
  generate->add_option("--seed", model.seed, "seed of the first run; run i uses seed + i");
  generate->add_option("--runs", runs, "number of graphs")->check(CLI::PositiveNumber);
  generate->add_option("--threshold", gen_threshold, "low-key leader threshold")
      ->check(CLI::Range(0.0, 1.0));
  generate->add_option("--out-dir", gen_out, "output directory");

  std::string render_input;
  int render_movement = 5;
  std::size_t render_top_k = 0;
  std::string render_out = ".";
  CLI::App* render = app.add_subcommand("render", "render SVGs from a JSON report");
  render->add_option("report", render_input, "report written by 'lkl analyze'")->required();
  render->add_option("--movement-threshold", render_movement, "slope graph movement threshold")
      ->check(CLI::PositiveNumber);
  render->add_option("--top-k", render_top_k, "nodes shown (0: all)");
  render->add_option("--out-dir", render_out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadConfig;
  }

  try {
    if (analyze->parsed()) return RunAnalyze(analyze_input, analyze_cfg, analyze_svg);
    if (batch->parsed()) return RunBatch(batch_dir, batch_cfg, jobs);
    if (generate->parsed()) return RunGenerate(model, runs, gen_threshold, gen_out);
    if (render->parsed()) return RunRender(render_input, render_movement, render_top_k, render_out);
  } catch (const CliError& e) {
    spdlog::error("{}", e.what());
    return e.code();
  } catch (const fs::filesystem_error& e) {
    spdlog::error("{}", e.what());
    return kExitIo;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kExitInternal;
  }
  return kExitBadConfig;
}
