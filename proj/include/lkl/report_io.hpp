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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "lkl/leader.hpp"
#include "lkl/ranking_model.hpp"

namespace lkl {

inline constexpr int kReportSchemaVersion = 1;

/// JSON report: parameters, every node record (epsilon order), and one
/// verdict per threshold. `metadata_json` must be a JSON object (or empty)
/// and is embedded verbatim under "metadata". Output is deterministic:
/// keys are sorted and doubles use shortest round-trip form.
std::string report_to_json(const CentralityReport& report, std::span<const double> thresholds,
                           std::string_view metadata_json = {});

/// Rebuilds the report from report_to_json output. Throws kParse on
/// malformed input or an unsupported schema_version.
CentralityReport report_from_json(std::string_view json);

/// Per-node table "rank,node,con,pr,con_norm,pr_norm,epsilon" in epsilon
/// order, truncated to the first `top_k` rows when given.
std::string report_to_csv(const CentralityReport& report,
                          std::optional<std::size_t> top_k = std::nullopt);

/// Sidecar describing a generated graph: parameters, RNG algorithm, copy
/// and template node identities, plus the copy-node analysis when given.
std::string generated_sidecar_json(const GeneratedGraph& generated,
                                   const CopyNodeAnalysis* analysis = nullptr);

std::string_view con_mode_name(ConMode mode);
std::optional<ConMode> parse_con_mode_name(std::string_view name);
std::string_view orientation_name(PageRankOrientation o);
std::optional<PageRankOrientation> parse_orientation_name(std::string_view name);

}  // namespace lkl
