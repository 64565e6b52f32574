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
#include <string>

#include "lkl/leader.hpp"

namespace lkl {

/// Two-column slope graph: CON ranking on the left, reversed-edge
/// PageRank ranking on the right, one line per node. Neutral nodes are
/// grey, CON-favoured nodes red, PageRank-favoured nodes blue. With
/// `top_k`, only nodes ranked within the top k on either side are drawn.
std::string render_slope_svg(const SlopeGraphSpec& spec,
                             std::optional<std::size_t> top_k = std::nullopt);

/// Paired bars of normalized CON (blue) and normalized PageRank (red) per
/// node, nodes ordered by epsilon descending.
std::string render_histogram_svg(const CentralityReport& report,
                                 std::optional<std::size_t> top_k = std::nullopt);

}  // namespace lkl
