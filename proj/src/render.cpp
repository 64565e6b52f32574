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

#include "lkl/render.hpp"

#include <algorithm>
#include <charconv>

namespace lkl {
namespace {

constexpr const char* kGrey = "#9e9e9e";
constexpr const char* kRed = "#d62728";
constexpr const char* kBlue = "#1f77b4";

std::string Fixed(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
  return std::string(buf, res.ptr);
}

std::string Escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string DisplayLabel(const SlopeEntry& e) {
  return e.label.empty() ? std::to_string(e.node.index) : e.label;
}

const char* ColorOf(Movement m) {
  switch (m) {
    case Movement::kConUp: return kRed;
    case Movement::kPrUp: return kBlue;
    case Movement::kNeutral: break;
  }
  return kGrey;
}

const char* ClassOf(Movement m) {
  switch (m) {
    case Movement::kConUp: return "con_up";
    case Movement::kPrUp: return "pr_up";
    case Movement::kNeutral: break;
  }
  return "neutral";
}

}  // namespace

std::string render_slope_svg(const SlopeGraphSpec& spec, std::optional<std::size_t> top_k) {
  const std::size_t n = spec.entries.size();
  const std::size_t k = std::min(n, top_k.value_or(n));
  constexpr double kRow = 22.0;
  constexpr double kTop = 56.0;
  constexpr double kLeftX = 170.0;
  constexpr double kRightX = 370.0;
  const double height = kTop + kRow * static_cast<double>(k) + 20.0;
  auto y_of = [&](int rank) { return kTop + kRow * static_cast<double>(rank - 1); };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"560\" height=\"" + Fixed(height) +
         "\" viewBox=\"0 0 560 " + Fixed(height) +
         "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + Fixed(kLeftX) +
         "\" y=\"24\" text-anchor=\"end\" font-weight=\"bold\">CON score</text>\n";
  svg += "<text x=\"" + Fixed(kRightX) +
         "\" y=\"24\" font-weight=\"bold\">PageRank (reversed edges)</text>\n";
  svg += "<text x=\"280\" y=\"42\" text-anchor=\"middle\" fill=\"#555555\">movement threshold " +
         std::to_string(spec.movement_threshold) + "</text>\n";

  const auto within = [&](int rank) { return rank >= 1 && static_cast<std::size_t>(rank) <= k; };
  for (std::size_t pos = 0; pos < k; ++pos) {
    const SlopeEntry& e = spec.entries[spec.con_ranking[pos].index];
    const char* color = ColorOf(e.cls);
    std::string label = std::to_string(e.con_rank) + ". " + Escape(DisplayLabel(e));
    if (!within(e.pr_rank)) label += " (PR #" + std::to_string(e.pr_rank) + ")";
    svg += "<text class=\"" + std::string(ClassOf(e.cls)) + "\" x=\"" + Fixed(kLeftX) + "\" y=\"" +
           Fixed(y_of(e.con_rank) + 4.0) + "\" text-anchor=\"end\" fill=\"" + color + "\">" +
           label + "</text>\n";
  }
  for (std::size_t pos = 0; pos < k; ++pos) {
    const SlopeEntry& e = spec.entries[spec.pr_ranking[pos].index];
    const char* color = ColorOf(e.cls);
    std::string label = std::to_string(e.pr_rank) + ". " + Escape(DisplayLabel(e));
    if (!within(e.con_rank)) label += " (CON #" + std::to_string(e.con_rank) + ")";
    svg += "<text class=\"" + std::string(ClassOf(e.cls)) + "\" x=\"" + Fixed(kRightX) + "\" y=\"" +
           Fixed(y_of(e.pr_rank) + 4.0) + "\" fill=\"" + color + "\">" + label + "</text>\n";
  }
  for (std::size_t pos = 0; pos < k; ++pos) {
    const SlopeEntry& e = spec.entries[spec.con_ranking[pos].index];
    if (!within(e.pr_rank)) continue;
    svg += "<line class=\"" + std::string(ClassOf(e.cls)) + "\" x1=\"" + Fixed(kLeftX + 8.0) +
           "\" y1=\"" + Fixed(y_of(e.con_rank)) + "\" x2=\"" + Fixed(kRightX - 8.0) + "\" y2=\"" +
           Fixed(y_of(e.pr_rank)) + "\" stroke=\"" + ColorOf(e.cls) + "\" stroke-width=\"1.5\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

std::string render_histogram_svg(const CentralityReport& report, std::optional<std::size_t> top_k) {
  const std::size_t n = std::min(report.records.size(), top_k.value_or(report.records.size()));
  constexpr double kBar = 9.0;
  constexpr double kSlot = 24.0;
  constexpr double kLeft = 50.0;
  constexpr double kPlot = 200.0;
  constexpr double kTop = 40.0;
  const double width = kLeft + kSlot * static_cast<double>(n) + 20.0;
  const double base = kTop + kPlot;
  const double height = base + 80.0;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + Fixed(width) + "\" height=\"" +
         Fixed(height) + "\" viewBox=\"0 0 " + Fixed(width) + " " + Fixed(height) +
         "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<rect x=\"" + Fixed(kLeft) + "\" y=\"12\" width=\"10\" height=\"10\" fill=\"" + kBlue +
         "\"/><text x=\"" + Fixed(kLeft + 14.0) + "\" y=\"21\">CON (normalized)</text>\n";
  svg += "<rect x=\"" + Fixed(kLeft + 130.0) + "\" y=\"12\" width=\"10\" height=\"10\" fill=\"" +
         kRed + "\"/><text x=\"" + Fixed(kLeft + 144.0) +
         "\" y=\"21\">PageRank (normalized)</text>\n";
  for (int tick = 0; tick <= 4; ++tick) {
    const double v = tick / 4.0;
    const double y = base - kPlot * v;
    svg += "<line x1=\"" + Fixed(kLeft - 4.0) + "\" y1=\"" + Fixed(y) + "\" x2=\"" +
           Fixed(width - 20.0) + "\" y2=\"" + Fixed(y) + "\" stroke=\"#e0e0e0\"/>\n";
    svg += "<text x=\"" + Fixed(kLeft - 6.0) + "\" y=\"" + Fixed(y + 4.0) +
           "\" text-anchor=\"end\">" + Fixed(v) + "</text>\n";
  }
  for (std::size_t i = 0; i < n; ++i) {
    const NodeRecord& r = report.records[i];
    const double x = kLeft + kSlot * static_cast<double>(i) + 3.0;
    const double con_h = kPlot * r.con_norm;
    const double pr_h = kPlot * r.pr_norm;
    svg += "<rect class=\"con\" x=\"" + Fixed(x) + "\" y=\"" + Fixed(base - con_h) + "\" width=\"" +
           Fixed(kBar) + "\" height=\"" + Fixed(con_h) + "\" fill=\"" + kBlue + "\"/>\n";
    svg += "<rect class=\"pr\" x=\"" + Fixed(x + kBar) + "\" y=\"" + Fixed(base - pr_h) +
           "\" width=\"" + Fixed(kBar) + "\" height=\"" + Fixed(pr_h) + "\" fill=\"" + kRed +
           "\"/>\n";
    const std::string label = r.label.empty() ? std::to_string(r.node.index) : r.label;
    const double lx = x + kBar;
    const double ly = base + 10.0;
    svg += "<text x=\"" + Fixed(lx) + "\" y=\"" + Fixed(ly) + "\" transform=\"rotate(60 " +
           Fixed(lx) + " " + Fixed(ly) + ")\">" + Escape(label) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace lkl
