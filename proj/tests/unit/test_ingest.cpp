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

#include "doctest.h"

#include <filesystem>
#include <random>

#include "lkl/error.hpp"
#include "lkl/ingest.hpp"
#include "oracles.hpp"

using lkl::Direction;
using lkl::Format;
using lkl::MultiDigraph;
using lkl::NodeId;

namespace {

const std::filesystem::path kData = LKL_TEST_DATA_DIR;

double W(const MultiDigraph& g, const char* u, const char* v) {
  return g.weight(g.node(u), g.node(v));
}

std::pair<std::size_t, std::size_t> ErrorAt(auto&& f) {
  try {
    f();
  } catch (const lkl::ParseError& e) {
    return {e.line(), e.column()};
  }
  FAIL("expected ParseError");
  return {0, 0};
}

}  // namespace

TEST_CASE("dominance matrix: column dominates row") {
  const auto r = lkl::parse_dominance_matrix(",a,b\na,0,3\nb,0,0\n");
  CHECK(r.graph.node_count() == 2);
  CHECK(r.graph.edge_count() == 1);
  CHECK(W(r.graph, "b", "a") == 3.0);

  const auto flipped =
      lkl::parse_dominance_matrix(",a,b\na,0,3\nb,0,0\n", Direction::kRowDominatesColumn);
  CHECK(W(flipped.graph, "a", "b") == 3.0);

  const auto zero = lkl::parse_dominance_matrix(",a,b\na,0,0\nb,0,0\n");
  CHECK(zero.graph.node_count() == 2);
  CHECK(zero.graph.edge_count() == 0);
}

TEST_CASE("dominance matrix: diagonal entries are ignored with a warning") {
  const auto r = lkl::parse_dominance_matrix("a,b\na,4,1\nb,0,NA\n");
  CHECK(r.graph.edge_count() == 1);
  CHECK(W(r.graph, "b", "a") == 1.0);
  REQUIRE(r.warnings.size() == 1);
  CHECK(r.warnings[0].find("diagonal") != std::string::npos);
}

TEST_CASE("dominance matrix: errors carry locations") {
  CHECK(ErrorAt([] { lkl::parse_dominance_matrix(",a,b\na,0,1\n"); }) ==
        std::pair<std::size_t, std::size_t>{1, 0});
  CHECK(ErrorAt([] { lkl::parse_dominance_matrix(",a,b\na,0,1\nb,0\n"); }) ==
        std::pair<std::size_t, std::size_t>{3, 0});
  CHECK(ErrorAt([] { lkl::parse_dominance_matrix(",a,b\na,0,x\nb,0,0\n"); }) ==
        std::pair<std::size_t, std::size_t>{2, 3});
  CHECK(ErrorAt([] { lkl::parse_dominance_matrix(",a,a\na,0,1\na,0,0\n"); }) ==
        std::pair<std::size_t, std::size_t>{1, 3});
  CHECK(ErrorAt([] { lkl::parse_dominance_matrix(",a,b\na,0,1\nz,0,0\n"); }) ==
        std::pair<std::size_t, std::size_t>{3, 1});
  CHECK(ErrorAt([] { lkl::parse_dominance_matrix(",a,b\na,0,-1\nb,0,0\n"); }) ==
        std::pair<std::size_t, std::size_t>{2, 3});
  CHECK(ErrorAt([] { lkl::parse_dominance_matrix(",a,b\na,0,1\na,0,0\n"); }) ==
        std::pair<std::size_t, std::size_t>{3, 1});
}

TEST_CASE("dominance fixtures conserve total weight") {
  for (const char* name : {"dominance_small.csv", "dominance_tab.tsv"}) {
    const std::string text = lkl::read_file(kData / name);
    const auto r = lkl::parse_dominance_matrix(text);
    const double expected = lkl::testing::RawMatrixOffDiagonalSum(text);
    CHECK(r.graph.total_weight() == expected);
    CHECK(lkl::detect_format(kData / name, text) == Format::kDominanceMatrix);
  }
  const auto tab = lkl::parse_dominance_matrix(lkl::read_file(kData / "dominance_tab.tsv"));
  CHECK(tab.graph.edge_count() == 3);  // the 7 sits on the diagonal
  CHECK(tab.warnings.size() == 1);
}

TEST_CASE("signed edge list keeps only negative ratings") {
  const auto r = lkl::parse_signed_edge_list("x,y,-2,123\nx,z,7,124\n");
  CHECK(r.graph.node_count() == 2);
  CHECK(W(r.graph, "x", "y") == 2.0);
  CHECK_FALSE(r.graph.find("z"));

  const auto fixture = lkl::parse_signed_edge_list(lkl::read_file(kData / "signed_small.csv"));
  // |rating| summed over negative rows: 2 + 10 + 1 + 3 + 1 + 5.
  CHECK(fixture.graph.total_weight() == 22.0);
  CHECK(W(fixture.graph, "6", "5") == 7.0);
  CHECK(fixture.graph.edge_count() == 5);
  CHECK(fixture.graph.node_count() == 9);

  const auto with_header = lkl::parse_signed_edge_list("SOURCE,TARGET,RATING,TIME\na,b,-1,0\n");
  CHECK(with_header.graph.edge_count() == 1);

  CHECK(ErrorAt([] { lkl::parse_signed_edge_list("a,b,-1,0\na,b,-11,0\n"); }) ==
        std::pair<std::size_t, std::size_t>{2, 3});
  CHECK(ErrorAt([] { lkl::parse_signed_edge_list("a,b\n"); }) ==
        std::pair<std::size_t, std::size_t>{1, 0});
  CHECK(ErrorAt([] { lkl::parse_signed_edge_list("a,b,-1\nc,d,x\n"); }) ==
        std::pair<std::size_t, std::size_t>{2, 3});
  CHECK(ErrorAt([] { lkl::parse_signed_edge_list("a,b,-1.5\n"); }) ==
        std::pair<std::size_t, std::size_t>{1, 3});
}

TEST_CASE("weighted edge list") {
  const auto r = lkl::parse_weighted_edge_list("CAN,USA,5.0\nCAN,USA,2.0\n");
  CHECK(W(r.graph, "CAN", "USA") == 7.0);

  const auto fixture = lkl::parse_weighted_edge_list(lkl::read_file(kData / "trade_small.csv"));
  CHECK(fixture.graph.labels()[0] == "CAN");
  CHECK(fixture.graph.labels()[1] == "USA");
  CHECK(W(fixture.graph, "CAN", "USA") == 7.0);
  CHECK(fixture.graph.total_weight() == 15.75);

  CHECK(ErrorAt([] { lkl::parse_weighted_edge_list("a,b,1\na,c,0\n"); }) ==
        std::pair<std::size_t, std::size_t>{2, 3});
  CHECK(ErrorAt([] { lkl::parse_weighted_edge_list("a,b,1\na,c\n"); }) ==
        std::pair<std::size_t, std::size_t>{2, 0});
  CHECK(ErrorAt([] { lkl::parse_weighted_edge_list("a,b,1\na,c,heavy\n"); }) ==
        std::pair<std::size_t, std::size_t>{2, 3});

  const auto loops = lkl::parse_weighted_edge_list("a,a,1\na,b,1\n");
  CHECK(loops.graph.edge_count() == 1);
  CHECK(loops.warnings.size() == 1);
}

TEST_CASE("tabs, CRLF, BOM, quotes and comments") {
  const auto r =
      lkl::parse_weighted_edge_list("\xEF\xBB\xBF# comment\r\n\r\n\"a, inc\"\t\"b\"\"q\"\t2\r\n");
  CHECK(r.graph.labels()[0] == "a, inc");
  CHECK(r.graph.labels()[1] == "b\"q");
  CHECK(r.graph.total_weight() == 2.0);
  CHECK(ErrorAt([] { lkl::parse_weighted_edge_list("\"a,b,1\n"); }).first == 1);
}

TEST_CASE("serialize format") {
  CHECK(lkl::serialize(MultiDigraph{}) == "source,target,weight\n");

  MultiDigraph g;
  g.add_edge("b", "a", 3.0);
  g.add_edge("a", "c", 0.1);
  CHECK(lkl::serialize(g) == "source,target,weight\n#node,b\n#node,a\n#node,c\nb,a,3\na,c,0.1\n");

  const auto single = lkl::parse_weighted_edge_list("a,b,1\n");
  CHECK(lkl::serialize(single.graph) == "source,target,weight\n#node,a\n#node,b\na,b,1\n");
}

TEST_CASE("property: parse(serialize(g)) == g") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 100; ++trial) {
    MultiDigraph g = lkl::testing::RandomGraph(rng, rng() % 10, 0.3, 1, true);
    if (trial % 3 == 0) g.add_node("isolated #" + std::to_string(trial));
    if (trial % 5 == 0 && g.node_count() >= 2) g.add_edge("q\"uote", "com,ma", 1e-7);
    const std::string text = lkl::serialize(g);
    const auto back = lkl::parse_weighted_edge_list(text);
    CHECK(back.graph == g);
    CHECK(lkl::serialize(back.graph) == text);
    CHECK(lkl::detect_format("graph.csv", text) == Format::kWeightedEdgeList);
  }
}

TEST_CASE("format detection and load") {
  CHECK(lkl::detect_format("x.csv", "a,b,-1,5\nc,d,2,6\n") == Format::kSignedEdgeList);
  CHECK(lkl::detect_format("x.csv", "a,b,1\nc,d,2\n") == Format::kWeightedEdgeList);
  CHECK(lkl::detect_format("x.csv", ",a,b\na,0,1\nb,0,0\n") == Format::kDominanceMatrix);
  CHECK(lkl::detect_format("x.dom", "a,b,1\n") == Format::kDominanceMatrix);
  CHECK(lkl::detect_format("x.signed", "") == Format::kSignedEdgeList);
  CHECK(lkl::detect_format(kData / "signed_small.csv",
                           lkl::read_file(kData / "signed_small.csv")) == Format::kSignedEdgeList);
  CHECK(lkl::detect_format(kData / "trade_small.csv", lkl::read_file(kData / "trade_small.csv")) ==
        Format::kWeightedEdgeList);

  const auto loaded =
      lkl::load({kData / "dominance_small.csv", std::nullopt, Direction::kColumnDominatesRow});
  CHECK(loaded.graph.node_count() == 6);
  CHECK(W(loaded.graph, "ada", "bo") == 4.0);

  try {
    lkl::load({kData / "missing.csv", std::nullopt, {}});
    FAIL("expected kIo");
  } catch (const lkl::Error& e) {
    CHECK(e.code() == lkl::ErrorCode::kIo);
  }
  try {
    lkl::load({kData / "batch" / "c_corrupt.csv", Format::kDominanceMatrix, {}});
    FAIL("expected kParse");
  } catch (const lkl::Error& e) {
    CHECK(e.code() == lkl::ErrorCode::kParse);
    CHECK(std::string(e.what()).find("c_corrupt.csv: line 2, column 3") != std::string::npos);
  }
}

TEST_CASE("matrix parse then serialize is byte-deterministic") {
  const std::string text = lkl::read_file(kData / "dominance_small.csv");
  CHECK(lkl::serialize(lkl::parse_dominance_matrix(text).graph) ==
        lkl::serialize(lkl::parse_dominance_matrix(text).graph));
}
