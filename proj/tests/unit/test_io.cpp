// Copyright 2026 The ubvis Authors
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

#include <doctest.h>

#include <regex>

#include "ubv/complete.hpp"
#include "ubv/error.hpp"
#include "ubv/io.hpp"

using namespace ubv;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + 1))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("parse_graph") {
  CHECK(io::parse_graph("graph 2\nedge 0 1\n") == gen::path(2));
  Graph k1 = io::parse_graph("graph 1\n");
  CHECK(k1.vertex_count() == 1);
  CHECK(io::parse_graph("# a comment\ngraph 3  # trailing\n\nedge 2 1\r\n") ==
        Graph(3, {{1, 2}}));
}

TEST_CASE("parse_graph reports locations") {
  try {
    io::parse_graph("graph 2\nedge 0 2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 8);
  }
  try {
    io::parse_graph("graph 3\n  edge 0 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 10);
  }
  CHECK_THROWS_AS(io::parse_graph("edge 0 1\n"), ParseError);
  CHECK_THROWS_AS(io::parse_graph("graph 2\nedge 0\n"), ParseError);
  CHECK_THROWS_AS(io::parse_graph("graph 2\nedge 1 1\n"), ParseError);
  CHECK_THROWS_AS(io::parse_graph("graph 2\ngraph 2\n"), ParseError);
  CHECK_THROWS_AS(io::parse_graph("vertices 2\n"), ParseError);
  CHECK_THROWS_AS(io::parse_graph(""), ParseError);
}

TEST_CASE("graph serialization round trips") {
  Graph g = gen::complete_bipartite(3, 2);
  CHECK(io::parse_graph(io::serialize_graph(g)) == g);
}

TEST_CASE("parse_layout") {
  Layout l = io::parse_layout("bar 0 0/1 0/1\nbar 1 0/1 1/1\n");
  REQUIRE(l.size() == 2);
  CHECK(l.bars[1].vertex == 1);
  CHECK(l.bars[1].y == 1);
  CHECK(io::parse_layout("bar 2 6/8 -1\n").bars[0].x == Rational(3, 4));
  CHECK_THROWS_AS(io::parse_layout("bar 0 1/0 0/1"), ParseError);
  CHECK_THROWS_AS(io::parse_layout("bar -1 0 0\n"), ParseError);
  CHECK_THROWS_AS(io::parse_layout("bar 0 0\n"), ParseError);
  CHECK_THROWS_AS(io::parse_layout("rod 0 0 0\n"), ParseError);
  try {
    io::parse_layout("bar 0 0/1 0/1\n# gap\nbar 1 1/2 0/1\n");
    FAIL("expected an intersection error");
  } catch (const InvalidLayoutError& e) {
    CHECK(e.first() == 0);
    CHECK(e.second() == 1);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("layout serialization round trips") {
  const std::string text = io::serialize_layout(construct_kn(8));
  Layout parsed = io::parse_layout(text);
  CHECK(parsed == construct_kn(8));
  CHECK(io::serialize_layout(parsed) == text);
}

TEST_CASE("render_svg") {
  Layout one{{{0, 0, 0}}};
  CHECK(count(io::render_svg(one), "<rect") == 1);

  Layout k14 = construct_kn(14);
  const std::string svg = io::render_svg(k14);
  CHECK(count(svg, "<rect") == k14.size());
  CHECK(io::render_svg(k14) == svg);

  Layout two{{{0, 0, 0}, {0, 1, 1}}};
  const std::string lines = io::render_svg(two, {true});
  CHECK(count(lines, "stroke-dasharray") == 1);
  CHECK(count(io::render_svg(two), "stroke-dasharray") == 0);
  CHECK(count(lines, "<text") == 2);
}

TEST_CASE("format_report") {
  VerifyReport r = verify_representation(Layout{{{0, 0, 0}, {0, 1, 1}}}, gen::path(3));
  const std::string text = io::format_report(r);
  CHECK(text.find("represents_target: false\n") != std::string::npos);
  CHECK(text.find("unlabeled_vertices: 2\n") != std::string::npos);
  CHECK(text.find("missing_edges: 1-2\n") != std::string::npos);
  CHECK(text.find("forbidden_visibilities: none\n") != std::string::npos);
}

TEST_CASE("read_file reports missing files") {
  CHECK_THROWS_AS(io::read_file("/nonexistent/ubv/file"), InputError);
}
