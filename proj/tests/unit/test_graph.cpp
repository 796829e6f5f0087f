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

#include <algorithm>

#include "ubv/error.hpp"
#include "ubv/graph.hpp"

using namespace ubv;

TEST_CASE("build_graph") {
  std::vector<Edge> p3{{0, 1}, {1, 2}};
  Graph g = build_graph(3, p3);
  CHECK(g.edge_count() == 2);
  CHECK(g == gen::path(3));

  Graph k1 = build_graph(1, {});
  CHECK(k1.vertex_count() == 1);
  CHECK(k1.edge_count() == 0);
  CHECK(k1.is_tree());

  std::vector<Edge> dup{{0, 1}, {1, 0}};
  CHECK(build_graph(3, dup).edge_count() == 1);
}

TEST_CASE("build_graph rejects bad edges") {
  std::vector<Edge> out_of_range{{0, 3}};
  CHECK_THROWS_AS(build_graph(3, out_of_range), InputError);
  std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(build_graph(3, loop), InputError);
  std::vector<Edge> negative{{-1, 1}};
  CHECK_THROWS_AS(build_graph(3, negative), InputError);
}

TEST_CASE("adjacency is sorted") {
  Graph g(5, {{4, 0}, {2, 0}, {0, 1}, {3, 0}});
  auto nbrs = g.neighbors(0);
  CHECK(std::is_sorted(nbrs.begin(), nbrs.end()));
  CHECK(g.degree(0) == 4);
  CHECK(g.has_edge(3, 0));
  CHECK_FALSE(g.has_edge(3, 4));
}

TEST_CASE("generators") {
  CHECK(gen::complete(4).edge_count() == 6);
  CHECK(gen::complete_bipartite(3, 2).edge_count() == 6);
  CHECK(gen::complete_bipartite(3, 2).has_edge(0, 3));
  CHECK_FALSE(gen::complete_bipartite(3, 2).has_edge(0, 1));
  CHECK(gen::star(5).degree(0) == 5);
  CHECK(gen::spider(3, 2).vertex_count() == 7);
  CHECK(gen::spider(3, 2).is_tree());

  Graph y = gen::y_tree();
  CHECK(y.vertex_count() == 10);
  CHECK(y.is_tree());
  auto deg = degree_stats(y).degree;
  std::sort(deg.rbegin(), deg.rend());
  CHECK(deg == std::vector<int>{3, 3, 3, 3, 1, 1, 1, 1, 1, 1});

  Graph h = gen::path_join_two(3);
  CHECK(h.vertex_count() == 8);
  CHECK(h.edge_count() == 5 + 12);
  CHECK_FALSE(h.has_edge(6, 7));
}

TEST_CASE("graphs_equal is labeled") {
  CHECK(graphs_equal(gen::path(3), gen::path(3)));
  CHECK_FALSE(graphs_equal(gen::path(3), Graph(3, {{0, 2}, {2, 1}})));
  CHECK_FALSE(graphs_equal(gen::complete(3), gen::path(3)));
}

TEST_CASE("degree_stats") {
  CHECK(degree_stats(gen::star(5)).max_degree == 5);
  CHECK(degree_stats(gen::path(7)).max_degree == 2);
  CHECK(degree_stats(gen::y_tree()).max_degree == 3);
}

TEST_CASE("is_tree") {
  CHECK(gen::path(4).is_tree());
  CHECK_FALSE(gen::complete(3).is_tree());
  CHECK_FALSE(Graph(4, {{0, 1}, {2, 3}}).is_tree());
}
