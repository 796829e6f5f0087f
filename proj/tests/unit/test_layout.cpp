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

#include <random>
#include <set>

#include "support/random.hpp"
#include "ubv/complete.hpp"
#include "ubv/error.hpp"
#include "ubv/layout.hpp"
#include "ubv/oracles.hpp"
#include "ubv/tree.hpp"

using namespace ubv;

namespace {

Layout bars(std::initializer_list<Bar> list) { return Layout{std::vector<Bar>(list)}; }

}  // namespace

TEST_CASE("two stacked bars see each other") {
  auto vis = extract_visibilities(bars({{0, 0, 0}, {0, 1, 1}}));
  CHECK(vis.bar_pairs == std::vector<BarPair>{{0, 1}});
  CHECK(vis.vertex_graph == Graph(2, {{0, 1}}));
}

TEST_CASE("a full-width bar in between blocks") {
  auto vis = extract_visibilities(bars({{0, 0, 0}, {0, 1, 1}, {0, 2, 2}}));
  CHECK(vis.vertex_graph == Graph(3, {{0, 1}, {1, 2}}));
}

TEST_CASE("collinear touching bars do not see each other") {
  Layout l = bars({{0, 0, 0}, {1, 0, 1}});
  CHECK_FALSE(find_intersection(l));
  CHECK(extract_visibilities(l).vertex_graph.edge_count() == 0);
}

TEST_CASE("bars that only share an endpoint in x do not see each other") {
  Layout l = bars({{0, 0, 0}, {1, 1, 1}});
  CHECK(extract_visibilities(l).bar_pairs.empty());
}

TEST_CASE("a partial blocker leaves a channel") {
  Layout l = bars({{0, 0, 0}, {Rational(1, 2), 1, 1}, {0, 2, 2}});
  CHECK(extract_visibilities(l).vertex_graph == gen::complete(3));
}

TEST_CASE("two blockers that tile the overlap block it") {
  Layout l = bars({{0, 0, 0}, {Rational(-1, 2), 1, 1}, {Rational(1, 2), 1, 2}, {0, 2, 3}});
  Graph g = extract_visibilities(l).vertex_graph;
  CHECK_FALSE(g.has_edge(0, 3));
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(2, 3));
}

TEST_CASE("the m=1 block realizes K_4 minus uw") {
  BlockSpec spec{1, {0, 1}, 2, 3};
  Layout l = block_layout(spec, 0, 0);
  REQUIRE(l.size() == 4);
  const auto brute = oracle::brute_visibilities(l);
  CHECK(brute.size() == 5);
  Visibilities vis = extract_visibilities(l);
  CHECK(vis.bar_pairs == brute);
  Graph want(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(vis.vertex_graph == want);
}

TEST_CASE("intersecting bars are rejected") {
  Layout l = bars({{0, 0, 0}, {Rational(1, 2), 0, 1}});
  auto pair = find_intersection(l);
  REQUIRE(pair);
  CHECK(*pair == BarPair{0, 1});
  CHECK_THROWS_AS(extract_visibilities(l), InvalidLayoutError);
  CHECK_THROWS_AS(require_nonintersecting(l), InvalidLayoutError);
}

TEST_CASE("self visibilities are counted, not drawn") {
  auto vis = extract_visibilities(bars({{0, 0, 0}, {0, 1, 0}}));
  CHECK(vis.self_visibilities == 1);
  CHECK(vis.vertex_graph.edge_count() == 0);
}

TEST_CASE("verify_representation") {
  Layout l = bars({{0, 0, 0}, {0, 1, 1}});
  VerifyReport ok = verify_representation(l, gen::path(2));
  CHECK(ok.represents_target);
  CHECK(ok.max_multiplicity == 1);

  VerifyReport bad = verify_representation(l, Graph(2, std::span<const Edge>{}));
  CHECK_FALSE(bad.represents_target);
  CHECK(bad.forbidden_visibilities == std::vector<Edge>{{0, 1}});

  VerifyReport missing = verify_representation(l, gen::path(3));
  CHECK_FALSE(missing.represents_target);
  CHECK_FALSE(missing.is_valid_layout);
  CHECK(missing.unlabeled_vertices == std::vector<Vertex>{2});
  CHECK(missing.missing_edges == std::vector<Edge>{{1, 2}});

  CHECK_THROWS_AS(verify_representation(bars({{0, 0, 5}}), gen::path(2)), InputError);

  VerifyReport clash = verify_representation(bars({{0, 0, 0}, {0, 0, 1}}), gen::path(2));
  CHECK_FALSE(clash.is_valid_layout);
  CHECK(clash.intersecting_pair);
}

TEST_CASE("verify K_14 from the complete construction") {
  VerifyReport r = verify_representation(construct_kn(14), gen::complete(14));
  CHECK(r.represents_target);
  CHECK(r.max_multiplicity == 3);
}

TEST_CASE("multiplicity_report") {
  CHECK(multiplicity_report(bars({{0, 0, 0}})).max == 1);
  CHECK(multiplicity_report(construct_kn(14)).max == 3);
  CHECK(multiplicity_report(ubvt_layout(gen::path(5))).max == 1);
  Multiplicity m = multiplicity_report(bars({{0, 0, 1}, {2, 0, 1}}), 3);
  CHECK(m.count == std::vector<int>{0, 2, 0});
}

TEST_CASE("perturb_distinct_y") {
  Layout distinct = bars({{0, 0, 0}, {0, 1, 1}});
  CHECK(perturb_distinct_y(distinct) == distinct);

  Layout three = bars({{0, 0, 0}, {2, 0, 1}, {4, 0, 2}});
  Layout p = perturb_distinct_y(three);
  std::set<Rational> ys;
  for (const Bar& b : p.bars) ys.insert(b.y);
  CHECK(ys.size() == 3);
  CHECK(extract_visibilities(p).vertex_graph == extract_visibilities(three).vertex_graph);

  // Two collinear bars under a wide blocker stay invisible to each other.
  Layout blocked = bars({{0, 0, 0}, {1, 0, 1}, {Rational(1, 2), 1, 2}});
  Layout q = perturb_distinct_y(blocked);
  CHECK(extract_visibilities(q).vertex_graph == extract_visibilities(blocked).vertex_graph);
}

TEST_CASE("perturb_distinct_y preserves random vertex graphs") {
  std::mt19937_64 rng(testing::seed_from_env());
  for (int i = 0; i < 200; ++i) {
    Layout l = testing::random_layout(rng);
    Layout p = perturb_distinct_y(l);
    std::set<Rational> ys;
    for (const Bar& b : p.bars) ys.insert(b.y);
    CHECK(ys.size() == p.size());
    CHECK(extract_visibilities(p, l.label_bound()).vertex_graph ==
          extract_visibilities(l).vertex_graph);
  }
}

TEST_CASE("disjoint_union") {
  Layout a = bars({{0, 0, 0}, {0, 1, 1}});
  Layout b = bars({{0, 0, 2}, {Rational(1, 2), 1, 3}});
  CHECK(disjoint_union(Layout{}, a) == a);
  Layout u = disjoint_union(a, b);
  REQUIRE(u.size() == 4);
  CHECK(u.bars[0] == a.bars[0]);
  CHECK(u.bars[2].vertex == 2);
  Graph g = extract_visibilities(u).vertex_graph;
  CHECK(g == Graph(4, {{0, 1}, {2, 3}}));
  const Layout parts[] = {a, b, a};
  CHECK(disjoint_union(parts).size() == 6);
}

TEST_CASE("translated") {
  Layout t = translated(bars({{0, 0, 0}}), Rational(1, 2), -3);
  CHECK(t.bars[0].x == Rational(1, 2));
  CHECK(t.bars[0].y == -3);
}

TEST_CASE("sweep agrees with the brute-force oracle on random layouts") {
  std::mt19937_64 rng(testing::seed_from_env() + 1);
  for (int i = 0; i < 300; ++i) {
    Layout l = testing::random_layout(rng);
    CHECK(extract_visibilities(l).bar_pairs == oracle::brute_visibilities(l));
  }
}
