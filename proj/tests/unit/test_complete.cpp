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

#include <set>

#include "ubv/complete.hpp"
#include "ubv/error.hpp"
#include "ubv/oracles.hpp"

using namespace ubv;

namespace {

/// Every edge of K_{2m} covered exactly once by the paths.
bool covers_once(Vertex two_m, const std::vector<std::vector<Vertex>>& paths) {
  std::multiset<Edge> seen;
  for (const auto& p : paths)
    for (std::size_t i = 0; i + 1 < p.size(); ++i) seen.emplace(p[i], p[i + 1]);
  if (seen.size() != static_cast<std::size_t>(two_m * (two_m - 1) / 2)) return false;
  for (Vertex a = 0; a < two_m; ++a)
    for (Vertex b = a + 1; b < two_m; ++b)
      if (seen.count(Edge(a, b)) != 1) return false;
  return true;
}

}  // namespace

TEST_CASE("zigzag paths") {
  auto four = zigzag_paths(4);
  CHECK(four == std::vector<std::vector<Vertex>>{{0, 1, 3, 2}, {1, 2, 0, 3}});
  CHECK(covers_once(4, four));
  CHECK(zigzag_paths(2) == std::vector<std::vector<Vertex>>{{0, 1}});
  CHECK(zigzag_paths(6).size() == 3);
  for (Vertex two_m = 2; two_m <= 20; two_m += 2) CHECK(covers_once(two_m, zigzag_paths(two_m)));
  CHECK_THROWS_AS(zigzag_paths(5), InputError);
  CHECK_THROWS_AS(zigzag_paths(0), InputError);
}

TEST_CASE("block layout realizes the path joined with two vertices") {
  for (Vertex m = 1; m <= 6; ++m) {
    BlockSpec spec{m, {}, 2 * m, 2 * m + 1};
    for (Vertex v = 0; v < 2 * m; ++v) spec.path.push_back(v);
    Layout l = block_layout(spec, 0, 0);
    CHECK(l.size() == static_cast<std::size_t>(2 * m + 2));
    CHECK(verify_representation(l, gen::path_join_two(m)).represents_target);
    CHECK(extract_visibilities(l).bar_pairs == oracle::brute_visibilities(l));
  }
}

TEST_CASE("block exposes three bars from above") {
  for (Vertex m = 1; m <= 6; ++m) {
    BlockSpec spec{m, {}, 2 * m, 2 * m + 1};
    for (Vertex v = 0; v < 2 * m; ++v) spec.path.push_back(v);
    Layout l = block_layout(spec, 0, 0);
    // A long probe above: cover the block's projection with three bars.
    const Vertex probe = 2 * m + 2;
    for (int k = -1; k <= 2; ++k) l.add(k, 100, probe);
    Graph g = extract_visibilities(l).vertex_graph;
    std::vector<Vertex> seen;
    for (Vertex v = 0; v < probe; ++v)
      if (g.has_edge(v, probe)) seen.push_back(v);
    std::vector<Vertex> want{0, 2 * m - 1, 2 * m + 1};
    std::sort(want.begin(), want.end());
    CHECK(seen == want);
  }
}

TEST_CASE("block spec validation") {
  CHECK_THROWS_AS(block_layout(BlockSpec{1, {0, 1}, 0, 3}, 0, 0), InputError);
  CHECK_THROWS_AS(block_layout(BlockSpec{2, {0, 1}, 2, 3}, 0, 0), InputError);
}

TEST_CASE("K_6m from blocks") {
  for (Vertex m = 1; m <= 3; ++m) {
    VerifyReport r = verify_representation(construct_k6m_blocks(m), gen::complete(6 * m));
    CHECK(r.represents_target);
    CHECK(r.max_multiplicity == m + 1);
  }
}

TEST_CASE("construct_kn") {
  VerifyReport k14 = verify_representation(construct_kn(14), gen::complete(14));
  CHECK(k14.represents_target);
  CHECK(k14.max_multiplicity == 3);

  VerifyReport k8 = verify_representation(construct_kn(8), gen::complete(8));
  CHECK(k8.represents_target);
  CHECK(k8.max_multiplicity <= 2);

  CHECK(construct_kn(1).size() == 1);
  CHECK(verify_representation(construct_kn(2), gen::complete(2)).represents_target);

  VerifyReport k12 = verify_representation(construct_kn(12), gen::complete(12));
  CHECK(k12.represents_target);
  CHECK(k12.max_multiplicity <= 3);
  CHECK_THROWS_AS(construct_kn(0), InputError);
}

TEST_CASE("bounds_kn") {
  CHECK(bounds_kn(13).lower == 3);
  CHECK(bounds_kn(13).upper == 3);
  CHECK(bounds_kn(12).lower == 2);
  CHECK(bounds_kn(12).upper == 3);
  CHECK(bounds_kn(6).lower == 1);
  CHECK(bounds_kn(6).upper == 2);
}

TEST_CASE("complete constructions agree with the brute-force oracle") {
  for (Vertex n : {3, 7, 8, 13, 14}) {
    Layout l = construct_kn(n);
    CHECK(extract_visibilities(l).bar_pairs == oracle::brute_visibilities(l));
  }
}
