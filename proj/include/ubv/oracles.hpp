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

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ubv/graph.hpp"
#include "ubv/layout.hpp"

namespace ubv::oracle {

/// Pairwise ground truth for bar visibility. For each overlapping pair at
/// different heights it cuts the common projection at every endpoint of a
/// bar lying strictly between them, then probes each piece's midpoint.
/// Shares no interval logic with the sweep. Throws InvalidLayoutError on
/// intersecting bars.
std::vector<BarPair> brute_visibilities(const Layout& layout);

/// Largest edge count brute_ub_tree accepts.
inline constexpr std::size_t kMaxBruteEdges = 13;

/// ub(T) by exhaustive search over partitions of E(T) into connected UBVT
/// parts, trying widths from ceil(D/3) upward. Uses its own caterpillar
/// test. Throws InputError for non-trees or more than kMaxBruteEdges edges.
int brute_ub_tree(const Graph& t);

/// Degree-3 vertices pairwise "betweenness" test: every triple has one
/// member on the path joining the other two. Independent of is_ubvt.
bool brute_is_ubvt(const Graph& t);

/// Tree from a Prufer sequence over n = seq.size() + 2 labels.
Graph prufer_decode(const std::vector<Vertex>& sequence);

/// AHU canonical string of a tree (minimum over its centers).
std::string canonical_form(const Graph& t);

/// Streams trees on n vertices (1 <= n <= 10). Labeled mode visits all
/// n^(n-2) trees via Prufer decoding; unlabeled mode visits one tree per
/// isomorphism class, found by leaf extension with canonical-form dedup.
/// Returns the number of trees visited.
std::uint64_t enumerate_trees(Vertex n, bool labeled,
                              const std::function<void(const Graph&)>& visit);

}  // namespace ubv::oracle
