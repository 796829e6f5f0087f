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

#include <vector>

#include "ubv/bipartite.hpp"
#include "ubv/layout.hpp"

namespace ubv {

/// The m rotations of the zig-zag Hamiltonian path of K_{2m}: path k visits
/// k, k+1, k-1, k+2, k-2, ..., k+m (mod 2m). Together they partition
/// E(K_{2m}). Throws InputError for odd or non-positive input.
std::vector<std::vector<Vertex>> zigzag_paths(Vertex two_m);

/// One copy of P_{2m} join 2K_1. `path` lists the path bottom to top; `u`
/// is the bottom bar, `w` the top bar.
struct BlockSpec {
  Vertex m = 1;
  std::vector<Vertex> path;
  Vertex u = 0;
  Vertex w = 0;

  /// Throws InputError unless the path has 2m distinct vertices and u, w are
  /// distinct and off the path.
  void validate() const;
};

/// Block geometry over the common denominator 12m (delta = 1/(6m)):
/// path bar k (1-based) at x = (k-1)delta, u at (2m-1)delta - 1/(12m) below
/// the path, w at 1/(12m) above it; bars sit on consecutive integer heights
/// starting at y_offset.
///
/// Viewed from above only three bars are exposed: p_1 on [0, 1/(12m)), all
/// of w, and p_{2m} right of w. From below: p_1 left of u, all of u, and
/// p_{2m} right of u.
Layout block_layout(const BlockSpec& spec, const Rational& y_offset, const Rational& x_offset);

/// Stack of the 3m blocks H_{i,j} over V_1, V_2, V_3 (|V_i| = 2m), without
/// the two extra vertices: a representation of K_{6m} in which every vertex
/// has exactly m+1 bars. v_j^i has id 2m(i-1) + j - 1.
Layout construct_k6m_blocks(Vertex m);

/// Representation of K_n with at most ceil((n+4)/6) bars per vertex, and
/// exactly ceil(n/6) when n = 1, 2 (mod 6).
Layout construct_kn(Vertex n);

/// (ceil(n/6), ceil((n+4)/6)).
Bounds bounds_kn(Vertex n);

}  // namespace ubv
