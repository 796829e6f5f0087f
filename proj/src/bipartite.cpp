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

#include "ubv/bipartite.hpp"

#include <algorithm>
#include <string>

#include "ubv/error.hpp"

namespace ubv {
namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

Vertex cyclic(std::int64_t index, std::int64_t modulus) {
  return static_cast<Vertex>(((index % modulus) + modulus) % modulus);
}

/// One segment of `length` contiguous bars starting at (x, y); bar q gets
/// label(q).
template <typename Label>
void add_segment(Layout& layout, Rational x, Rational y, std::int64_t length, Label label) {
  for (std::int64_t q = 0; q < length; ++q) layout.add(x + q, y, label(q));
}

/// Appends an aligned, isolated bar pair for every Y-X pair the current
/// layout does not realize.
void add_pendant_pairs(Layout& layout, Vertex m, Vertex n) {
  const Graph seen = extract_visibilities(layout, m + n).vertex_graph;
  Rational next_x = 0;
  for (const Bar& b : layout.bars) next_x = std::max(next_x, b.x + 2);
  for (Vertex y = 0; y < m; ++y) {
    for (Vertex x = m; x < m + n; ++x) {
      if (seen.has_edge(y, x)) continue;
      layout.add(next_x, 0, x);
      layout.add(next_x, 1, y);
      next_x += 2;
    }
  }
}

}  // namespace

void BipartiteParams::validate() const {
  if (n < 2 || m < n) {
    throw InputError("K_{m,n} constructions need m >= n >= 2 (got m=" + std::to_string(m) +
                     ", n=" + std::to_string(n) + ")");
  }
}

// Heights: Y_j at 2(j-1), X_j at 2j-1. Only the alternating order matters;
// the half-unit x stagger is what produces the sightlines.
Layout construct_kmn_dense(Vertex m, Vertex n) {
  BipartiteParams{m, n}.validate();
  const std::int64_t rows = ceil_div(m, 4);
  Layout layout;
  for (std::int64_t j = 1; j <= rows + 1; ++j) {
    add_segment(layout, j - 1, 2 * (j - 1), n,
                [&](std::int64_t q) { return cyclic(3 * j - 3 + q, m); });
  }
  for (std::int64_t j = 1; j <= rows; ++j) {
    add_segment(layout, Rational(2 * j - 1, 2), 2 * j - 1, n,
                [&](std::int64_t q) { return m + cyclic(1 - j + q, n); });
  }
  add_pendant_pairs(layout, m, n);
  return layout;
}

Layout construct_kmn_sparse(Vertex m, Vertex n) {
  BipartiteParams{m, n}.validate();
  const std::int64_t rows = n / 4;
  const std::int64_t length = static_cast<std::int64_t>(n) * (m / n);
  Layout layout;
  for (std::int64_t j = 1; j <= rows + 1; ++j) {
    add_segment(layout, j - 1, 2 * (j - 1), length,
                [&](std::int64_t q) { return cyclic(3 * j - 3 + q, length); });
  }
  for (std::int64_t j = 1; j <= rows; ++j) {
    add_segment(layout, Rational(2 * j - 1, 2), 2 * j - 1, length,
                [&](std::int64_t q) { return m + cyclic(1 - j + q, n); });
  }
  add_pendant_pairs(layout, m, n);
  return layout;
}

Layout construct_kmn(Vertex m, Vertex n, KmnMethod method) {
  switch (method) {
    case KmnMethod::Dense: return construct_kmn_dense(m, n);
    case KmnMethod::Sparse: return construct_kmn_sparse(m, n);
    case KmnMethod::Auto: break;
  }
  Layout dense = construct_kmn_dense(m, n);
  Layout sparse = construct_kmn_sparse(m, n);
  return multiplicity_report(sparse).max < multiplicity_report(dense).max ? sparse : dense;
}

Bounds bounds_kmn(Vertex m, Vertex n) {
  BipartiteParams{m, n}.validate();
  const std::int64_t M = m, N = n;
  std::int64_t lower = std::max(ceil_div(M, 5), ceil_div(M * N + 4, 2 * (M + N)));
  if (n == 2) lower = std::max(lower, ceil_div(M, 4));
  // floor(m/4 + n + 1) == floor((m + 4n + 4) / 4)
  std::int64_t upper = std::min(ceil_div(M, 4) + (2 * M) / N + 12, (M + 4 * N + 4) / 4);
  return {static_cast<int>(lower), static_cast<int>(upper)};
}

}  // namespace ubv
