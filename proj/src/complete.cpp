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

#include "ubv/complete.hpp"

#include <algorithm>
#include <string>

#include "ubv/error.hpp"

namespace ubv {

std::vector<std::vector<Vertex>> zigzag_paths(Vertex two_m) {
  if (two_m < 2 || two_m % 2 != 0) {
    throw InputError("zig-zag decomposition needs a positive even order, got " +
                     std::to_string(two_m));
  }
  const Vertex m = two_m / 2;
  std::vector<std::vector<Vertex>> paths(m);
  for (Vertex k = 0; k < m; ++k) {
    auto& path = paths[k];
    path.reserve(two_m);
    for (Vertex i = 0; i < two_m; ++i) {
      Vertex step = i % 2 == 1 ? (i + 1) / 2 : -(i / 2);
      path.push_back(((k + step) % two_m + two_m) % two_m);
    }
  }
  return paths;
}

void BlockSpec::validate() const {
  if (m < 1) throw InputError("block parameter m must be at least 1");
  if (path.size() != static_cast<std::size_t>(2 * m)) {
    throw InputError("block path must have 2m vertices");
  }
  std::vector<Vertex> all = path;
  all.push_back(u);
  all.push_back(w);
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw InputError("block vertices must be distinct");
  }
}

Layout block_layout(const BlockSpec& spec, const Rational& y_offset, const Rational& x_offset) {
  spec.validate();
  const std::int64_t twelfth = 12 * static_cast<std::int64_t>(spec.m);
  const std::int64_t len = 2 * static_cast<std::int64_t>(spec.m);
  Layout layout;
  // delta = 2/(12m); u sits at (2m-1)delta - 1/(12m) = (4m-3)/(12m).
  layout.add(x_offset + Rational(2 * len - 3, twelfth), y_offset, spec.u);
  for (std::int64_t k = 0; k < len; ++k) {
    layout.add(x_offset + Rational(2 * k, twelfth), y_offset + 1 + k, spec.path[k]);
  }
  layout.add(x_offset + Rational(1, twelfth), y_offset + len + 1, spec.w);
  return layout;
}

namespace {

/// Stacked blocks for K_{6m}; `top` receives the height of the highest bar.
Layout stack_blocks(Vertex m, Rational& top) {
  const auto paths = zigzag_paths(2 * m);
  const std::int64_t block_height = 2 * static_cast<std::int64_t>(m) + 2;
  auto id = [m](int cls, Vertex local) { return 2 * m * cls + local; };
  Layout layout;
  std::int64_t index = 0;
  for (int cls = 0; cls < 3; ++cls) {
    const int prev = (cls + 2) % 3;
    for (Vertex j = 0; j < m; ++j, ++index) {
      BlockSpec spec{m, {}, id(prev, j), id(prev, m + j)};
      for (Vertex v : paths[j]) spec.path.push_back(id(cls, v));
      // Each block's second-lowest bar lies 1/(12m) right of the previous
      // block's top bar, i.e. block origins advance by 1/(6m).
      Layout block = block_layout(spec, 2 * block_height * index, Rational(index, 6 * m));
      layout.bars.insert(layout.bars.end(), block.bars.begin(), block.bars.end());
    }
  }
  top = 2 * block_height * (index - 1) + block_height - 1;
  return layout;
}

}  // namespace

Layout construct_k6m_blocks(Vertex m) {
  if (m < 1) throw InputError("K_{6m} construction needs m >= 1");
  Rational top;
  return stack_blocks(m, top);
}

Layout construct_kn(Vertex n) {
  if (n < 1) throw InputError("K_n construction needs n >= 1");
  Layout layout;
  if (n <= 2) {
    for (Vertex v = 0; v < n; ++v) layout.add(0, v, v);
    return layout;
  }
  const Vertex m = (n % 6 == 1 || n % 6 == 2) ? (n - 2 + 5) / 6 : (n + 5) / 6;
  const Vertex x_vertex = 6 * m, y_vertex = 6 * m + 1;
  Rational top;
  layout = stack_blocks(m, top);
  const std::int64_t twelfth = 12 * static_cast<std::int64_t>(m);
  // Top bar starts at the first block's second-lowest bar; bottom bar starts
  // 1/(12m) before the right end of the first block's lowest bar.
  layout.add(0, top + 2, x_vertex);
  const Rational bottom_x = Rational(4 * m - 3, twelfth) + 1 - Rational(1, twelfth);
  layout.add(bottom_x, -2, y_vertex);
  layout.add(bottom_x, -4, x_vertex);

  // Drop surplus vertices from the top of V_3 and close the id gap.
  const Vertex surplus = 6 * m + 2 - n;
  const Vertex first_dropped = 6 * m - surplus;
  Layout kept;
  for (Bar bar : layout.bars) {
    if (bar.vertex >= first_dropped && bar.vertex < 6 * m) continue;
    if (bar.vertex >= 6 * m) bar.vertex -= surplus;
    kept.bars.push_back(bar);
  }
  return kept;
}

Bounds bounds_kn(Vertex n) {
  if (n < 1) throw InputError("K_n bounds need n >= 1");
  return {(n + 5) / 6, (n + 4 + 5) / 6};
}

}  // namespace ubv
