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

#include "ubv/layout.hpp"

namespace ubv {

/// K_{m,n} with |Y| = m >= |X| = n >= 2. Vertex ids follow
/// gen::complete_bipartite: y_i -> i-1, x_i -> m+i-1.
struct BipartiteParams {
  Vertex m = 2;
  Vertex n = 2;

  /// Throws InputError unless m >= n >= 2.
  void validate() const;
};

/// Staggered segment array: ceil(m/4)+1 Y-segments and ceil(m/4) X-segments
/// of n contiguous bars each, alternating from the bottom, followed by a
/// pendant pair for every (x, y) the array leaves unseen.
Layout construct_kmn_dense(Vertex m, Vertex n);

/// floor(n/4)+1 Y-segments and floor(n/4) X-segments of n*floor(m/n) bars
/// each, plus pendant pairs. Meaningful for n >= 4; smaller n yields a lone
/// Y-segment and pendant pairs only.
Layout construct_kmn_sparse(Vertex m, Vertex n);

enum class KmnMethod { Dense, Sparse, Auto };

/// Auto runs both and keeps the one with the smaller maximum multiplicity
/// (dense on ties).
Layout construct_kmn(Vertex m, Vertex n, KmnMethod method = KmnMethod::Auto);

struct Bounds {
  int lower = 0;
  int upper = 0;
};

/// lower = max(ceil(m/5), ceil((mn+4)/(2(m+n))), and ceil(m/4) when n = 2);
/// upper = min(ceil(m/4) + floor(2m/n) + 12, floor(m/4 + n + 1)).
Bounds bounds_kmn(Vertex m, Vertex n);

}  // namespace ubv
