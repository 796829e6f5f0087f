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

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ubv/graph.hpp"
#include "ubv/rational.hpp"

namespace ubv {

/// A unit bar: left endpoint (x, y), occupying the half-open x-interval
/// [x, x + 1) at height y, labeled with the vertex it represents.
struct Bar {
  Rational x;
  Rational y;
  Vertex vertex = 0;

  Rational right() const { return x + 1; }

  friend bool operator==(const Bar&, const Bar&) = default;
};

/// A finite list of bars. Bar order is preserved by every operation below so
/// that bar indices stay meaningful in reports.
struct Layout {
  std::vector<Bar> bars;

  std::size_t size() const noexcept { return bars.size(); }
  bool empty() const noexcept { return bars.empty(); }
  void add(Rational x, Rational y, Vertex v) { bars.push_back({x, y, v}); }

  /// One more than the largest label; 0 for an empty layout.
  Vertex label_bound() const;

  friend bool operator==(const Layout&, const Layout&) = default;
};

/// Bar-index pair with first < second.
using BarPair = std::pair<std::size_t, std::size_t>;

/// First pair of collinear bars whose projections intersect, if any.
std::optional<BarPair> find_intersection(const Layout& layout);

/// Throws InvalidLayoutError naming the offending pair.
void require_nonintersecting(const Layout& layout);

struct Visibilities {
  /// Sorted, deduplicated pairs of bars that see each other.
  std::vector<BarPair> bar_pairs;
  /// Bar labels contracted; sightlines between bars of one vertex dropped.
  Graph vertex_graph;
  /// Number of bar pairs that share a label and see each other.
  std::size_t self_visibilities = 0;
};

/// Plane sweep over the distinct bar endpoints. Inside each event-free slab
/// exactly the y-consecutive active bars see each other; only adjacencies
/// created at an event are examined, so the cost is O(B log B + output).
/// The vertex graph has `vertex_count` vertices (default: label_bound()).
Visibilities extract_visibilities(const Layout& layout);
Visibilities extract_visibilities(const Layout& layout, Vertex vertex_count);

struct VerifyReport {
  bool is_valid_layout = true;
  bool represents_target = false;
  std::optional<BarPair> intersecting_pair;
  std::vector<Vertex> unlabeled_vertices;
  std::vector<Edge> missing_edges;
  std::vector<Edge> forbidden_visibilities;
  std::size_t self_visibilities = 0;
  std::vector<int> multiplicity;
  int max_multiplicity = 0;
  std::size_t bar_count = 0;
};

/// Compares the layout's visibility graph with `target`. Bars labeled
/// outside the target's vertex range throw InputError; every other defect is
/// recorded in the report.
VerifyReport verify_representation(const Layout& layout, const Graph& target);

struct Multiplicity {
  std::vector<int> count;
  int max = 0;
};

Multiplicity multiplicity_report(const Layout& layout);
Multiplicity multiplicity_report(const Layout& layout, Vertex vertex_count);

/// Makes every y distinct without changing the vertex-level visibility
/// graph: each round raises the rightmost bar of every equal-height group by
/// half of the smallest positive gap between heights.
Layout perturb_distinct_y(const Layout& layout);

/// `a` followed by `b` translated so that its projection starts one unit
/// past the end of `a`'s projection. Labels are kept as given.
Layout disjoint_union(const Layout& a, const Layout& b);

/// Left-to-right disjoint union of many layouts in one pass.
Layout disjoint_union(std::span<const Layout> parts);

/// Translates every bar by (dx, dy).
Layout translated(const Layout& layout, const Rational& dx, const Rational& dy);

}  // namespace ubv
