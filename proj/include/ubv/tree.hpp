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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ubv/graph.hpp"
#include "ubv/layout.hpp"

namespace ubv {

/// A tree hung from a root. Children are listed in ascending id order;
/// `preorder` starts at the root and lists every vertex once.
class RootedTree {
 public:
  /// Throws InputError unless `t` is a tree and `root` is one of its vertices.
  RootedTree(const Graph& t, Vertex root);

  Vertex root() const noexcept { return root_; }
  Vertex size() const noexcept { return static_cast<Vertex>(parent_.size()); }
  /// -1 for the root.
  Vertex parent(Vertex v) const { return parent_[v]; }
  std::span<const Vertex> children(Vertex v) const {
    return {children_.data() + offsets_[v], children_.data() + offsets_[v + 1]};
  }
  const std::vector<Vertex>& preorder() const noexcept { return preorder_; }

 private:
  Vertex root_;
  std::vector<Vertex> parent_;
  std::vector<std::int32_t> offsets_;
  std::vector<Vertex> children_;
  std::vector<Vertex> preorder_;
};

enum class EdgeColor : char { Red = 'R', Yellow = 'Y', Green = 'G' };

/// Multiset of branch colors at a vertex, written as Rs, then Ys, then Gs.
/// A branch that is not a subdivided caterpillar of maximum degree 3 is
/// written 'X' (listed first).
struct ColorType {
  std::string code;

  /// True for RG, R, YYG, YY, YGG, YG, Y, GGG, GG, G.
  bool is_ubvt_type() const;
  friend bool operator==(const ColorType&, const ColorType&) = default;
};

/// Maximum degree at most 3 and all degree-3 vertices on
/// one path. Throws InputError if `t` is not a tree.
bool is_ubvt(const Graph& t);

ColorType color_type(const Graph& t, Vertex v);

struct TreePart {
  /// Sorted vertex ids of the part (in the original tree's numbering).
  std::span<const Vertex> vertices;
  /// Sorted edges of the part.
  std::span<const Edge> edges;
};

/// Parts stored back to back: part p owns vertices
/// [vertex_start[p], vertex_start[p + 1]) and edges
/// [edge_start[p], edge_start[p + 1]).
struct Decomposition {
  std::vector<Vertex> vertices;
  std::vector<std::int32_t> vertex_start{0};
  std::vector<Edge> edges;
  std::vector<std::int32_t> edge_start{0};
  /// Number of parts containing each vertex.
  std::vector<int> multiplicity;
  int width = 0;

  std::size_t part_count() const { return vertex_start.size() - 1; }
  TreePart part(std::size_t p) const {
    const auto v0 = static_cast<std::size_t>(vertex_start[p]);
    const auto e0 = static_cast<std::size_t>(edge_start[p]);
    return {std::span(vertices).subspan(v0, static_cast<std::size_t>(vertex_start[p + 1]) - v0),
            std::span(edges).subspan(e0, static_cast<std::size_t>(edge_start[p + 1]) - e0)};
  }
  /// Appends a part; vertices and edges are sorted on the way in.
  void add_part(std::vector<Vertex> part_vertices, std::vector<Edge> part_edges);
};

/// Describes the first way `d` fails to be a UBVT decomposition of `t`
/// (edge partition, connected parts, every part a UBVT, consistent counts).
std::optional<std::string> check_decomposition(const Graph& t, const Decomposition& d);

struct UnitBarTreeResult {
  int ub = 1;
  int max_degree = 0;
  /// True when the first pass halted and the widened prune budgets were used.
  bool widened = false;
  Decomposition decomposition;
};

/// Linear-time computation of ub(T) by post-order PRUNE/COLOR. The first
/// pass prunes at most ceil(D/3)-1 subtrees at non-root vertices and ceil(D/3)
/// at the root; if it halts, a second pass with both budgets raised by one
/// produces the decomposition. Throws InputError if `t` is not a tree.
UnitBarTreeResult unit_bar_tree(const Graph& t, Vertex root = 0);

/// One bar per vertex: the spine zig-zags between heights 0 and 1 in steps
/// of 3/4, and each pendant leg is an aligned column below (even spine
/// position) or above (odd) its spine bar. Throws InputError unless `t` is a
/// UBVT.
Layout ubvt_layout(const Graph& t);

/// Disjoint union of ubvt_layout over the parts of unit_bar_tree(t, root).
Layout tree_layout(const Graph& t, Vertex root = 0);

/// A tree is a unit rectangle visibility graph iff ub(T) <= 2.
bool is_unit_rectangle_tree(const Graph& t);

}  // namespace ubv
