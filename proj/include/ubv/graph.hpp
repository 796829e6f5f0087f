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
#include <span>
#include <utility>
#include <vector>

namespace ubv {

using Vertex = std::int32_t;

/// Undirected edge stored with first < second.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Labeled simple graph over vertex ids 0..vertex_count-1. Immutable once
/// built; edges are kept sorted and deduplicated, adjacency lists ascending.
class Graph {
 public:
  Graph() = default;

  /// Throws InputError for an out-of-range endpoint or a self-loop.
  Graph(Vertex vertex_count, std::span<const Edge> edges);
  Graph(Vertex vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  Vertex vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex a, Vertex b) const;

  /// Connected and acyclic (K_1 counts as a tree; the empty graph does not).
  bool is_tree() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  Vertex vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::int32_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

/// Convenience wrapper matching the text-format loader: validates, dedups.
Graph build_graph(Vertex vertex_count, std::span<const Edge> edges);

/// Labeled equality: same vertex count, same edge set. Never isomorphism.
bool graphs_equal(const Graph& g, const Graph& h);

struct DegreeStats {
  int max_degree = 0;
  std::vector<int> degree;
};

DegreeStats degree_stats(const Graph& g);

/// Generators. Canonical numbering is documented per function.
namespace gen {

/// P_n: 0-1-2-...-(n-1).
Graph path(Vertex n);
/// K_{1,n}: hub 0, leaves 1..n.
Graph star(Vertex n);
Graph complete(Vertex n);
/// K_{m,n}: Y = 0..m-1, X = m..m+n-1.
Graph complete_bipartite(Vertex m, Vertex n);
/// Center 0 with `legs` paths of `leg_len` vertices each; leg i occupies
/// ids 1 + i*leg_len .. (i+1)*leg_len, nearest-to-center first.
Graph spider(Vertex legs, Vertex leg_len);
/// The 10-vertex tree: center 0 adjacent to 1, 2, 3; vertex i in {1,2,3}
/// has leaf children 2i+2 and 2i+3.
Graph y_tree();
/// P_{2m} join 2K_1: path 0..2m-1, then u = 2m and w = 2m+1 adjacent to
/// every path vertex but not to each other.
Graph path_join_two(Vertex m);

}  // namespace gen

}  // namespace ubv
