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

#include "ubv/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ubv/error.hpp"

namespace ubv {

Graph::Graph(Vertex vertex_count, std::span<const Edge> edges)
    : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw InputError("negative vertex count");
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= vertex_count) {
      throw InputError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                       " has an endpoint outside 0.." +
                       std::to_string(vertex_count - 1));
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  offsets_.assign(static_cast<std::size_t>(vertex_count) + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adjacency_.resize(edges_.size() * 2);
  std::vector<std::int32_t> fill(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted, so each list comes out ascending.
  for (const Edge& e : edges_) adjacency_[fill[e.u]++] = e.v;
  for (const Edge& e : edges_) adjacency_[fill[e.v]++] = e.u;
  for (Vertex v = 0; v < vertex_count; ++v) {
    std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
  }
}

Graph::Graph(Vertex vertex_count,
             std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  std::vector<Edge> list;
  for (auto [a, b] : edges) {
    if (a == b) throw InputError("self-loop at vertex " + std::to_string(a));
    list.emplace_back(a, b);
  }
  *this = Graph(vertex_count, list);
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a == b) return false;
  return std::binary_search(edges_.begin(), edges_.end(), Edge(a, b));
}

bool Graph::is_tree() const {
  if (vertex_count_ == 0) return false;
  if (edges_.size() != static_cast<std::size_t>(vertex_count_ - 1)) return false;
  std::vector<char> seen(vertex_count_, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  Vertex reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == vertex_count_;
}

Graph build_graph(Vertex vertex_count, std::span<const Edge> edges) {
  return Graph(vertex_count, edges);
}

bool graphs_equal(const Graph& g, const Graph& h) { return g == h; }

DegreeStats degree_stats(const Graph& g) {
  DegreeStats stats;
  stats.degree.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    stats.degree[v] = g.degree(v);
    stats.max_degree = std::max(stats.max_degree, stats.degree[v]);
  }
  return stats;
}

namespace gen {
namespace {

void require_positive(Vertex n, const char* what) {
  if (n < 1) throw InputError(std::string(what) + " size must be at least 1");
}

}  // namespace

Graph path(Vertex n) {
  require_positive(n, "path");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph star(Vertex n) {
  require_positive(n, "star");
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= n; ++i) edges.emplace_back(0, i);
  return Graph(n + 1, edges);
}

Graph complete(Vertex n) {
  require_positive(n, "complete graph");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph complete_bipartite(Vertex m, Vertex n) {
  require_positive(m, "bipartite side");
  require_positive(n, "bipartite side");
  std::vector<Edge> edges;
  for (Vertex y = 0; y < m; ++y)
    for (Vertex x = 0; x < n; ++x) edges.emplace_back(y, m + x);
  return Graph(m + n, edges);
}

Graph spider(Vertex legs, Vertex leg_len) {
  require_positive(legs, "spider leg count");
  require_positive(leg_len, "spider leg length");
  std::vector<Edge> edges;
  for (Vertex leg = 0; leg < legs; ++leg) {
    Vertex first = 1 + leg * leg_len;
    edges.emplace_back(0, first);
    for (Vertex k = 1; k < leg_len; ++k) edges.emplace_back(first + k - 1, first + k);
  }
  return Graph(1 + legs * leg_len, edges);
}

Graph y_tree() {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= 3; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, 2 * i + 2);
    edges.emplace_back(i, 2 * i + 3);
  }
  return Graph(10, edges);
}

Graph path_join_two(Vertex m) {
  require_positive(m, "join block");
  Vertex len = 2 * m;
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < len; ++i) edges.emplace_back(i, i + 1);
  for (Vertex i = 0; i < len; ++i) {
    edges.emplace_back(i, len);
    edges.emplace_back(i, len + 1);
  }
  return Graph(len + 2, edges);
}

}  // namespace gen
}  // namespace ubv
