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

#include "ubv/oracles.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "ubv/error.hpp"

namespace ubv::oracle {

std::vector<BarPair> brute_visibilities(const Layout& layout) {
  const auto& bars = layout.bars;
  const std::size_t count = bars.size();
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      if (bars[i].y != bars[j].y) continue;
      Rational gap = bars[i].x - bars[j].x;
      if (gap < 0) gap = -gap;
      if (gap < 1) throw InvalidLayoutError("collinear bars intersect", i, j);
    }
  }

  std::vector<BarPair> out;
  std::vector<std::size_t> between;
  std::vector<Rational> cuts;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      const Bar& a = bars[i];
      const Bar& b = bars[j];
      if (a.y == b.y) continue;
      const Rational lo = std::max(a.x, b.x);
      const Rational hi = std::min(a.x, b.x) + 1;
      if (!(lo < hi)) continue;
      const Rational& bottom = std::min(a.y, b.y);
      const Rational& top = std::max(a.y, b.y);

      between.clear();
      cuts.assign({lo, hi});
      for (std::size_t k = 0; k < count; ++k) {
        const Bar& c = bars[k];
        if (!(bottom < c.y && c.y < top)) continue;
        const Rational c_end = c.x + 1;
        if (!(c.x < hi && lo < c_end)) continue;
        between.push_back(k);
        if (lo < c.x) cuts.push_back(c.x);
        if (c_end < hi) cuts.push_back(c_end);
      }
      std::sort(cuts.begin(), cuts.end());
      cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

      bool sees = false;
      for (std::size_t p = 0; p + 1 < cuts.size() && !sees; ++p) {
        const Rational mid = (cuts[p] + cuts[p + 1]) / 2;
        bool blocked = false;
        for (std::size_t k : between) {
          if (bars[k].x <= mid && mid < bars[k].x + 1) {
            blocked = true;
            break;
          }
        }
        sees = !blocked;
      }
      if (sees) out.emplace_back(i, j);
    }
  }
  return out;
}

namespace {

std::vector<std::vector<int>> all_distances(const Graph& t) {
  const Vertex n = t.vertex_count();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (Vertex s = 0; s < n; ++s) {
    std::vector<Vertex> queue{s};
    dist[s][s] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (Vertex w : t.neighbors(queue[h])) {
        if (dist[s][w] < 0) {
          dist[s][w] = dist[s][queue[h]] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dist;
}

}  // namespace

bool brute_is_ubvt(const Graph& t) {
  std::vector<Vertex> branching;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (t.degree(v) > 3) return false;
    if (t.degree(v) == 3) branching.push_back(v);
  }
  if (branching.size() <= 2) return true;
  const auto dist = all_distances(t);
  auto between = [&](Vertex a, Vertex mid, Vertex b) {
    return dist[a][mid] + dist[mid][b] == dist[a][b];
  };
  for (std::size_t i = 0; i < branching.size(); ++i)
    for (std::size_t j = i + 1; j < branching.size(); ++j)
      for (std::size_t k = j + 1; k < branching.size(); ++k) {
        Vertex a = branching[i], b = branching[j], c = branching[k];
        if (!between(a, b, c) && !between(b, a, c) && !between(a, c, b)) return false;
      }
  return true;
}

namespace {

/// Exhaustive edge-to-part assignment. Edges arrive as (parent, child) in
/// preorder, so a part can only grow at a vertex it already contains and
/// every part stays a connected subtree.
class PartitionSearch {
 public:
  PartitionSearch(const Graph& t, int width)
      : n_(t.vertex_count()), width_(width), count_(n_, 0) {
    std::vector<Vertex> parent(n_, -1);
    std::vector<Vertex> stack{0};
    std::vector<char> seen(n_, 0);
    seen[0] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : t.neighbors(v)) {
        if (seen[w]) continue;
        seen[w] = 1;
        edges_.push_back({v, w});
        stack.push_back(w);
      }
    }
  }

  bool feasible() { return place(0); }

 private:
  struct Part {
    std::vector<Vertex> vertices;  // in insertion order
    std::vector<std::pair<Vertex, Vertex>> edges;
    bool contains(Vertex v) const {
      return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
    }
  };

  static bool part_ok(const Part& part) {
    std::vector<Edge> local;
    auto index = [&](Vertex v) {
      return static_cast<Vertex>(
          std::find(part.vertices.begin(), part.vertices.end(), v) - part.vertices.begin());
    };
    for (auto [a, b] : part.edges) local.emplace_back(index(a), index(b));
    return brute_is_ubvt(Graph(static_cast<Vertex>(part.vertices.size()), local));
  }

  bool place(std::size_t e) {
    if (e == edges_.size()) return true;
    auto [p, x] = edges_[e];
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      Part& part = parts_[i];
      if (!part.contains(p) || count_[x] + 1 > width_) continue;
      part.vertices.push_back(x);
      part.edges.emplace_back(p, x);
      ++count_[x];
      if (part_ok(part) && place(e + 1)) return true;
      --count_[x];
      part.edges.pop_back();
      part.vertices.pop_back();
    }
    if (count_[p] + 1 <= width_ && count_[x] + 1 <= width_) {
      parts_.push_back({{p, x}, {{p, x}}});
      ++count_[p];
      ++count_[x];
      if (place(e + 1)) return true;
      --count_[p];
      --count_[x];
      parts_.pop_back();
    }
    return false;
  }

  Vertex n_;
  int width_;
  std::vector<int> count_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<Part> parts_;
};

}  // namespace

int brute_ub_tree(const Graph& t) {
  if (!t.is_tree()) throw InputError("input graph is not a tree");
  if (t.edge_count() > kMaxBruteEdges) {
    throw InputError("exhaustive search is limited to " + std::to_string(kMaxBruteEdges) +
                     " edges");
  }
  if (t.vertex_count() == 1) return 1;
  int max_degree = 0;
  for (Vertex v = 0; v < t.vertex_count(); ++v) max_degree = std::max(max_degree, t.degree(v));
  for (int width = std::max(1, (max_degree + 2) / 3);; ++width) {
    if (PartitionSearch(t, width).feasible()) return width;
  }
}

Graph prufer_decode(const std::vector<Vertex>& sequence) {
  const Vertex n = static_cast<Vertex>(sequence.size()) + 2;
  std::vector<int> degree(n, 1);
  for (Vertex v : sequence) {
    if (v < 0 || v >= n) throw InputError("Prufer entry out of range");
    ++degree[v];
  }
  std::vector<Edge> edges;
  for (Vertex v : sequence) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, v);
    --degree[leaf];
    --degree[v];
  }
  Vertex a = -1, b = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) (a < 0 ? a : b) = v;
  }
  edges.emplace_back(a, b);
  return Graph(n, edges);
}

namespace {

std::string encode(const Graph& t, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : t.neighbors(v))
    if (w != parent) kids.push_back(encode(t, w, v));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  return out + ")";
}

}  // namespace

std::string canonical_form(const Graph& t) {
  const Vertex n = t.vertex_count();
  if (n == 0) return "";
  // Peel leaves until one or two centers remain.
  std::vector<int> degree(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] <= 1) layer.push_back(v);
  }
  Vertex remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<Vertex>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex w : t.neighbors(v)) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::string best;
  for (Vertex c : layer) {
    std::string s = encode(t, c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

std::uint64_t enumerate_trees(Vertex n, bool labeled,
                              const std::function<void(const Graph&)>& visit) {
  if (n < 1 || n > 10) throw InputError("tree enumeration supports 1 <= n <= 10");
  if (n == 1) {
    visit(Graph(1, std::span<const Edge>{}));
    return 1;
  }
  std::uint64_t visited = 0;
  if (labeled) {
    std::vector<Vertex> seq(n - 2, 0);
    for (;;) {
      visit(prufer_decode(seq));
      ++visited;
      std::size_t pos = 0;
      while (pos < seq.size() && ++seq[pos] == n) seq[pos++] = 0;
      if (pos == seq.size()) break;
    }
    return visited;
  }

  std::map<std::string, Graph> level{{canonical_form(Graph(1, std::span<const Edge>{})),
                                      Graph(1, std::span<const Edge>{})}};
  for (Vertex size = 2; size <= n; ++size) {
    std::map<std::string, Graph> next;
    for (const auto& [key, tree] : level) {
      for (Vertex v = 0; v < tree.vertex_count(); ++v) {
        std::vector<Edge> edges = tree.edges();
        edges.emplace_back(v, size - 1);
        Graph grown(size, edges);
        next.emplace(canonical_form(grown), std::move(grown));
      }
    }
    level = std::move(next);
  }
  for (const auto& [key, tree] : level) {
    visit(tree);
    ++visited;
  }
  return visited;
}

}  // namespace ubv::oracle
