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

#include "ubv/tree.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "ubv/error.hpp"

namespace ubv {

RootedTree::RootedTree(const Graph& t, Vertex root) : root_(root) {
  if (!t.is_tree()) throw InputError("input graph is not a tree");
  if (root < 0 || root >= t.vertex_count()) {
    throw InputError("root " + std::to_string(root) + " is not a vertex of the tree");
  }
  const Vertex n = t.vertex_count();
  parent_.assign(n, -1);
  offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    offsets_[v + 1] = offsets_[v] + t.degree(v) - (v == root ? 0 : 1);
  }
  children_.resize(n > 0 ? n - 1 : 0);
  preorder_.reserve(n);

  std::vector<Vertex> stack{root};
  std::vector<std::int32_t> fill(offsets_.begin(), offsets_.end() - 1);
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    preorder_.push_back(v);
    auto nbrs = t.neighbors(v);
    for (Vertex w : nbrs) {
      if (w == parent_[v]) continue;
      parent_[w] = v;
      children_[fill[v]++] = w;
    }
    // Reverse push so that the smallest child is visited first.
    for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it) {
      if (*it != parent_[v]) stack.push_back(*it);
    }
  }
}

namespace {

/// BFS distances from `source` inside the vertices flagged in `inside`.
std::vector<int> distances(const Graph& t, Vertex source, const std::vector<char>& inside) {
  std::vector<int> dist(t.vertex_count(), -1);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : t.neighbors(v)) {
      if (inside[w] && dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

/// Whether every vertex of `targets` lies on a single path of the subtree
/// induced by `inside`. The two mutually farthest targets are the only
/// possible path ends.
bool on_one_path(const Graph& t, const std::vector<Vertex>& targets,
                 const std::vector<char>& inside) {
  if (targets.size() <= 2) return true;
  auto farthest = [&](const std::vector<int>& dist) {
    Vertex best = targets.front();
    for (Vertex v : targets)
      if (dist[v] > dist[best]) best = v;
    return best;
  };
  Vertex a = farthest(distances(t, targets.front(), inside));
  std::vector<int> from_a = distances(t, a, inside);
  Vertex b = farthest(from_a);
  std::vector<int> from_b = distances(t, b, inside);
  for (Vertex v : targets) {
    if (from_a[v] + from_b[v] != from_a[b]) return false;
  }
  return true;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

bool ColorType::is_ubvt_type() const {
  static const std::array<const char*, 10> kTypes = {"RG",  "R",  "YYG", "YY", "YGG",
                                                     "YG",  "Y",  "GGG", "GG", "G"};
  return std::find(kTypes.begin(), kTypes.end(), code) != kTypes.end();
}

bool is_ubvt(const Graph& t) {
  if (!t.is_tree()) throw InputError("input graph is not a tree");
  std::vector<Vertex> branching;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (t.degree(v) > 3) return false;
    if (t.degree(v) == 3) branching.push_back(v);
  }
  return on_one_path(t, branching, std::vector<char>(t.vertex_count(), 1));
}

ColorType color_type(const Graph& t, Vertex v) {
  if (!t.is_tree()) throw InputError("input graph is not a tree");
  if (v < 0 || v >= t.vertex_count()) throw InputError("vertex out of range");
  std::string reds, yellows, greens, bad;
  for (Vertex first : t.neighbors(v)) {
    std::vector<char> inside(t.vertex_count(), 0);
    inside[v] = 1;
    inside[first] = 1;
    std::vector<Vertex> branch{first};
    for (std::size_t head = 0; head < branch.size(); ++head) {
      for (Vertex w : t.neighbors(branch[head])) {
        if (!inside[w]) {
          inside[w] = 1;
          branch.push_back(w);
        }
      }
    }
    std::vector<Vertex> branching;
    bool too_big = false;
    for (Vertex w : branch) {
      if (t.degree(w) > 3) too_big = true;
      if (t.degree(w) == 3) branching.push_back(w);
    }
    if (too_big || !on_one_path(t, branching, inside)) {
      bad += 'X';
    } else if (branching.empty()) {
      greens += 'G';
    } else {
      branching.push_back(v);
      if (on_one_path(t, branching, inside)) {
        yellows += 'Y';
      } else {
        reds += 'R';
      }
    }
  }
  return {bad + reds + yellows + greens};
}

namespace {

/// The tree hung from its root in BFS order. Every vertex's children are
/// contiguous and follow it, so bottom-up and top-down passes are plain
/// scans over positions.
struct BfsTree {
  std::vector<Vertex> order;         // position -> vertex id
  std::vector<std::int32_t> parent;  // position -> parent position, -1 at root
};

void bfs_tree(const Graph& t, Vertex root, BfsTree& b) {
  const Vertex n = t.vertex_count();
  if (n == 0 || t.edge_count() != static_cast<std::size_t>(n) - 1) {
    throw InputError("input graph is not a tree");
  }
  if (root < 0 || root >= n) {
    throw InputError("root " + std::to_string(root) + " is not a vertex of the tree");
  }
  b.order.resize(n);
  b.parent.resize(n);
  b.order[0] = root;
  b.parent[0] = -1;
  std::int32_t tail = 1;
  constexpr std::int32_t kAhead = 16;
  for (std::int32_t h = 0; h < n; ++h) {
    if (h >= tail) throw InputError("input graph is not a tree");
    if (h + kAhead < tail) __builtin_prefetch(t.neighbors(b.order[h + kAhead]).data());
    const Vertex v = b.order[h];
    const Vertex up = h == 0 ? -1 : b.order[b.parent[h]];
    for (Vertex w : t.neighbors(v)) {
      if (w == up) continue;
      if (tail == n) throw InputError("input graph is not a tree");
      b.order[tail] = w;
      b.parent[tail] = h;
      ++tail;
    }
  }
}

struct PassResult {
  bool completed = false;
  /// For each non-root position x: the part containing edge (x, parent(x)).
  std::vector<std::int32_t> edge_part;
  /// The position each part was pruned at.
  std::vector<std::int32_t> part_top;
  std::vector<EdgeColor> color;
};

/// Per-thread buffers reused across calls, so large trees do not pay for
/// fresh pages on every call.
struct Workspace {
  BfsTree tree;
  PassResult pass;
};

struct PrunePattern {
  int red, yellow, green;
};

// Highest priority first: RG, R, YYG, YY, YGG, YG, Y, GGG, GG, G.
constexpr std::array<PrunePattern, 10> kPrunePriority = {{{1, 0, 1},
                                                          {1, 0, 0},
                                                          {0, 2, 1},
                                                          {0, 2, 0},
                                                          {0, 1, 2},
                                                          {0, 1, 1},
                                                          {0, 1, 0},
                                                          {0, 0, 3},
                                                          {0, 0, 2},
                                                          {0, 0, 1}}};

void run_pass(const BfsTree& tree, int nonroot_budget, int root_budget, PassResult& result) {
  const auto n = static_cast<std::int32_t>(tree.order.size());
  result.completed = false;
  result.part_top.clear();
  result.part_top.reserve(static_cast<std::size_t>(n));
  std::vector<EdgeColor>& color = result.color;
  color.assign(n, EdgeColor::Green);
  std::vector<std::int32_t>& pruned_part = result.edge_part;
  pruned_part.assign(n, -1);
  std::array<std::vector<std::int32_t>, 3> bucket;  // red, yellow, green children

  std::int32_t children_end = n;
  for (std::int32_t v = n - 1; v >= 0; --v) {
    for (auto& b : bucket) b.clear();
    std::int32_t children_begin = children_end;
    while (children_begin > 1 && tree.parent[children_begin - 1] == v) --children_begin;
    for (std::int32_t x = children_begin; x < children_end; ++x) {
      switch (color[x]) {
        case EdgeColor::Red: bucket[0].push_back(x); break;
        case EdgeColor::Yellow: bucket[1].push_back(x); break;
        case EdgeColor::Green: bucket[2].push_back(x); break;
      }
    }
    children_end = children_begin;
    // Buckets are consumed from the front (lowest id first).
    std::array<std::size_t, 3> used{0, 0, 0};
    auto left = [&](int c) { return static_cast<int>(bucket[c].size() - used[c]); };

    // PRUNE
    const int budget = v == 0 ? root_budget : nonroot_budget;
    for (int pruned = 0; pruned < budget; ++pruned) {
      const PrunePattern* pick = nullptr;
      for (const auto& p : kPrunePriority) {
        if (left(0) >= p.red && left(1) >= p.yellow && left(2) >= p.green) {
          pick = &p;
          break;
        }
      }
      if (pick == nullptr) break;
      const auto part = static_cast<std::int32_t>(result.part_top.size());
      result.part_top.push_back(v);
      const std::array<int, 3> take = {pick->red, pick->yellow, pick->green};
      for (int c = 0; c < 3; ++c) {
        for (int k = 0; k < take[c]; ++k) pruned_part[bucket[c][used[c]++]] = part;
      }
    }

    // COLOR
    const int reds = left(0), yellows = left(1), greens = left(2);
    const int remaining = reds + yellows + greens;
    if (v == 0) {
      if (remaining != 0) return;
      break;
    }
    if (remaining >= 3 || (remaining == 2 && reds > 0)) return;
    if (remaining == 0 || (remaining == 1 && greens == 1)) {
      color[v] = EdgeColor::Green;
    } else if ((remaining == 2 && yellows < 2) || (remaining == 1 && yellows == 1)) {
      color[v] = EdgeColor::Yellow;  // GG, YG, or Y
    } else {
      color[v] = EdgeColor::Red;  // YY or R
    }
  }

  // Edges left unpruned at a vertex travel with that vertex's parent edge.
  for (std::int32_t x = 1; x < n; ++x) {
    if (pruned_part[x] < 0) pruned_part[x] = pruned_part[tree.parent[x]];
  }
  result.completed = true;
}

Decomposition assemble(const BfsTree& tree, const PassResult& pass) {
  Decomposition d;
  const auto n = static_cast<std::int32_t>(tree.order.size());
  const auto parts = static_cast<std::int32_t>(pass.part_top.size());
  // Counting sort of the non-root positions by part. Each part holds its top
  // vertex plus the lower end of each of its edges.
  auto& start = d.vertex_start;
  start.assign(static_cast<std::size_t>(parts) + 1, 1);
  start[0] = 0;
  for (std::int32_t x = 1; x < n; ++x) ++start[pass.edge_part[x] + 1];
  std::partial_sum(start.begin(), start.end(), start.begin());

  d.vertices.resize(static_cast<std::size_t>(start[parts]));
  d.edges.resize(static_cast<std::size_t>(n) - 1);
  for (std::int32_t p = 0; p < parts; ++p) d.vertices[start[p]++] = tree.order[pass.part_top[p]];
  for (std::int32_t x = 1; x < n; ++x) {
    const std::int32_t p = pass.edge_part[x];
    const Vertex v = tree.order[x];
    d.edges[start[p] - p - 1] = Edge(v, tree.order[tree.parent[x]]);
    d.vertices[start[p]++] = v;
  }
  // Every cursor now sits on the next part's start.
  std::copy_backward(start.begin(), start.end() - 1, start.end());
  start[0] = 0;
  d.edge_start.resize(start.size());
  for (std::int32_t p = 0; p <= parts; ++p) d.edge_start[p] = start[p] - p;

  // A vertex lies in its parent edge's part and in every part pruned at it.
  d.multiplicity.assign(n, 1);
  d.multiplicity[tree.order[0]] = 0;
  for (std::int32_t top : pass.part_top) ++d.multiplicity[tree.order[top]];
  d.width = *std::max_element(d.multiplicity.begin(), d.multiplicity.end());
  for (std::int32_t p = 0; p < parts; ++p) {
    std::sort(d.vertices.begin() + start[p], d.vertices.begin() + start[p + 1]);
    std::sort(d.edges.begin() + d.edge_start[p], d.edges.begin() + d.edge_start[p + 1]);
  }
  return d;
}

}  // namespace

UnitBarTreeResult unit_bar_tree(const Graph& t, Vertex root) {
  thread_local Workspace work;
  const BfsTree& tree = work.tree;
  bfs_tree(t, root, work.tree);
  UnitBarTreeResult result;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    result.max_degree = std::max(result.max_degree, t.degree(v));
  }
  if (result.max_degree == 0) {
    result.ub = 1;
    result.decomposition.add_part({root}, {});
    result.decomposition.multiplicity = {1};
    result.decomposition.width = 1;
    return result;
  }
  const int lower = ceil_div(result.max_degree, 3);
  PassResult& pass = work.pass;
  run_pass(tree, lower - 1, lower, pass);
  if (pass.completed) {
    result.ub = lower;
  } else {
    result.widened = true;
    result.ub = ceil_div(result.max_degree + 1, 3);
    run_pass(tree, lower, lower + 1, pass);
    if (!pass.completed) throw std::logic_error("widened pruning pass halted");
  }
  result.decomposition = assemble(tree, pass);
  return result;
}

void Decomposition::add_part(std::vector<Vertex> part_vertices, std::vector<Edge> part_edges) {
  std::sort(part_vertices.begin(), part_vertices.end());
  std::sort(part_edges.begin(), part_edges.end());
  vertices.insert(vertices.end(), part_vertices.begin(), part_vertices.end());
  edges.insert(edges.end(), part_edges.begin(), part_edges.end());
  vertex_start.push_back(static_cast<std::int32_t>(vertices.size()));
  edge_start.push_back(static_cast<std::int32_t>(edges.size()));
}

std::optional<std::string> check_decomposition(const Graph& t, const Decomposition& d) {
  std::vector<Edge> all;
  std::vector<int> count(t.vertex_count(), 0);
  int width = 0;
  for (std::size_t p = 0; p < d.part_count(); ++p) {
    const TreePart part = d.part(p);
    const std::string tag = "part " + std::to_string(p);
    if (part.vertices.empty()) return tag + " has no vertices";
    std::vector<Vertex> local(t.vertex_count(), -1);
    for (std::size_t i = 0; i < part.vertices.size(); ++i) {
      Vertex v = part.vertices[i];
      if (v < 0 || v >= t.vertex_count()) return tag + " names a vertex outside the tree";
      if (local[v] >= 0) return tag + " repeats vertex " + std::to_string(v);
      local[v] = static_cast<Vertex>(i);
      width = std::max(width, ++count[v]);
    }
    std::vector<Edge> local_edges;
    for (const Edge& e : part.edges) {
      if (!t.has_edge(e.u, e.v)) return tag + " uses a non-edge";
      if (local[e.u] < 0 || local[e.v] < 0) return tag + " has an edge off its vertex set";
      local_edges.emplace_back(local[e.u], local[e.v]);
      all.push_back(e);
    }
    Graph sub(static_cast<Vertex>(part.vertices.size()), local_edges);
    if (!sub.is_tree()) return tag + " is not a connected subtree";
    if (!is_ubvt(sub)) return tag + " is not a UBVT";
  }
  std::sort(all.begin(), all.end());
  if (all != t.edges()) return std::string("parts do not partition the edge set");
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (count[v] == 0) return "vertex " + std::to_string(v) + " is in no part";
  }
  if (count != d.multiplicity) return std::string("multiplicity map is inconsistent");
  if (width != d.width) return std::string("width is inconsistent");
  return std::nullopt;
}

namespace {

/// Walks from `from` through `next` while the walk stays on degree-2
/// vertices; returns the visited vertices starting with `next`.
std::vector<Vertex> walk_out(const Graph& t, Vertex from, Vertex next) {
  std::vector<Vertex> out{next};
  Vertex prev = from, cur = next;
  while (t.degree(cur) == 2) {
    auto nb = t.neighbors(cur);
    Vertex step = nb[0] == prev ? nb[1] : nb[0];
    out.push_back(step);
    prev = cur;
    cur = step;
  }
  return out;
}

std::vector<Vertex> spine_of(const Graph& t) {
  const Vertex n = t.vertex_count();
  if (n == 1) return {0};
  std::vector<Vertex> branching;
  for (Vertex v = 0; v < n; ++v)
    if (t.degree(v) == 3) branching.push_back(v);

  if (branching.empty()) {
    Vertex end = 0;
    while (t.degree(end) != 1) ++end;
    std::vector<Vertex> spine{end};
    auto rest = walk_out(t, end, t.neighbors(end)[0]);
    spine.insert(spine.end(), rest.begin(), rest.end());
    return spine;
  }

  const std::vector<char> all(n, 1);
  auto farthest = [&](Vertex from) {
    std::vector<int> dist = distances(t, from, all);
    Vertex best = branching.front();
    for (Vertex v : branching)
      if (dist[v] > dist[best]) best = v;
    return best;
  };
  const Vertex a = farthest(branching.front());
  const Vertex b = farthest(a);

  // a..b through parent pointers of a BFS from b.
  std::vector<Vertex> parent(n, -1);
  {
    std::vector<Vertex> queue{b};
    parent[b] = b;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : t.neighbors(queue[head])) {
        if (parent[w] < 0) {
          parent[w] = queue[head];
          queue.push_back(w);
        }
      }
    }
  }
  std::vector<Vertex> middle{a};
  while (middle.back() != b) middle.push_back(parent[middle.back()]);

  std::vector<char> on_middle(n, 0);
  for (Vertex v : middle) on_middle[v] = 1;
  auto off_middle = [&](Vertex v) {
    std::vector<Vertex> out;
    for (Vertex w : t.neighbors(v))
      if (!on_middle[w]) out.push_back(w);
    return out;
  };

  std::vector<Vertex> head_ext, tail_ext;
  if (a == b) {
    auto free = off_middle(a);
    head_ext = walk_out(t, a, free[0]);
    tail_ext = walk_out(t, a, free[1]);
  } else {
    head_ext = walk_out(t, a, off_middle(a)[0]);
    tail_ext = walk_out(t, b, off_middle(b)[0]);
  }
  std::vector<Vertex> spine(head_ext.rbegin(), head_ext.rend());
  spine.insert(spine.end(), middle.begin(), middle.end());
  spine.insert(spine.end(), tail_ext.begin(), tail_ext.end());
  return spine;
}

}  // namespace

Layout ubvt_layout(const Graph& t) {
  if (!is_ubvt(t)) throw InputError("tree is not a subdivided caterpillar of maximum degree 3");
  const Vertex n = t.vertex_count();
  const std::vector<Vertex> spine = spine_of(t);
  std::vector<char> on_spine(n, 0);
  for (Vertex v : spine) on_spine[v] = 1;

  std::vector<Bar> by_vertex(n);
  for (std::size_t i = 0; i < spine.size(); ++i) {
    const auto pos = static_cast<std::int64_t>(i);
    const Rational x(3 * pos, 4);
    const bool low = pos % 2 == 0;
    by_vertex[spine[i]] = {x, low ? 0 : 1, spine[i]};
    for (Vertex w : t.neighbors(spine[i])) {
      if (on_spine[w]) continue;
      std::int64_t depth = 1;
      for (Vertex leg : walk_out(t, spine[i], w)) {
        by_vertex[leg] = {x, low ? -depth : 1 + depth, leg};
        ++depth;
      }
    }
  }
  return Layout{std::move(by_vertex)};
}

Layout tree_layout(const Graph& t, Vertex root) {
  const UnitBarTreeResult result = unit_bar_tree(t, root);
  std::vector<Layout> pieces;
  const Decomposition& d = result.decomposition;
  pieces.reserve(d.part_count());
  std::vector<Vertex> local(t.vertex_count(), -1);
  for (std::size_t p = 0; p < d.part_count(); ++p) {
    const TreePart part = d.part(p);
    for (std::size_t i = 0; i < part.vertices.size(); ++i) {
      local[part.vertices[i]] = static_cast<Vertex>(i);
    }
    std::vector<Edge> edges;
    edges.reserve(part.edges.size());
    for (const Edge& e : part.edges) edges.emplace_back(local[e.u], local[e.v]);
    Layout piece = ubvt_layout(Graph(static_cast<Vertex>(part.vertices.size()), edges));
    for (Bar& bar : piece.bars) bar.vertex = part.vertices[bar.vertex];
    pieces.push_back(std::move(piece));
  }
  return disjoint_union(pieces);
}

bool is_unit_rectangle_tree(const Graph& t) { return unit_bar_tree(t).ub <= 2; }

}  // namespace ubv
