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

#include "ubv/layout.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "ubv/error.hpp"

namespace ubv {

Vertex Layout::label_bound() const {
  Vertex bound = 0;
  for (const Bar& b : bars) bound = std::max(bound, b.vertex + 1);
  return bound;
}

std::optional<BarPair> find_intersection(const Layout& layout) {
  const auto& bars = layout.bars;
  std::vector<std::size_t> order(bars.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (bars[a].y != bars[b].y) return bars[a].y < bars[b].y;
    if (bars[a].x != bars[b].x) return bars[a].x < bars[b].x;
    return a < b;
  });
  // Within one height, any intersecting pair implies an intersecting
  // neighbouring pair in x-order.
  for (std::size_t k = 1; k < order.size(); ++k) {
    const Bar& prev = bars[order[k - 1]];
    const Bar& cur = bars[order[k]];
    if (prev.y == cur.y && cur.x < prev.right()) {
      return BarPair{std::min(order[k - 1], order[k]), std::max(order[k - 1], order[k])};
    }
  }
  return std::nullopt;
}

void require_nonintersecting(const Layout& layout) {
  if (auto pair = find_intersection(layout)) {
    throw InvalidLayoutError("bars " + std::to_string(pair->first) + " and " +
                                 std::to_string(pair->second) +
                                 " lie at the same height and intersect",
                             pair->first, pair->second);
  }
}

namespace {

struct ActiveKey {
  Rational y;
  std::size_t index;

  friend bool operator<(const ActiveKey& a, const ActiveKey& b) {
    if (a.y != b.y) return a.y < b.y;
    return a.index < b.index;
  }
};

std::vector<BarPair> sweep(const Layout& layout) {
  const auto& bars = layout.bars;
  const std::size_t count = bars.size();
  std::vector<std::size_t> by_start(count), by_end(count);
  std::iota(by_start.begin(), by_start.end(), 0);
  std::iota(by_end.begin(), by_end.end(), 0);
  // Unit length: ordering by left endpoint also orders right endpoints.
  std::sort(by_start.begin(), by_start.end(),
            [&](std::size_t a, std::size_t b) { return bars[a].x < bars[b].x; });
  by_end = by_start;

  std::set<ActiveKey> active;
  std::vector<BarPair> pairs;
  std::vector<std::size_t> inserted, removed;
  auto emit = [&](std::set<ActiveKey>::iterator lower) {
    auto upper = std::next(lower);
    if (upper == active.end()) return;
    std::size_t a = lower->index, b = upper->index;
    pairs.emplace_back(std::min(a, b), std::max(a, b));
  };

  std::size_t next_start = 0, next_end = 0;
  while (next_end < count) {
    Rational event = bars[by_end[next_end]].right();
    if (next_start < count && bars[by_start[next_start]].x < event) {
      event = bars[by_start[next_start]].x;
    }
    removed.clear();
    inserted.clear();
    while (next_end < count && bars[by_end[next_end]].right() == event) {
      std::size_t i = by_end[next_end++];
      active.erase({bars[i].y, i});
      removed.push_back(i);
    }
    while (next_start < count && bars[by_start[next_start]].x == event) {
      std::size_t i = by_start[next_start++];
      active.insert({bars[i].y, i});
      inserted.push_back(i);
    }
    // Active bars all end after `event`, so a slab of positive width follows
    // whenever the set is nonempty. New adjacencies can only appear next to
    // an inserted bar or across the gap left by a removed one.
    if (active.empty()) continue;
    for (std::size_t i : inserted) {
      auto it = active.find({bars[i].y, i});
      if (it != active.begin()) emit(std::prev(it));
      emit(it);
    }
    for (std::size_t i : removed) {
      auto it = active.lower_bound({bars[i].y, i});
      if (it != active.begin() && it != active.end()) emit(std::prev(it));
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

}  // namespace

Visibilities extract_visibilities(const Layout& layout) {
  return extract_visibilities(layout, layout.label_bound());
}

Visibilities extract_visibilities(const Layout& layout, Vertex vertex_count) {
  require_nonintersecting(layout);
  Visibilities result;
  result.bar_pairs = sweep(layout);
  std::vector<Edge> edges;
  edges.reserve(result.bar_pairs.size());
  for (auto [a, b] : result.bar_pairs) {
    Vertex va = layout.bars[a].vertex, vb = layout.bars[b].vertex;
    if (va == vb) {
      ++result.self_visibilities;
    } else {
      edges.emplace_back(va, vb);
    }
  }
  result.vertex_graph = Graph(vertex_count, edges);
  return result;
}

Multiplicity multiplicity_report(const Layout& layout) {
  return multiplicity_report(layout, layout.label_bound());
}

Multiplicity multiplicity_report(const Layout& layout, Vertex vertex_count) {
  Multiplicity m;
  m.count.assign(std::max(vertex_count, layout.label_bound()), 0);
  for (const Bar& b : layout.bars) {
    if (b.vertex < 0) throw InputError("negative bar label");
    m.max = std::max(m.max, ++m.count[b.vertex]);
  }
  m.count.resize(vertex_count);
  return m;
}

VerifyReport verify_representation(const Layout& layout, const Graph& target) {
  VerifyReport report;
  report.bar_count = layout.size();
  for (const Bar& b : layout.bars) {
    if (b.vertex < 0 || b.vertex >= target.vertex_count()) {
      throw InputError("bar labeled " + std::to_string(b.vertex) +
                       " but the target graph has " +
                       std::to_string(target.vertex_count()) + " vertices");
    }
  }
  Multiplicity mult = multiplicity_report(layout, target.vertex_count());
  report.multiplicity = mult.count;
  report.max_multiplicity = mult.max;
  for (Vertex v = 0; v < target.vertex_count(); ++v) {
    if (mult.count[v] == 0) report.unlabeled_vertices.push_back(v);
  }
  report.intersecting_pair = find_intersection(layout);
  report.is_valid_layout =
      !report.intersecting_pair && report.unlabeled_vertices.empty();
  if (report.intersecting_pair) return report;

  Visibilities vis = extract_visibilities(layout, target.vertex_count());
  report.self_visibilities = vis.self_visibilities;
  const auto& seen = vis.vertex_graph.edges();
  const auto& want = target.edges();
  std::set_difference(want.begin(), want.end(), seen.begin(), seen.end(),
                      std::back_inserter(report.missing_edges));
  std::set_difference(seen.begin(), seen.end(), want.begin(), want.end(),
                      std::back_inserter(report.forbidden_visibilities));
  report.represents_target = report.is_valid_layout &&
                             report.missing_edges.empty() &&
                             report.forbidden_visibilities.empty();
  return report;
}

Layout perturb_distinct_y(const Layout& layout) {
  require_nonintersecting(layout);
  Layout out = layout;
  for (;;) {
    std::map<Rational, std::vector<std::size_t>> levels;
    for (std::size_t i = 0; i < out.bars.size(); ++i) levels[out.bars[i].y].push_back(i);
    if (levels.size() == out.bars.size()) return out;

    Rational gap = 2;
    for (auto it = levels.begin(); std::next(it) != levels.end(); ++it) {
      gap = std::min(gap, std::next(it)->first - it->first);
    }
    const Rational lift = gap / 2;
    for (auto& [y, members] : levels) {
      if (members.size() < 2) continue;
      std::size_t pick = *std::max_element(
          members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
            return out.bars[a].x < out.bars[b].x;
          });
      out.bars[pick].y += lift;
    }
  }
}

Layout translated(const Layout& layout, const Rational& dx, const Rational& dy) {
  Layout out = layout;
  for (Bar& b : out.bars) {
    b.x += dx;
    b.y += dy;
  }
  return out;
}

Layout disjoint_union(const Layout& a, const Layout& b) {
  const Layout parts[] = {a, b};
  return disjoint_union(parts);
}

Layout disjoint_union(std::span<const Layout> parts) {
  Layout out;
  std::optional<Rational> max_x;
  for (const Layout& part : parts) {
    if (part.empty()) continue;
    Rational lo = part.bars.front().x, hi = lo;
    for (const Bar& bar : part.bars) {
      lo = std::min(lo, bar.x);
      hi = std::max(hi, bar.x);
    }
    // The previous projection ends at max_x + 1; leave a unit gap after it.
    Rational shift = max_x ? *max_x + 2 - lo : Rational(0);
    for (Bar bar : part.bars) {
      bar.x += shift;
      out.bars.push_back(bar);
    }
    max_x = hi + shift;
  }
  return out;
}

}  // namespace ubv
