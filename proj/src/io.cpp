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

#include "ubv/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "ubv/error.hpp"

namespace ubv::io {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
           line[i] != '#')
      ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

/// Calls `handle(tokens, line_number)` for every non-blank line.
template <typename Handler>
void for_each_line(std::string_view text, Handler handle) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    auto tokens = tokenize(line);
    if (!tokens.empty()) handle(tokens, line_no);
  }
}

std::int64_t parse_int(const Token& token, std::size_t line) {
  std::int64_t value = 0;
  const char* first = token.text.data();
  const char* last = first + token.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("expected an integer, got '" + std::string(token.text) + "'", line,
                     token.column);
  }
  return value;
}

void expect_arity(const std::vector<Token>& tokens, std::size_t want, std::size_t line,
                  const char* usage) {
  if (tokens.size() == want) return;
  const std::size_t column =
      tokens.size() > want ? tokens[want].column : tokens.back().column;
  throw ParseError(std::string("expected '") + usage + "'", line, column);
}

std::string fmt(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  return buf;
}

template <typename T>
std::string join(const std::vector<T>& items, auto show) {
  if (items.empty()) return "none";
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += ' ';
    out += show(item);
  }
  return out;
}

/// x-coordinate of an open vertical channel between bars a and b, if any.
std::optional<Rational> channel(const Layout& layout, std::size_t a, std::size_t b) {
  const auto& bars = layout.bars;
  const Rational lo = std::max(bars[a].x, bars[b].x);
  const Rational hi = std::min(bars[a].x, bars[b].x) + 1;
  const Rational bottom = std::min(bars[a].y, bars[b].y);
  const Rational top = std::max(bars[a].y, bars[b].y);
  std::vector<std::pair<Rational, Rational>> blockers;
  std::vector<Rational> cuts{lo, hi};
  for (const Bar& c : bars) {
    if (!(bottom < c.y && c.y < top) || !(c.x < hi && lo < c.right())) continue;
    blockers.emplace_back(c.x, c.right());
    if (lo < c.x) cuts.push_back(c.x);
    if (c.right() < hi) cuts.push_back(c.right());
  }
  std::sort(cuts.begin(), cuts.end());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i] == cuts[i + 1]) continue;
    Rational mid = (cuts[i] + cuts[i + 1]) / 2;
    bool open = std::none_of(blockers.begin(), blockers.end(), [&](const auto& iv) {
      return iv.first <= mid && mid < iv.second;
    });
    if (open) return mid;
  }
  return std::nullopt;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << contents;
}

Graph parse_graph(std::string_view text) {
  std::optional<Vertex> count;
  std::vector<Edge> edges;
  for_each_line(text, [&](const std::vector<Token>& tokens, std::size_t line) {
    const Token& head = tokens.front();
    if (head.text == "graph") {
      if (count) throw ParseError("duplicate 'graph' header", line, head.column);
      expect_arity(tokens, 2, line, "graph <vertex_count>");
      std::int64_t n = parse_int(tokens[1], line);
      if (n < 1 || n > (std::int64_t{1} << 30)) {
        throw ParseError("vertex count out of range", line, tokens[1].column);
      }
      count = static_cast<Vertex>(n);
    } else if (head.text == "edge") {
      if (!count) throw ParseError("'edge' before 'graph' header", line, head.column);
      expect_arity(tokens, 3, line, "edge <u> <v>");
      Vertex ends[2];
      for (int k = 0; k < 2; ++k) {
        std::int64_t v = parse_int(tokens[1 + k], line);
        if (v < 0 || v >= *count) {
          throw ParseError("vertex " + std::to_string(v) + " out of range [0, " +
                               std::to_string(*count) + ")",
                           line, tokens[1 + k].column);
        }
        ends[k] = static_cast<Vertex>(v);
      }
      if (ends[0] == ends[1]) throw ParseError("self-loop", line, tokens[1].column);
      edges.emplace_back(ends[0], ends[1]);
    } else {
      throw ParseError("unknown directive '" + std::string(head.text) + "'", line,
                       head.column);
    }
  });
  if (!count) throw ParseError("missing 'graph' header", 0, 0);
  return build_graph(*count, edges);
}

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

std::string serialize_graph(const Graph& g) {
  std::string out = "graph " + std::to_string(g.vertex_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

Layout parse_layout(std::string_view text) {
  Layout layout;
  std::vector<std::size_t> lines;
  for_each_line(text, [&](const std::vector<Token>& tokens, std::size_t line) {
    const Token& head = tokens.front();
    if (head.text != "bar") {
      throw ParseError("unknown directive '" + std::string(head.text) + "'", line,
                       head.column);
    }
    expect_arity(tokens, 4, line, "bar <vertex> <x> <y>");
    std::int64_t v = parse_int(tokens[1], line);
    if (v < 0 || v > (std::int64_t{1} << 30)) {
      throw ParseError("vertex id out of range", line, tokens[1].column);
    }
    Rational coords[2];
    for (int k = 0; k < 2; ++k) {
      try {
        coords[k] = Rational::parse(tokens[2 + k].text);
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception& e) {
        throw ParseError(e.what(), line, tokens[2 + k].column);
      }
    }
    layout.add(coords[0], coords[1], static_cast<Vertex>(v));
    lines.push_back(line);
  });
  if (auto pair = find_intersection(layout)) {
    throw InvalidLayoutError("bars " + std::to_string(pair->first) + " (line " +
                                 std::to_string(lines[pair->first]) + ") and " +
                                 std::to_string(pair->second) + " (line " +
                                 std::to_string(lines[pair->second]) +
                                 ") lie at the same height and intersect",
                             pair->first, pair->second);
  }
  return layout;
}

Layout load_layout(const std::string& path) { return parse_layout(read_file(path)); }

std::string serialize_layout(const Layout& layout) {
  std::string out;
  for (const Bar& b : layout.bars) {
    out += "bar " + std::to_string(b.vertex) + " " + b.x.str() + " " + b.y.str() + "\n";
  }
  return out;
}

std::string render_svg(const Layout& layout, const SvgOptions& options) {
  constexpr double kUnit = 120.0;
  constexpr double kRow = 28.0;
  constexpr double kThick = 6.0;
  constexpr double kMargin = 30.0;

  std::map<Rational, std::size_t> rank;
  Rational min_x = 0, max_x = 1;
  if (!layout.empty()) {
    min_x = layout.bars.front().x;
    max_x = layout.bars.front().right();
  }
  for (const Bar& b : layout.bars) {
    rank.emplace(b.y, 0);
    min_x = std::min(min_x, b.x);
    max_x = std::max(max_x, b.right());
  }
  std::size_t r = rank.size();
  for (auto& [y, slot] : rank) slot = --r;  // highest y gets rank 0

  auto px = [&](const Rational& x) { return kMargin + (x - min_x).to_double() * kUnit; };
  auto py = [&](const Rational& y) { return kMargin + static_cast<double>(rank[y]) * kRow; };

  const double width = 2 * kMargin + (max_x - min_x).to_double() * kUnit;
  const double height = 2 * kMargin + static_cast<double>(std::max<std::size_t>(rank.size(), 1) - 1) * kRow;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width)
      << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' '
      << fmt(height) << "\">\n";
  svg << "<g class=\"bars\">\n";
  for (const Bar& b : layout.bars) {
    svg << "<rect x=\"" << fmt(px(b.x)) << "\" y=\"" << fmt(py(b.y) - kThick / 2)
        << "\" width=\"" << fmt(kUnit) << "\" height=\"" << fmt(kThick)
        << "\" fill=\"black\"/>\n";
    svg << "<text x=\"" << fmt(px(b.x) + kUnit / 2) << "\" y=\"" << fmt(py(b.y) - kThick)
        << "\" font-size=\"10\" text-anchor=\"middle\">" << b.vertex << "</text>\n";
  }
  svg << "</g>\n";
  if (options.sightlines) {
    svg << "<g class=\"sightlines\">\n";
    for (auto [a, b] : extract_visibilities(layout).bar_pairs) {
      auto x = channel(layout, a, b);
      if (!x) continue;
      svg << "<line x1=\"" << fmt(px(*x)) << "\" y1=\"" << fmt(py(layout.bars[a].y))
          << "\" x2=\"" << fmt(px(*x)) << "\" y2=\"" << fmt(py(layout.bars[b].y))
          << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
    }
    svg << "</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string format_report(const VerifyReport& report) {
  auto flag = [](bool b) { return b ? "true" : "false"; };
  auto edge = [](const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); };
  auto num = [](auto v) { return std::to_string(v); };
  std::ostringstream out;
  out << "is_valid_layout: " << flag(report.is_valid_layout) << "\n"
      << "represents_target: " << flag(report.represents_target) << "\n"
      << "bar_count: " << report.bar_count << "\n"
      << "max_multiplicity: " << report.max_multiplicity << "\n"
      << "multiplicity: " << join(report.multiplicity, num) << "\n"
      << "intersecting_pair: "
      << (report.intersecting_pair ? std::to_string(report.intersecting_pair->first) + " " +
                                         std::to_string(report.intersecting_pair->second)
                                   : std::string("none"))
      << "\n"
      << "unlabeled_vertices: " << join(report.unlabeled_vertices, num) << "\n"
      << "missing_edges: " << join(report.missing_edges, edge) << "\n"
      << "forbidden_visibilities: " << join(report.forbidden_visibilities, edge) << "\n"
      << "self_visibilities: " << report.self_visibilities << "\n";
  return out.str();
}

}  // namespace ubv::io
