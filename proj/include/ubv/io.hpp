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

#include <string>
#include <string_view>

#include "ubv/graph.hpp"
#include "ubv/layout.hpp"

namespace ubv::io {

/// Reads a whole file. Throws InputError if it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

/// `graph <n>` header, then `edge <u> <v>` lines; `#` starts a comment.
/// Errors carry the 1-based line and column of the offending token.
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& path);
std::string serialize_graph(const Graph& g);

/// `bar <vertex> <x-num>/<x-den> <y-num>/<y-den>` lines. Intersecting bars
/// throw InvalidLayoutError naming both bars.
Layout parse_layout(std::string_view text);
Layout load_layout(const std::string& path);
std::string serialize_layout(const Layout& layout);

struct SvgOptions {
  bool sightlines = false;
};

/// One rect per bar in input order. x is scaled uniformly; heights are drawn
/// by rank, top rank first. Sightlines are dashed vertical segments through
/// one open channel of each visible pair.
std::string render_svg(const Layout& layout, const SvgOptions& options = {});

/// Stable `key: value` lines.
std::string format_report(const VerifyReport& report);

}  // namespace ubv::io
