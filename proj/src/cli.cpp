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

#include "ubv/cli.hpp"

#include <CLI11.hpp>
#include <map>
#include <ostream>
#include <sstream>

#include "ubv/bipartite.hpp"
#include "ubv/complete.hpp"
#include "ubv/error.hpp"
#include "ubv/io.hpp"
#include "ubv/oracles.hpp"
#include "ubv/tree.hpp"

namespace ubv::cli {
namespace {

constexpr int kFail = 1;
constexpr int kUsage = 2;

void emit_layout(const Layout& layout, const std::string& path, std::ostream& out) {
  const std::string text = io::serialize_layout(layout);
  if (path.empty()) {
    out << text;
  } else {
    io::write_file(path, text);
  }
}

int tree_compute(const Graph& t, Vertex root, std::ostream& out) {
  const UnitBarTreeResult r = unit_bar_tree(t, root);
  const int lower = (r.max_degree + 2) / 3;
  const int upper = (r.max_degree + 3) / 3;
  out << "ub=" << r.ub << "\n"
      << "max_degree=" << r.max_degree << "\n"
      << "ceil(D/3)=" << lower << "\n"
      << "ceil((D+1)/3)=" << upper << "\n"
      << "attains=" << (lower == upper ? "both" : r.ub == lower ? "ceil(D/3)" : "ceil((D+1)/3)")
      << "\n";
  return 0;
}

int tree_decompose(const Graph& t, Vertex root, std::ostream& out) {
  const UnitBarTreeResult r = unit_bar_tree(t, root);
  const Decomposition& d = r.decomposition;
  out << "width=" << d.width << "\n"
      << "parts=" << d.part_count() << "\n";
  for (std::size_t i = 0; i < d.part_count(); ++i) {
    const TreePart part = d.part(i);
    out << "part " << i << ": vertices";
    for (Vertex v : part.vertices) out << ' ' << v;
    out << " | edges";
    for (const Edge& e : part.edges) out << ' ' << e.u << '-' << e.v;
    out << "\n";
  }
  return 0;
}

int oracle_tree(int max_vertices, std::ostream& out) {
  if (max_vertices < 1 || max_vertices > 10) {
    throw InputError("--max-vertices must lie in [1, 10]");
  }
  out << "n trees ub_match decomposition_ok ubvt_match status\n";
  bool all_ok = true;
  for (Vertex n = 1; n <= max_vertices; ++n) {
    std::size_t ub_match = 0, decomp_ok = 0, ubvt_match = 0;
    const std::uint64_t trees = oracle::enumerate_trees(n, false, [&](const Graph& t) {
      const UnitBarTreeResult r = unit_bar_tree(t);
      const int brute = oracle::brute_ub_tree(t);
      if (r.ub == brute) ++ub_match;
      if (!check_decomposition(t, r.decomposition) && r.decomposition.width == r.ub) ++decomp_ok;
      const bool fast = is_ubvt(t);
      if (fast == oracle::brute_is_ubvt(t) && fast == (brute == 1)) ++ubvt_match;
    });
    const bool ok = ub_match == trees && decomp_ok == trees && ubvt_match == trees;
    all_ok = all_ok && ok;
    out << n << ' ' << trees << ' ' << ub_match << ' ' << decomp_ok << ' ' << ubvt_match << ' '
        << (ok ? "pass" : "FAIL") << "\n";
  }
  return all_ok ? 0 : kFail;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unit bar visibility layouts and tree numbers", "ubv"};
  app.require_subcommand(1);

  std::string in_path, out_path, graph_path, layout_path, method = "auto";
  Vertex root = 0, m = 0, n = 0;
  int max_vertices = 0;
  bool sightlines = false;

  auto* tree = app.add_subcommand("tree", "Tree numbers, decompositions and layouts");
  tree->require_subcommand(1);
  std::map<std::string, CLI::App*> tree_cmds;
  for (const char* name : {"compute", "decompose", "layout", "unit-rectangle"}) {
    auto* sub = tree->add_subcommand(name);
    sub->add_option("--in", in_path, "Tree file")->required();
    sub->add_option("--root", root, "Root vertex")->check(CLI::NonNegativeNumber);
    tree_cmds[name] = sub;
  }

  auto* construct = app.add_subcommand("construct", "Emit a layout file");
  construct->require_subcommand(1);
  auto* c_kmn = construct->add_subcommand("kmn", "Layout of K_{m,n}");
  c_kmn->add_option("--m", m)->required();
  c_kmn->add_option("--n", n)->required();
  c_kmn->add_option("--method", method)->check(CLI::IsMember({"dense", "sparse", "auto"}));
  c_kmn->add_option("--out", out_path);
  auto* c_kn = construct->add_subcommand("kn", "Layout of K_n");
  c_kn->add_option("--n", n)->required();
  c_kn->add_option("--out", out_path);

  auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds on ub");
  bounds->require_subcommand(1);
  auto* b_kmn = bounds->add_subcommand("kmn");
  b_kmn->add_option("--m", m)->required();
  b_kmn->add_option("--n", n)->required();
  auto* b_kn = bounds->add_subcommand("kn");
  b_kn->add_option("--n", n)->required();

  auto* verify = app.add_subcommand("verify", "Check a layout against a graph");
  verify->add_option("--graph", graph_path)->required();
  verify->add_option("--layout", layout_path)->required();

  auto* render = app.add_subcommand("render", "Draw a layout as SVG");
  render->add_option("--layout", layout_path)->required();
  render->add_option("--out", out_path)->required();
  render->add_flag("--sightlines", sightlines);

  auto* oracle = app.add_subcommand("oracle", "Exhaustive cross-checks");
  oracle->require_subcommand(1);
  auto* o_tree = oracle->add_subcommand("tree");
  o_tree->add_option("--max-vertices", max_vertices)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return 0;
    err << app.help();
    return kUsage;
  }

  try {
    if (tree->parsed()) {
      const Graph t = io::load_graph(in_path);
      if (root >= t.vertex_count()) throw InputError("root out of range");
      if (tree_cmds["compute"]->parsed()) return tree_compute(t, root, out);
      if (tree_cmds["decompose"]->parsed()) return tree_decompose(t, root, out);
      if (tree_cmds["layout"]->parsed()) {
        out << io::serialize_layout(tree_layout(t, root));
        return 0;
      }
      out << "unit_rectangle=" << (is_unit_rectangle_tree(t) ? "true" : "false") << "\n";
      return 0;
    }
    if (c_kmn->parsed()) {
      const KmnMethod kind = method == "dense"    ? KmnMethod::Dense
                             : method == "sparse" ? KmnMethod::Sparse
                                                  : KmnMethod::Auto;
      emit_layout(construct_kmn(m, n, kind), out_path, out);
      return 0;
    }
    if (c_kn->parsed()) {
      emit_layout(construct_kn(n), out_path, out);
      return 0;
    }
    if (b_kmn->parsed() || b_kn->parsed()) {
      const Bounds b = b_kmn->parsed() ? bounds_kmn(m, n) : bounds_kn(n);
      out << "lower=" << b.lower << " upper=" << b.upper
          << " exact=" << (b.lower == b.upper ? "true" : "false") << "\n";
      return 0;
    }
    if (verify->parsed()) {
      const Graph g = io::load_graph(graph_path);
      const Layout layout = io::load_layout(layout_path);
      const VerifyReport report = verify_representation(layout, g);
      out << io::format_report(report);
      return report.represents_target ? 0 : kFail;
    }
    if (render->parsed()) {
      const Layout layout = io::load_layout(layout_path);
      io::write_file(out_path, io::render_svg(layout, {sightlines}));
      return 0;
    }
    return oracle_tree(max_vertices, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace ubv::cli
