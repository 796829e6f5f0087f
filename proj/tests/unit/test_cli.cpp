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

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "ubv/cli.hpp"
#include "ubv/complete.hpp"
#include "ubv/io.hpp"

using namespace ubv;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ubv");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("ubv_cli_test_" + name)).string();
}

}  // namespace

TEST_CASE("bounds commands") {
  Run r = run({"bounds", "kn", "--n", "13"});
  CHECK(r.code == 0);
  CHECK(r.out == "lower=3 upper=3 exact=true\n");
  CHECK(run({"bounds", "kmn", "--m", "20", "--n", "2"}).out.rfind("lower=5 ", 0) == 0);
}

TEST_CASE("tree compute on a star") {
  const std::string path = temp_path("star4.g");
  io::write_file(path, io::serialize_graph(gen::star(4)));
  Run r = run({"tree", "compute", "--in", path});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("ub=2\n", 0) == 0);
  CHECK(run({"tree", "unit-rectangle", "--in", path}).out == "unit_rectangle=true\n");
  CHECK(run({"tree", "compute", "--in", path, "--root", "9"}).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("construct then verify K_14") {
  const std::string g = temp_path("k14.g"), l = temp_path("k14.bars");
  io::write_file(g, io::serialize_graph(gen::complete(14)));
  CHECK(run({"construct", "kn", "--n", "14", "--out", l}).code == 0);
  Run ok = run({"verify", "--graph", g, "--layout", l});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("represents_target: true\n") != std::string::npos);
  CHECK(ok.out.find("max_multiplicity: 3\n") != std::string::npos);

  io::write_file(g, io::serialize_graph(gen::complete(15)));
  CHECK(run({"verify", "--graph", g, "--layout", l}).code == 1);
  std::remove(g.c_str());
  std::remove(l.c_str());
}

TEST_CASE("construct kmn writes to stdout") {
  Run r = run({"construct", "kmn", "--m", "5", "--n", "3", "--method", "dense"});
  CHECK(r.code == 0);
  CHECK(io::parse_layout(r.out) == construct_kmn(5, 3, KmnMethod::Dense));
  CHECK(run({"construct", "kmn", "--m", "5", "--n", "3", "--method", "fancy"}).code == 2);
  CHECK(run({"construct", "kmn", "--m", "2", "--n", "3"}).code == 2);
}

TEST_CASE("render writes an svg") {
  const std::string l = temp_path("two.bars"), svg = temp_path("two.svg");
  io::write_file(l, "bar 0 0/1 0/1\nbar 1 0/1 1/1\n");
  CHECK(run({"render", "--layout", l, "--out", svg, "--sightlines"}).code == 0);
  CHECK(io::read_file(svg).find("stroke-dasharray") != std::string::npos);
  std::remove(l.c_str());
  std::remove(svg.c_str());
}

TEST_CASE("oracle tree") {
  Run r = run({"oracle", "tree", "--max-vertices", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(run({"oracle", "tree", "--max-vertices", "11"}).code == 2);
}

TEST_CASE("usage errors") {
  Run unknown = run({"frobnicate"});
  CHECK(unknown.code != 0);
  CHECK(unknown.err.find("Usage") != std::string::npos);
  CHECK(run({}).code != 0);
  CHECK(run({"tree", "compute"}).code == 2);
  CHECK(run({"verify", "--graph", "/nonexistent", "--layout", "/nonexistent"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
