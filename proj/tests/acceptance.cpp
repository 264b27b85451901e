// Copyright 2026 The pantscomplex Authors
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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Time limits are part of each criterion.

#include "cli_app.hpp"

#include <pants/farey.hpp>
#include <pants/homotopy.hpp>
#include <pants/json_io.hpp>
#include <pants/move_graph.hpp>
#include <pants/pants_graph.hpp>
#include <pants/relations.hpp>
#include <pants/slope.hpp>
#include <pants/surface.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using pants::EdgePath;
using pants::RelationInstance;
using pants::RelationTag;
using pants::Slope;
using pants::SlopeModel;
using pants::SurfaceType;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Surfaces with 1 <= 2g-2+n <= 6.
std::vector<SurfaceType> surfaces_in_range() {
  std::vector<SurfaceType> out;
  for (int g = 0; g <= 4; ++g) {
    for (int n = 0; 2 * g - 2 + n <= 6; ++n) {
      if (2 * g - 2 + n >= 1) out.push_back({g, n});
    }
  }
  return out;
}

std::vector<RelationInstance> cells_of(const pants::TypeMoveGraph& host, std::initializer_list<RelationTag> tags) {
  std::vector<RelationInstance> out;
  for (RelationTag tag : tags) {
    auto found = pants::find_instances(host, tag);
    out.insert(out.end(), found.begin(), found.end());
  }
  return out;
}

Outcome counting_formulas() {
  int graphs = 0;
  for (SurfaceType s : surfaces_in_range()) {
    const int curves = 3 * s.genus - 3 + s.boundary_count;
    const int pants_n = 2 * s.genus - 2 + s.boundary_count;
    if (pants::curve_count(s) != curves || pants::pants_count(s) != pants_n) {
      return {false, "formula mismatch on " + pants::to_string(s)};
    }
    for (const auto& code : pants::enumerate_types(s)) {
      auto g = pants::decode(code);
      ++graphs;
      if (static_cast<int>(g.edges().size()) != curves || g.pant_count() != pants_n) {
        return {false, "wrong shape on " + pants::to_string(s)};
      }
    }
  }
  return {true, std::to_string(surfaces_in_range().size()) + " surfaces, " + std::to_string(graphs) + " graphs"};
}

Outcome farey_local_structure() {
  using boost::multiprecision::cpp_int;
  auto window = pants::bounded_subcomplex(SlopeModel::A, 20);
  const auto& verts = window.vertices();
  auto det = [](const Slope& a, const Slope& b) {
    cpp_int d = a.num() * b.den() - a.den() * b.num();
    return abs(d);
  };
  // Every adjacent pair in the window, found by scan rather than taken from edges().
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      const Slope& a = verts[i];
      const Slope& b = verts[j];
      if (det(a, b) != 1) continue;
      ++pairs;
      auto [c, d] = pants::triangle_completions(a, b);
      if (c == d || c == a || c == b || d == a || d == b) return {false, "degenerate completions"};
      for (const Slope& x : {c, d}) {
        if (det(x, a) != 1 || det(x, b) != 1) return {false, "completion not adjacent to its pair"};
      }
      for (const Slope& x : verts) {
        if (x == a || x == b) continue;
        if (det(x, a) == 1 && det(x, b) == 1 && x != c && x != d) {
          return {false, "extra common neighbour " + x.to_string() + " of " + a.to_string() + ", " + b.to_string()};
        }
      }
      if (!window.has_edge(a, b)) return {false, "window misses edge " + a.to_string() + " " + b.to_string()};
    }
  }
  if (pairs != window.edges().size()) return {false, "edge count differs from scan"};
  return {true, std::to_string(pairs) + " adjacent pairs"};
}

Outcome square_loop() {
  const Slope one(1, 1), minus_one(-1, 1), zero(0, 1), inf = Slope::infinity();
  if (pants::is_adjacent(one, minus_one)) return {false, "1 and -1 adjacent"};
  for (const Slope& s : {one, minus_one}) {
    if (!pants::is_adjacent(s, zero) || !pants::is_adjacent(s, inf)) return {false, "missing adjacency"};
  }
  EdgePath loop{one, zero, minus_one, inf, one};
  auto cert = pants::reduce_farey_loop(SlopeModel::A, loop);
  auto verdict = pants::verify_certificate(pants::FareyComplex(SlopeModel::A), cert);
  if (!verdict.ok) return {false, verdict.diagnostic};
  auto usage = pants::cell_usage(cert);
  if (usage.size() != 1 || usage[RelationTag::R3A] != 2) return {false, "cell usage is not exactly two 3A"};
  return {true, "2 x 3A"};
}

Outcome random_loops() {
  const boost::multiprecision::cpp_int max_den = 1000000;
  std::size_t longest = 0;
  for (SlopeModel model : {SlopeModel::A, SlopeModel::S}) {
    pants::FareyComplex host(model);
    std::mt19937_64 rng(model == SlopeModel::A ? 20260101 : 20260102);
    for (int i = 0; i < 1000; ++i) {
      EdgePath loop = pants::random_farey_loop(rng, 10, max_den);
      if (loop.size() > 31) return {false, "loop longer than 30"};
      for (const auto& v : loop) {
        if (std::get<Slope>(v).den() > max_den) return {false, "denominator out of range"};
      }
      longest = std::max(longest, loop.size() - 1);
      auto cert = pants::reduce_farey_loop(model, loop);
      auto verdict = pants::verify_certificate(host, cert);
      if (!verdict.ok) return {false, "loop " + std::to_string(i) + ": " + verdict.diagnostic};
      if (cert.final_loop.size() != 1) return {false, "not reduced to a point"};
    }
  }
  return {true, "2000 loops, longest " + std::to_string(longest)};
}

Outcome type_05() {
  auto g = pants::build_move_graph({0, 5});
  if (g.vertices().size() != 15 || g.edges().size() != 30) return {false, "wrong size"};
  if (g.component_count() != 1) return {false, "disconnected"};
  auto pentagons = pants::find_instances(g, RelationTag::R5A);
  if (pentagons.size() != 12) return {false, std::to_string(pentagons.size()) + " pentagons"};
  auto report = pants::simply_connected_report(g, cells_of(g, {RelationTag::R3A, RelationTag::R5A}));
  if (report.basis_loops != 16 || report.failed != 0) {
    return {false, std::to_string(report.filled) + "/" + std::to_string(report.basis_loops) + " filled"};
  }
  for (const auto& cert : report.certificates) {
    if (!pants::verify_certificate(g, cert).ok) return {false, "certificate rejected"};
  }
  return {true, "15/30, 12 pentagons, 16/16 filled"};
}

Outcome symmetric_hexagon() {
  auto g = pants::build_move_graph({0, 5});
  auto hexagons = pants::symmetric_cycles(g, 6, 3);
  if (hexagons.empty()) return {false, "no symmetric hexagon"};
  auto cells = cells_of(g, {RelationTag::R3A, RelationTag::R5A});
  for (const auto& h : hexagons) {
    EdgePath loop;
    for (int i : h) loop.emplace_back(g.vertices()[i]);
    loop.push_back(loop.front());
    auto r = pants::fill_finite_loop(g, loop, cells);
    if (r.status != pants::FillStatus::Filled) continue;
    if (!pants::verify_certificate(g, r.certificate).ok) return {false, "certificate rejected"};
    auto usage = pants::cell_usage(r.certificate);
    if (usage.size() == 2 && usage[RelationTag::R5A] == 2 && usage[RelationTag::R3A] == 2) {
      return {true, "2 x 5A + 2 x 3A"};
    }
  }
  return {false, "no hexagon filled with two pentagons and two triangles"};
}

Outcome commutation() {
  std::ostringstream detail;
  for (SurfaceType s : {SurfaceType{0, 6}, SurfaceType{1, 3}, SurfaceType{0, 7}, SurfaceType{2, 2}}) {
    auto host = pants::build_move_graph(s);
    int pairs = 0;
    for (int v = 0; v < static_cast<int>(host.vertices().size()); ++v) {
      auto graph = pants::decode(host.vertices()[v]);
      const auto& edges = graph.edges();
      for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        for (int j = i + 1; j < static_cast<int>(edges.size()); ++j) {
          const auto& a = edges[i];
          const auto& b = edges[j];
          if (a.is_loop() || b.is_loop()) continue;
          if (a.a == b.a || a.a == b.b || a.b == b.a || a.b == b.b) continue;
          ++pairs;
          if (!pants::commute_check(host, v, i, j).commutes) {
            return {false, pants::to_string(s) + " vertex " + std::to_string(v)};
          }
        }
      }
    }
    detail << pants::to_string(s) << ":" << pairs << " ";
  }
  std::string d = detail.str();
  d.pop_back();
  return {true, "pairs " + d};
}

Outcome connectivity() {
  int graphs = 0;
  for (SurfaceType s : surfaces_in_range()) {
    auto g = pants::build_move_graph(s);
    if (g.component_count() != 1) return {false, pants::to_string(s) + " disconnected"};
    ++graphs;
  }
  return {true, std::to_string(graphs) + " move graphs connected"};
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = pants::cli::run(args, out, err);
  return out.str();
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "pants_acceptance";
  fs::create_directories(dir);
  auto file = [&](const std::string& name, const std::string& text) {
    std::ofstream((dir / name).string()) << text;
    return (dir / name).string();
  };
  const std::string loop = file("loop.json", R"(["1/1","0/1","-1/1","1/0","1/1"])");
  const std::string graph = file("graph.json", R"({"g":0,"n":5,"pants":[0,1,2],"legs":[[1,0],[2,0],[3,1],[4,2],[5,2]],"edges":[[0,1],[1,2]]})");

  int code = 0;
  const std::string hex = run_cli({"relations", "0", "5", "--kind", "5A"}, code);
  std::string pentagon = pants::dump(pants::to_json(pants::relation_from_json(pants::parse_json(hex)["instances"][0])));
  const std::string cell = file("cell.json", pentagon);
  const std::string cert = file("cert.json", run_cli({"reduce", loop}, code));

  std::vector<std::vector<std::string>> commands{
      {"counts", "3", "2"},
      {"enumerate", "1", "4"},
      {"moves", graph},
      {"farey", "ball", "3", "--model", "s"},
      {"reduce", loop, "--model", "a"},
      {"verify", cert},
      {"relations", "0", "6", "--kind", "C"},
      {"graph", "0", "6"},
      {"report", "0", "5"},
      {"commute", "0", "6"},
      {"corpus", "--seed", "42", "--count", "20"},
      {"export", graph, "--format", "dot"},
      {"export", cell, "--format", "dot"},
  };
  for (const auto& args : commands) {
    int c1 = 0, c2 = 0;
    const std::string a = run_cli(args, c1);
    const std::string b = run_cli(args, c2);
    if (a != b || c1 != c2 || a.empty()) return {false, "'" + args[0] + "' is not reproducible"};
  }

  // JSON round trips: export of an export is the identity.
  const std::vector<std::string> docs{graph, loop, cert, cell, file("ball.json", run_cli({"farey", "ball", "4"}, code)),
                                      file("types.json", run_cli({"graph", "1", "3"}, code))};
  for (const auto& path : docs) {
    const std::string once = run_cli({"export", path, "--format", "json"}, code);
    if (code != 0) return {false, "export failed on " + path};
    const std::string twice = run_cli({"export", file("again.json", once), "--format", "json"}, code);
    if (twice != once) return {false, "round trip changed " + path};
  }
  fs::remove_all(dir);
  return {true, std::to_string(commands.size()) + " commands, " + std::to_string(docs.size()) + " round trips"};
}

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<Outcome()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"counting formulas", 5, counting_formulas},
      {"farey local structure", 2, farey_local_structure},
      {"square loop uses two 3A cells", 1, square_loop},
      {"random loop reduction", 30, random_loops},
      {"type graph (0,5)", 10, type_05},
      {"symmetric hexagon filling", 10, symmetric_hexagon},
      {"disjoint moves commute", 10, commutation},
      {"move graph connectivity", 10, connectivity},
      {"tool determinism", 5, determinism},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.limit_seconds) {
      o = {false, o.detail + "; over time limit " + std::to_string(static_cast<int>(c.limit_seconds)) + " s"};
    }
    std::printf("%s %d %s (%s) %.2f s\n", o.ok ? "PASS" : "FAIL", index, c.name, o.detail.c_str(), secs);
    failures += o.ok ? 0 : 1;
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
