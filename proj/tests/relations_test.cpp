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

#include <pants/relations.hpp>

#include "doctest.h"

#include <algorithm>
#include <set>

using pants::CanonicalCode;
using pants::RelationInstance;
using pants::RelationTag;
using pants::Slope;
using pants::SlopeModel;
using pants::Vertex;

namespace {

RelationInstance triangle(RelationTag tag, Slope a, Slope b, Slope c) {
  return RelationInstance{tag, {a, b, c}, {}};
}

// The two leg pairs cut off by a (0,5) decomposition, read off the graph.
std::set<std::set<int>> pairs_of(const CanonicalCode& code) {
  pants::PantsGraph g = pants::decode(code);
  std::vector<std::set<int>> at(g.pant_count());
  for (const auto& leg : g.legs()) at[leg.pant].insert(leg.label);
  std::set<std::set<int>> out;
  for (const auto& s : at) {
    if (s.size() == 2) out.insert(s);
  }
  return out;
}

}  // namespace

TEST_CASE("relation kinds") {
  CHECK(pants::relation_kind(RelationTag::R3A).boundary_length == 3);
  CHECK(pants::relation_kind(RelationTag::R5A).boundary_length == 5);
  CHECK(pants::relation_kind(RelationTag::R3S).s_moves == 3);
  auto six = pants::relation_kind(RelationTag::R6AS);
  CHECK(six.boundary_length == 6);
  CHECK(six.a_moves == 4);
  CHECK(six.s_moves == 2);
  CHECK(pants::relation_kind(RelationTag::RC).boundary_length == 4);
  for (auto tag : {RelationTag::R3A, RelationTag::R5A, RelationTag::R3S, RelationTag::R6AS, RelationTag::RC}) {
    CHECK(pants::parse_relation_tag(pants::to_string(tag)) == tag);
  }
  CHECK_THROWS_AS(pants::parse_relation_tag("4A"), std::invalid_argument);
}

TEST_CASE("Farey triangles as cells") {
  auto a_window = pants::bounded_subcomplex(SlopeModel::A, 2);
  auto s_window = pants::bounded_subcomplex(SlopeModel::S, 2);
  auto t = triangle(RelationTag::R3A, Slope(0, 1), Slope(1, 1), Slope::infinity());
  CHECK(pants::validate_instance(t, a_window).ok);
  CHECK(pants::validate_instance(t, pants::FareyComplex(SlopeModel::A)).ok);
  auto ts = triangle(RelationTag::R3S, Slope(0, 1), Slope(1, 1), Slope::infinity());
  CHECK(pants::validate_instance(ts, s_window).ok);

  auto wrong_model = pants::validate_instance(t, s_window);
  CHECK_FALSE(wrong_model.ok);
  CHECK(wrong_model.diagnostic.find("multiset") != std::string::npos);

  auto not_edge = pants::validate_instance(
      triangle(RelationTag::R3A, Slope(1, 1), Slope(0, 1), Slope(-1, 1)), a_window);
  CHECK_FALSE(not_edge.ok);
  CHECK(not_edge.diagnostic.find("not an edge") != std::string::npos);

  RelationInstance square{RelationTag::R5A, {Slope(0, 1), Slope(1, 1), Slope::infinity(), Slope(-1, 1)}, {}};
  auto len = pants::validate_instance(square, a_window);
  CHECK_FALSE(len.ok);
  CHECK(len.diagnostic.find("boundary length") == 0);

  auto outside = pants::validate_instance(
      triangle(RelationTag::R3A, Slope(2, 1), Slope(3, 1), Slope::infinity()), a_window);
  CHECK_FALSE(outside.ok);
  CHECK(outside.diagnostic.find("not in the host") != std::string::npos);
}

TEST_CASE("Farey window instances are exactly its triangles") {
  auto one = pants::bounded_subcomplex(SlopeModel::A, 1);
  CHECK(pants::find_instances(one, RelationTag::R3A).size() == 2);
  CHECK(pants::find_instances(one, RelationTag::R3S).empty());
  CHECK(pants::find_instances(one, RelationTag::R5A).empty());
  auto four = pants::bounded_subcomplex(SlopeModel::S, 4);
  auto found = pants::find_instances(four, RelationTag::R3S);
  REQUIRE(found.size() == four.triangles().size());
  for (std::size_t i = 0; i < found.size(); ++i) {
    const auto& t = four.triangles()[i];
    CHECK(found[i].boundary == std::vector<Vertex>{t[0], t[1], t[2]});
    CHECK(pants::validate_instance(found[i], four).ok);
  }
  CHECK_THROWS_AS(pants::find_instances(pants::FareyComplex(SlopeModel::A), RelationTag::R3A),
                  std::invalid_argument);
}

TEST_CASE("the pentagon cycle") {
  auto host = pants::build_move_graph({0, 5});
  auto p0 = pants::pentagon_instance_0_5(0);
  REQUIRE(p0.boundary.size() == 5);
  CHECK(p0.boundary[0] == Vertex(pants::pair_state_0_5({1, 2}, {3, 4})));
  CHECK(p0.boundary[1] == Vertex(pants::pair_state_0_5({1, 2}, {4, 5})));
  CHECK(p0.boundary[2] == Vertex(pants::pair_state_0_5({2, 3}, {4, 5})));
  CHECK(p0.boundary[3] == Vertex(pants::pair_state_0_5({2, 3}, {5, 1})));
  CHECK(p0.boundary[4] == Vertex(pants::pair_state_0_5({3, 4}, {5, 1})));
  CHECK(pants::validate_instance(p0, host).ok);
  CHECK(p0.sites.size() == 5);

  auto p2 = pants::pentagon_instance_0_5(2);
  std::vector<Vertex> rotated = p0.boundary;
  std::rotate(rotated.begin(), rotated.begin() + 2, rotated.end());
  CHECK(p2.boundary == rotated);
  CHECK(pants::validate_instance(p2, host).ok);
  CHECK(pants::pentagon_instance_0_5(7).boundary == p2.boundary);
  CHECK(pants::pentagon_instance_0_5(-3).boundary == p2.boundary);

  CHECK_THROWS_WITH_AS(pants::pair_state_0_5({1, 2}, {2, 3}), "pairs {1,2} and {2,3} are not disjoint",
                       std::invalid_argument);
  CHECK_THROWS_AS(pants::pair_state_0_5({1, 2}, {3, 6}), std::invalid_argument);
  using PS = pants::PairState;
  std::vector<PS> broken{{{{1, 2}, {3, 4}}}, {{{1, 2}, {2, 3}}}, {{{2, 3}, {4, 5}}},
                         {{{2, 3}, {5, 1}}}, {{{3, 4}, {5, 1}}}};
  CHECK_THROWS_WITH_AS(pants::pair_cycle_instance(RelationTag::R5A, broken),
                       "state 1 is not a vertex: pairs {1,2} and {2,3} are not disjoint",
                       std::invalid_argument);

  // Swapping in a vertex that is not adjacent breaks the cycle.
  auto bad = p0;
  bad.boundary[1] = pants::pair_state_0_5({1, 3}, {2, 4});
  bad.sites.clear();
  CHECK_FALSE(pants::validate_instance(bad, host).ok);
}

TEST_CASE("type-level instances") {
  auto g04 = pants::build_move_graph({0, 4});
  auto tri = pants::find_instances(g04, RelationTag::R3A);
  CHECK(tri.size() == 1);
  CHECK(pants::find_instances(g04, RelationTag::R5A).empty());
  CHECK(pants::find_instances(g04, RelationTag::RC).empty());
  CHECK(pants::find_instances(g04, RelationTag::R3S).empty());
  CHECK(pants::find_instances(g04, RelationTag::R6AS).empty());

  auto g05 = pants::build_move_graph({0, 5});
  auto pentagons = pants::find_instances(g05, RelationTag::R5A);
  CHECK(pentagons.size() == 12);
  for (const auto& p : pentagons) {
    CHECK(pants::validate_instance(p, g05).ok);
    for (std::size_t i = 0; i < 5; ++i) {
      auto a = pairs_of(std::get<CanonicalCode>(p.boundary[i]));
      auto b = pairs_of(std::get<CanonicalCode>(p.boundary[(i + 1) % 5]));
      REQUIRE(a.size() == 2);
      REQUIRE(b.size() == 2);
      std::vector<std::set<int>> kept;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(kept));
      CHECK(kept.size() == 1);
    }
  }
  // The Definition pentagon is among them.
  auto p0 = pants::pentagon_instance_0_5(0);
  std::set<CanonicalCode> p0set;
  for (const auto& v : p0.boundary) p0set.insert(std::get<CanonicalCode>(v));
  int matches = 0;
  for (const auto& p : pentagons) {
    std::set<CanonicalCode> s;
    for (const auto& v : p.boundary) s.insert(std::get<CanonicalCode>(v));
    matches += s == p0set;
  }
  CHECK(matches == 1);

  auto triangles = pants::find_instances(g05, RelationTag::R3A);
  CHECK(triangles.size() == 10);
  for (const auto& t : triangles) CHECK(pants::validate_instance(t, g05).ok);
  // No two disjoint moves fit in (0,5).
  CHECK(pants::find_instances(g05, RelationTag::RC).empty());

  auto g06 = pants::build_move_graph({0, 6});
  auto squares = pants::find_instances(g06, RelationTag::RC);
  CHECK_FALSE(squares.empty());
  for (const auto& sq : squares) CHECK(pants::validate_instance(sq, g06).ok);
}

TEST_CASE("wrong kind at type level") {
  auto g05 = pants::build_move_graph({0, 5});
  auto p0 = pants::pentagon_instance_0_5(0);
  RelationInstance as_triangle{RelationTag::R3A, {p0.boundary[0], p0.boundary[1], p0.boundary[2]}, {}};
  CHECK_FALSE(pants::validate_instance(as_triangle, g05).ok);
  auto triangles = pants::find_instances(g05, RelationTag::R3A);
  RelationInstance as_3s{RelationTag::R3S, triangles[0].boundary, {}};
  auto v = pants::validate_instance(as_3s, g05);
  CHECK_FALSE(v.ok);
  CHECK(v.diagnostic.find("multiset") != std::string::npos);
  // A pinned site that does not realize the step is rejected.
  auto pinned = triangles[0];
  for (auto& s : pinned.sites) s.edge = 1 - s.edge;
  CHECK_FALSE(pants::validate_instance(pinned, g05).ok);
}

TEST_CASE("commutation examples") {
  auto g06 = pants::build_move_graph({0, 6});
  // A path of four pants has non-adjacent edges 0 and 2.
  pants::PantsGraph path({0, 6}, 4, {{1, 0}, {2, 0}, {3, 1}, {4, 2}, {5, 3}, {6, 3}},
                         {{0, 1}, {1, 2}, {2, 3}});
  const int v = g06.index_of(pants::canonical_code(path));
  REQUIRE(v >= 0);
  pants::PantsGraph at_v = pants::decode(g06.vertices()[v]);
  int e1 = -1, e2 = -1;
  for (int i = 0; i < 3 && e1 < 0; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const auto& a = at_v.edges()[i];
      const auto& b = at_v.edges()[j];
      if (a.a != b.a && a.a != b.b && a.b != b.a && a.b != b.b) {
        e1 = i;
        e2 = j;
        break;
      }
    }
  }
  REQUIRE(e1 >= 0);
  auto r = pants::commute_check(g06, v, e1, e2);
  CHECK(r.commutes);
  CHECK(r.violations.empty());
  CHECK(r.squares.size() == 4);
  for (const auto& sq : r.squares) CHECK(pants::validate_instance(sq, g06).ok);

  int shared = 3 - e1 - e2;
  CHECK_THROWS_AS(pants::commute_check(g06, v, e1, shared), std::invalid_argument);
  CHECK_THROWS_AS(pants::commute_check(g06, v, e1, e1), std::invalid_argument);
  CHECK_THROWS_AS(pants::commute_check(g06, 10000, 0, 1), std::out_of_range);

  auto g12 = pants::build_move_graph({1, 2});
  for (int i = 0; i < static_cast<int>(g12.vertices().size()); ++i) {
    auto graph = pants::decode(g12.vertices()[i]);
    for (int e = 0; e < 2; ++e) {
      if (graph.edges()[e].is_loop()) CHECK_THROWS_AS(pants::commute_check(g12, i, e, 1 - e), std::invalid_argument);
    }
  }
}

TEST_CASE("all disjoint move pairs commute") {
  for (pants::SurfaceType s : {pants::SurfaceType{0, 6}, pants::SurfaceType{1, 3}, pants::SurfaceType{0, 7},
                               pants::SurfaceType{1, 4}, pants::SurfaceType{2, 2}}) {
    auto host = pants::build_move_graph(s);
    int pairs = 0, violations = 0;
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
          violations += static_cast<int>(pants::commute_check(host, v, i, j).violations.size());
        }
      }
    }
    CHECK_MESSAGE(violations == 0, pants::to_string(s));
    // (1,3) has three pants, too few for two disjoint supports.
    if (s == pants::SurfaceType{1, 3}) {
      CHECK(pairs == 0);
    } else {
      CHECK(pairs > 0);
    }
  }
}

TEST_CASE("three-fold symmetric hexagons") {
  auto g05 = pants::build_move_graph({0, 5});
  auto hexagons = pants::symmetric_cycles(g05, 6, 3);
  CHECK(hexagons.size() == 10);
  CHECK_THROWS_AS(pants::symmetric_cycles(g05, 5, 3), std::invalid_argument);
}

TEST_CASE("6AS template") {
  auto t = pants::hexagon_template_6as();
  CHECK(t.kind.tag == RelationTag::R6AS);
  REQUIRE(t.boundary.size() == 6);
  CHECK(t.boundary.front() == std::array<std::string, 2>{"alpha1", "alpha3"});
  CHECK(t.boundary.back() == std::array<std::string, 2>{"alpha3", "epsilon1"});
}
