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

#include <pants/move_graph.hpp>

#include "doctest.h"
#include "oracles.hpp"

#include <array>
#include <map>
#include <set>

using pants::CanonicalCode;
using pants::PantsGraph;
using pants::SurfaceType;

namespace {

// End of a strand at a pant: a leg label, or (edge index, which end).
struct End {
  bool leg;
  int id;
  int side;
};

// Both re-pairings of the four strand ends around edge e, written against
// raw leg and edge arrays.
std::vector<PantsGraph> repartitions(const PantsGraph& g, int e) {
  const auto& edge = g.edges()[e];
  auto ends_at = [&](int pant) {
    std::vector<End> out;
    for (const auto& leg : g.legs()) {
      if (leg.pant == pant) out.push_back({true, leg.label, 0});
    }
    for (int i = 0; i < static_cast<int>(g.edges().size()); ++i) {
      for (int side = 0; side < 2; ++side) {
        if (i == e) continue;
        if ((side == 0 ? g.edges()[i].a : g.edges()[i].b) == pant) out.push_back({false, i, side});
      }
    }
    return out;
  };
  std::vector<End> u = ends_at(edge.a), w = ends_at(edge.b);
  std::vector<PantsGraph> out;
  // Keep u[0] at edge.a and give it one of w's ends.
  for (int pick = 0; pick < 2; ++pick) {
    std::vector<pants::Leg> legs = g.legs();
    std::vector<pants::InternalEdge> edges = g.edges();
    auto put = [&](const End& x, int pant) {
      if (x.leg) {
        legs[x.id - 1].pant = pant;
      } else if (x.side == 0) {
        edges[x.id].a = pant;
      } else {
        edges[x.id].b = pant;
      }
    };
    put(u[0], edge.a);
    put(w[pick], edge.a);
    put(u[1], edge.b);
    put(w[1 - pick], edge.b);
    out.emplace_back(g.surface(), g.pant_count(), legs, edges);
  }
  return out;
}

// Type graph as pairs of least shapes.
std::set<std::pair<oracle::Shape, oracle::Shape>> oracle_edges(SurfaceType s) {
  std::set<std::pair<oracle::Shape, oracle::Shape>> out;
  for (const auto& shape : oracle::brute_force_types(s)) {
    std::vector<pants::Leg> legs;
    for (int l = 0; l < s.boundary_count; ++l) legs.push_back({l + 1, shape.legs[l]});
    std::vector<pants::InternalEdge> edges;
    for (auto [a, b] : shape.edges) edges.push_back({a, b});
    PantsGraph g(s, pants::pants_count(s), legs, edges);
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      if (edges[e].is_loop()) continue;
      for (const auto& h : repartitions(g, e)) {
        oracle::Shape t = oracle::least_shape(h);
        if (t == shape) continue;
        out.insert({std::min(shape, t), std::max(shape, t)});
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("small move graphs") {
  auto g04 = pants::build_move_graph({0, 4});
  CHECK(g04.vertices().size() == 3);
  CHECK(g04.edges().size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(g04.neighbours(i).size() == 2);

  auto g05 = pants::build_move_graph({0, 5});
  CHECK(g05.vertices().size() == 15);
  CHECK(g05.edges().size() == 30);
  CHECK(g05.component_count() == 1);
  for (int i = 0; i < 15; ++i) CHECK(g05.neighbours(i).size() == 4);

  auto g11 = pants::build_move_graph({1, 1});
  CHECK(g11.vertices().size() == 1);
  CHECK(g11.edges().empty());
  CHECK(g11.type_fixing_moves() == 1);
  CHECK(g11.component_count() == 1);

  auto g03 = pants::build_move_graph({0, 3});
  CHECK(g03.vertices().size() == 1);
  CHECK(g03.edges().empty());
}

TEST_CASE("edges match an independent repartition oracle") {
  for (SurfaceType s : {SurfaceType{0, 4}, SurfaceType{0, 5}, SurfaceType{1, 2}, SurfaceType{2, 0},
                        SurfaceType{0, 6}, SurfaceType{1, 3}, SurfaceType{2, 1}, SurfaceType{3, 0},
                        SurfaceType{1, 4}, SurfaceType{2, 2}}) {
    auto graph = pants::build_move_graph(s);
    std::set<std::pair<oracle::Shape, oracle::Shape>> mine;
    for (const auto& e : graph.edges()) {
      oracle::Shape a = oracle::least_shape(pants::decode(graph.vertices()[e.from]));
      oracle::Shape b = oracle::least_shape(pants::decode(graph.vertices()[e.to]));
      mine.insert({std::min(a, b), std::max(a, b)});
      // The recorded site reproduces the edge.
      PantsGraph moved = pants::apply_a_move(pants::decode(graph.vertices()[e.from]), e.edge, e.branch);
      CHECK(pants::canonical_code(moved) == graph.vertices()[e.to]);
    }
    CHECK_MESSAGE(mine.size() == graph.edges().size(), pants::to_string(s));
    CHECK_MESSAGE(mine == oracle_edges(s), pants::to_string(s));
  }
}

TEST_CASE("move graphs are connected through six pants") {
  for (int v = 1; v <= 6; ++v) {
    for (int g = 0; 2 * g - 2 <= v; ++g) {
      SurfaceType s{g, v + 2 - 2 * g};
      CHECK_MESSAGE(pants::build_move_graph(s).component_count() == 1, pants::to_string(s));
    }
  }
}

TEST_CASE("membership and move labels") {
  auto g05 = pants::build_move_graph({0, 5});
  const auto& e = g05.edges().front();
  CHECK(g05.move_between(g05.vertices()[e.from], g05.vertices()[e.to]) == pants::MoveKind::A);
  CHECK_FALSE(g05.move_between(g05.vertices()[0], g05.vertices()[0]).has_value());
  CHECK(g05.contains(g05.vertices()[3]));
  CHECK_FALSE(g05.contains(pants::Slope(1, 2)));
  CHECK(g05.index_of(CanonicalCode{{0, 5}}) == -1);
  CHECK_THROWS_AS(pants::build_move_graph({0, 11}), std::length_error);
}

TEST_CASE("short cycles of the (0,5) graph") {
  // Frozen from a separate exhaustive cycle count of the same graph.
  auto g05 = pants::build_move_graph({0, 5});
  CHECK(pants::simple_cycles(g05, 3).size() == 10);
  CHECK(pants::simple_cycles(g05, 4).empty());
  CHECK(pants::simple_cycles(g05, 5).size() == 12);
  CHECK(pants::simple_cycles(g05, 6).size() == 70);
  for (const auto& c : pants::simple_cycles(g05, 5)) {
    CHECK(c.front() == *std::min_element(c.begin(), c.end()));
    CHECK(c[1] < c.back());
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(g05.adjacent(c[i], c[(i + 1) % c.size()]));
  }
  CHECK(pants::simple_cycles(pants::build_move_graph({0, 4}), 3).size() == 1);
}
