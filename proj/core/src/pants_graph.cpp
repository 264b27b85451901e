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

#include "pants/pants_graph.hpp"

#include <algorithm>
#include <numeric>

namespace pants {

const char* to_string(MoveKind kind) { return kind == MoveKind::A ? "A" : "S"; }

PantsGraph::PantsGraph(SurfaceType surface, int pant_count, std::vector<Leg> legs,
                       std::vector<InternalEdge> edges)
    : surface_(surface), pant_count_(pant_count), legs_(std::move(legs)), edges_(std::move(edges)) {
  try {
    validate_surface(surface.genus, surface.boundary_count);
  } catch (const std::invalid_argument& e) {
    throw InvalidGraph(std::string("surface admissibility: ") + e.what());
  }
  const int n = surface.boundary_count;
  if (pant_count_ != pants_count(surface)) {
    throw InvalidGraph("pants count: expected 2g-2+n = " + std::to_string(pants_count(surface)) +
                       ", got " + std::to_string(pant_count_));
  }
  if (static_cast<int>(legs_.size()) != n) {
    throw InvalidGraph("leg count: expected n = " + std::to_string(n) + ", got " +
                       std::to_string(legs_.size()));
  }
  std::sort(legs_.begin(), legs_.end());
  for (int i = 0; i < n; ++i) {
    if (legs_[i].label != i + 1) {
      throw InvalidGraph("leg labels: labels must be exactly 1..n");
    }
    if (legs_[i].pant < 0 || legs_[i].pant >= pant_count_) {
      throw InvalidGraph("leg attachment: leg " + std::to_string(legs_[i].label) +
                         " attached to unknown pant " + std::to_string(legs_[i].pant));
    }
  }
  if (static_cast<int>(edges_.size()) != curve_count(surface)) {
    throw InvalidGraph("edge count: expected 3g-3+n = " + std::to_string(curve_count(surface)) +
                       ", got " + std::to_string(edges_.size()));
  }
  std::vector<int> valence(pant_count_, 0);
  for (const Leg& leg : legs_) ++valence[leg.pant];
  for (const InternalEdge& e : edges_) {
    if (e.a < 0 || e.a >= pant_count_ || e.b < 0 || e.b >= pant_count_) {
      throw InvalidGraph("edge endpoints: edge " + std::to_string(e.a) + "-" + std::to_string(e.b) +
                         " references an unknown pant");
    }
    ++valence[e.a];
    ++valence[e.b];
  }
  for (int p = 0; p < pant_count_; ++p) {
    if (valence[p] != 3) {
      throw InvalidGraph("valence 3: pant " + std::to_string(p) + " has valence " +
                         std::to_string(valence[p]));
    }
  }
  std::vector<int> parent(pant_count_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = pant_count_;
  for (const InternalEdge& e : edges_) {
    int ra = find(e.a), rb = find(e.b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  if (components != 1) {
    throw InvalidGraph("connectivity: graph has " + std::to_string(components) + " components");
  }
}

std::vector<Incidence> PantsGraph::incidences(int pant) const {
  std::vector<Incidence> out;
  out.reserve(3);
  for (const Leg& leg : legs_) {
    if (leg.pant == pant) out.push_back({true, leg.label, 0});
  }
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    if (edges_[i].a == pant) out.push_back({false, i, 0});
    if (edges_[i].b == pant) out.push_back({false, i, 1});
  }
  return out;
}

SurfaceType complement_type(const PantsGraph& graph, int edge) {
  if (edge < 0 || edge >= static_cast<int>(graph.edges().size())) {
    throw std::out_of_range("complement_type: " + std::to_string(edge) +
                            " is not an internal edge index");
  }
  return graph.edges()[edge].is_loop() ? SurfaceType{1, 1} : SurfaceType{0, 4};
}

PantsGraph apply_a_move(const PantsGraph& graph, int edge, int branch) {
  if (edge < 0 || edge >= static_cast<int>(graph.edges().size())) {
    throw std::out_of_range("apply_a_move: no internal edge " + std::to_string(edge));
  }
  const InternalEdge moved = graph.edges()[edge];
  if (moved.is_loop()) {
    throw std::invalid_argument("apply_a_move: edge " + std::to_string(edge) +
                                " is a self-loop; only S-moves apply there");
  }
  auto others = [&](int pant, int side) {
    std::vector<Incidence> inc = graph.incidences(pant);
    inc.erase(std::find(inc.begin(), inc.end(), Incidence{false, edge, side}));
    return inc;
  };
  const std::vector<Incidence> at_a = others(moved.a, 0);
  const std::vector<Incidence> at_b = others(moved.b, 1);

  std::vector<Leg> legs = graph.legs();
  std::vector<InternalEdge> edges = graph.edges();
  auto attach = [&](const Incidence& inc, int pant) {
    if (inc.is_leg) {
      legs[inc.index - 1].pant = pant;
    } else if (inc.side == 0) {
      edges[inc.index].a = pant;
    } else {
      edges[inc.index].b = pant;
    }
  };
  const Incidence& keep_b_partner = branch == 0 ? at_b[0] : at_b[1];
  const Incidence& swap_partner = branch == 0 ? at_b[1] : at_b[0];
  attach(at_a[0], moved.a);
  attach(keep_b_partner, moved.a);
  attach(at_a[1], moved.b);
  attach(swap_partner, moved.b);
  return PantsGraph(graph.surface(), graph.pant_count(), std::move(legs), std::move(edges));
}

std::vector<LegalMove> legal_moves(const PantsGraph& graph) {
  std::vector<LegalMove> moves;
  const CanonicalCode own = canonical_code(graph);
  for (int i = 0; i < static_cast<int>(graph.edges().size()); ++i) {
    LegalMove move;
    move.edge = i;
    if (graph.edges()[i].is_loop()) {
      move.kind = MoveKind::S;
      move.outcomes = {own};
    } else {
      move.kind = MoveKind::A;
      move.outcomes = {canonical_code(apply_a_move(graph, i, 0)),
                       canonical_code(apply_a_move(graph, i, 1))};
      std::sort(move.outcomes.begin(), move.outcomes.end());
      move.outcomes.erase(std::unique(move.outcomes.begin(), move.outcomes.end()),
                          move.outcomes.end());
    }
    moves.push_back(std::move(move));
  }
  return moves;
}

PantsGraph relabel_legs(const PantsGraph& graph, std::span<const int> perm) {
  const int n = graph.surface().boundary_count;
  if (static_cast<int>(perm.size()) != n) {
    throw std::invalid_argument("relabel_legs: permutation has wrong size");
  }
  std::vector<Leg> legs;
  legs.reserve(n);
  for (const Leg& leg : graph.legs()) legs.push_back({perm[leg.label - 1], leg.pant});
  return PantsGraph(graph.surface(), graph.pant_count(), std::move(legs), graph.edges());
}

}  // namespace pants
