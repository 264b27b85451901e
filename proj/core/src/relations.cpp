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

#include "pants/relations.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pants {
namespace {

std::string describe_step(std::size_t i, const Vertex& a, const Vertex& b) {
  return "step " + std::to_string(i) + " (" + to_string(a) + " -> " + to_string(b) + ")";
}

// Edge patterns allowed for a type-level cell, one edge index per step.
std::vector<std::vector<int>> edge_patterns(RelationTag kind, const PantsGraph& start) {
  const auto& edges = start.edges();
  const int count = static_cast<int>(edges.size());
  std::vector<std::vector<int>> patterns;
  for (int e1 = 0; e1 < count; ++e1) {
    if (edges[e1].is_loop()) continue;
    if (kind == RelationTag::R3A) {
      patterns.push_back({e1, e1, e1});
      continue;
    }
    for (int e2 = 0; e2 < count; ++e2) {
      if (e2 == e1 || edges[e2].is_loop()) continue;
      std::vector<int> ends{edges[e1].a, edges[e1].b, edges[e2].a, edges[e2].b};
      std::sort(ends.begin(), ends.end());
      const auto distinct = std::unique(ends.begin(), ends.end()) - ends.begin();
      if (kind == RelationTag::R5A && distinct == 3) {
        patterns.push_back({e1, e2, e1, e2, e1});
      } else if (kind == RelationTag::RC && distinct == 4) {
        patterns.push_back({e1, e2, e1, e2});
      }
    }
  }
  return patterns;
}

bool replay(const std::vector<CanonicalCode>& boundary, const std::vector<int>& pattern,
            const PantsGraph& graph, std::size_t step, std::vector<StepSite>& sites,
            const std::vector<StepSite>* fixed) {
  if (step == pattern.size()) return true;
  const CanonicalCode& target = boundary[(step + 1) % boundary.size()];
  for (int branch = 0; branch < 2; ++branch) {
    if (fixed && (*fixed)[step].branch != branch) continue;
    PantsGraph next = apply_a_move(graph, pattern[step], branch);
    if (canonical_code(next) != target) continue;
    sites[step] = StepSite{MoveKind::A, pattern[step], branch};
    if (replay(boundary, pattern, next, step + 1, sites, fixed)) return true;
  }
  return false;
}

std::optional<std::vector<StepSite>> realize(RelationTag kind,
                                             const std::vector<CanonicalCode>& boundary,
                                             const std::vector<StepSite>& hint) {
  if (kind != RelationTag::R3A && kind != RelationTag::R5A && kind != RelationTag::RC) {
    return std::nullopt;
  }
  const PantsGraph start = decode(boundary.front());
  std::vector<std::vector<int>> patterns = edge_patterns(kind, start);
  const bool fixed = !hint.empty() && std::all_of(hint.begin(), hint.end(), [](const StepSite& s) {
    return s.edge >= 0 && s.branch >= 0;
  });
  std::vector<StepSite> sites(boundary.size());
  for (const auto& pattern : patterns) {
    if (fixed) {
      bool same = std::equal(pattern.begin(), pattern.end(), hint.begin(), hint.end(),
                             [](int e, const StepSite& s) { return e == s.edge; });
      if (!same) continue;
    }
    if (replay(boundary, pattern, start, 0, sites, fixed ? &hint : nullptr)) return sites;
  }
  return std::nullopt;
}

std::vector<CanonicalCode> codes_of(const std::vector<Vertex>& boundary) {
  std::vector<CanonicalCode> codes;
  for (const Vertex& v : boundary) codes.push_back(std::get<CanonicalCode>(v));
  return codes;
}

Verdict check_type_context(const RelationInstance& inst) {
  if (realize(inst.kind, codes_of(inst.boundary), inst.sites)) return Verdict::pass();
  switch (inst.kind) {
    case RelationTag::R3A:
      return Verdict::fail("3A locality: no single (0,4) complement realizes all three moves");
    case RelationTag::R5A:
      return Verdict::fail("5A locality: no (0,5) complement realizes the five moves");
    case RelationTag::RC:
      return Verdict::fail("C locality: no pair of disjoint-support moves realizes the square");
    default:
      return Verdict::fail(std::string(to_string(inst.kind)) +
                           " cells are not expressible at type level");
  }
}

Verdict check_slope_context(const RelationInstance& inst, SlopeModel model,
                            const FareySubcomplex* window) {
  if (inst.kind != triangle_relation(model)) {
    return Verdict::fail(std::string(to_string(inst.kind)) + " cells do not occur in the " +
                         to_string(model) + "-model slope complex");
  }
  if (window) {
    std::array<Slope, 3> corners{std::get<Slope>(inst.boundary[0]),
                                 std::get<Slope>(inst.boundary[1]),
                                 std::get<Slope>(inst.boundary[2])};
    if (!window->has_triangle(corners)) {
      return Verdict::fail("triangle is not a face of the window");
    }
  }
  return Verdict::pass();
}

int permutation_order(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<char> seen(n, 0);
  int order = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = perm[j] - 1) {
      seen[j] = 1;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

}  // namespace

Verdict validate_instance(const RelationInstance& inst, const Complex& host) {
  const RelationKind kind = relation_kind(inst.kind);
  const std::size_t k = inst.boundary.size();
  if (static_cast<int>(k) != kind.boundary_length) {
    return Verdict::fail("boundary length " + std::to_string(k) + " but " + to_string(inst.kind) +
                         " cells have length " + std::to_string(kind.boundary_length));
  }
  if (!inst.sites.empty() && inst.sites.size() != k) {
    return Verdict::fail("expected " + std::to_string(k) + " sites, got " +
                         std::to_string(inst.sites.size()));
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!host.contains(inst.boundary[i])) {
      return Verdict::fail("vertex " + std::to_string(i) + " (" + to_string(inst.boundary[i]) +
                           ") is not in the host");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (inst.boundary[i] == inst.boundary[j]) {
        return Verdict::fail("vertex " + std::to_string(i) + " repeats vertex " +
                             std::to_string(j));
      }
    }
  }
  std::vector<MoveKind> moves;
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex& a = inst.boundary[i];
    const Vertex& b = inst.boundary[(i + 1) % k];
    auto move = host.move_between(a, b);
    if (!move) return Verdict::fail(describe_step(i, a, b) + " is not an edge of the host");
    if (!inst.sites.empty() && inst.sites[i].kind != *move) {
      return Verdict::fail(describe_step(i, a, b) + " is an " + to_string(*move) +
                           "-move, site says " + to_string(inst.sites[i].kind));
    }
    moves.push_back(*move);
  }
  const int a_count = static_cast<int>(std::count(moves.begin(), moves.end(), MoveKind::A));
  const int s_count = static_cast<int>(k) - a_count;
  if (inst.kind == RelationTag::RC) {
    if (moves[0] != moves[2] || moves[1] != moves[3]) {
      return Verdict::fail("C square must use each of its two moves twice");
    }
  } else if (a_count != kind.a_moves || s_count != kind.s_moves) {
    return Verdict::fail(std::string("move multiset mismatch: ") + to_string(inst.kind) +
                         " needs " + std::to_string(kind.a_moves) + "A+" +
                         std::to_string(kind.s_moves) + "S, boundary has " +
                         std::to_string(a_count) + "A+" + std::to_string(s_count) + "S");
  }

  if (dynamic_cast<const TypeMoveGraph*>(&host)) return check_type_context(inst);
  if (const auto* window = dynamic_cast<const FareySubcomplex*>(&host)) {
    return check_slope_context(inst, window->model(), window);
  }
  if (const auto* farey = dynamic_cast<const FareyComplex*>(&host)) {
    return check_slope_context(inst, farey->model(), nullptr);
  }
  return Verdict::fail("unsupported host");
}

CanonicalCode pair_state_0_5(std::pair<int, int> first, std::pair<int, int> second) {
  std::array<int, 4> labels{first.first, first.second, second.first, second.second};
  for (int l : labels) {
    if (l < 1 || l > 5) throw std::invalid_argument("leg label " + std::to_string(l) + " not in 1..5");
  }
  std::array<int, 4> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("pairs {" + std::to_string(first.first) + "," +
                                std::to_string(first.second) + "} and {" +
                                std::to_string(second.first) + "," +
                                std::to_string(second.second) + "} are not disjoint");
  }
  int leftover = 15 - (labels[0] + labels[1] + labels[2] + labels[3]);
  PantsGraph graph({0, 5}, 3,
                   {{labels[0], 0}, {labels[1], 0}, {leftover, 1}, {labels[2], 2}, {labels[3], 2}},
                   {{0, 1}, {1, 2}});
  return canonical_code(graph);
}

RelationInstance pair_cycle_instance(RelationTag kind, const std::vector<PairState>& states) {
  RelationInstance inst;
  inst.kind = kind;
  for (std::size_t i = 0; i < states.size(); ++i) {
    try {
      inst.boundary.emplace_back(pair_state_0_5(states[i][0], states[i][1]));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("state " + std::to_string(i) + " is not a vertex: " + e.what());
    }
  }
  if (!inst.boundary.empty()) {
    if (auto sites = realize(kind, codes_of(inst.boundary), {})) inst.sites = *sites;
  }
  return inst;
}

RelationInstance pentagon_instance_0_5(int start_index) {
  auto beta = [](int i) { return std::pair{i, i % 5 + 1}; };
  std::vector<PairState> states{{beta(1), beta(3)}, {beta(1), beta(4)}, {beta(2), beta(4)},
                                {beta(2), beta(5)}, {beta(3), beta(5)}};
  const int shift = ((start_index % 5) + 5) % 5;
  std::rotate(states.begin(), states.begin() + shift, states.end());
  return pair_cycle_instance(RelationTag::R5A, states);
}

std::vector<RelationInstance> find_instances(const Complex& host, RelationTag kind) {
  if (!host.is_finite()) {
    throw std::invalid_argument("find_instances needs a finite host");
  }
  std::vector<RelationInstance> out;
  if (const auto* window = dynamic_cast<const FareySubcomplex*>(&host)) {
    if (kind != triangle_relation(window->model())) return out;
    const StepSite site{edge_move(window->model())};
    for (const auto& t : window->triangles()) {
      out.push_back(RelationInstance{kind, {t[0], t[1], t[2]}, {site, site, site}});
    }
    return out;
  }
  const auto* types = dynamic_cast<const TypeMoveGraph*>(&host);
  if (!types) throw std::invalid_argument("find_instances: unsupported host");
  int length = 0;
  switch (kind) {
    case RelationTag::R3A: length = 3; break;
    case RelationTag::R5A: length = 5; break;
    case RelationTag::RC: length = 4; break;
    default: return out;
  }
  for (const auto& cycle : simple_cycles(*types, length)) {
    std::vector<CanonicalCode> codes;
    for (int i : cycle) codes.push_back(types->vertices()[i]);
    if (auto sites = realize(kind, codes, {})) {
      RelationInstance inst{kind, {}, *sites};
      for (auto& c : codes) inst.boundary.emplace_back(std::move(c));
      out.push_back(std::move(inst));
    }
  }
  return out;
}

CommuteResult commute_check(const TypeMoveGraph& host, int vertex, int e1, int e2) {
  if (vertex < 0 || vertex >= static_cast<int>(host.vertices().size())) {
    throw std::out_of_range("commute_check: no vertex " + std::to_string(vertex));
  }
  const PantsGraph start = decode(host.vertices()[vertex]);
  const int edge_count = static_cast<int>(start.edges().size());
  if (e1 < 0 || e2 < 0 || e1 >= edge_count || e2 >= edge_count) {
    throw std::out_of_range("commute_check: edge index out of range");
  }
  const InternalEdge& a = start.edges()[e1];
  const InternalEdge& b = start.edges()[e2];
  if (a.is_loop() || b.is_loop()) {
    throw std::invalid_argument("commute_check: both sites must be A-moves (non-loop edges)");
  }
  if (e1 == e2 || a.a == b.a || a.a == b.b || a.b == b.a || a.b == b.b) {
    throw std::invalid_argument("commute_check: move supports are not disjoint");
  }
  CommuteResult result;
  for (int b1 = 0; b1 < 2; ++b1) {
    for (int b2 = 0; b2 < 2; ++b2) {
      const PantsGraph first = apply_a_move(start, e1, b1);
      const PantsGraph second = apply_a_move(start, e2, b2);
      const CanonicalCode one_two = canonical_code(apply_a_move(first, e2, b2));
      const CanonicalCode two_one = canonical_code(apply_a_move(second, e1, b1));
      if (one_two != two_one) {
        result.commutes = false;
        result.violations.emplace_back(b1, b2);
        continue;
      }
      std::vector<CanonicalCode> corners{host.vertices()[vertex], canonical_code(first), one_two,
                                         canonical_code(second)};
      std::vector<CanonicalCode> sorted = corners;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
      RelationInstance square{RelationTag::RC, {}, {}};
      for (auto& c : corners) square.boundary.emplace_back(c);
      if (auto sites = realize(RelationTag::RC, corners, {})) square.sites = *sites;
      result.squares.push_back(std::move(square));
    }
  }
  return result;
}

std::vector<std::vector<int>> symmetric_cycles(const TypeMoveGraph& host, int length, int order) {
  if (order < 1 || length % order != 0) {
    throw std::invalid_argument("symmetric_cycles: order must divide the length");
  }
  const int n = host.surface().boundary_count;
  const int shift = length / order;
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    if (permutation_order(perm) == order) perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<PantsGraph> graphs;
  for (const auto& code : host.vertices()) graphs.push_back(decode(code));
  std::vector<std::vector<int>> out;
  for (const auto& cycle : simple_cycles(host, length)) {
    for (const auto& p : perms) {
      bool invariant = true;
      for (int i = 0; i < length && invariant; ++i) {
        CanonicalCode image = canonical_code(relabel_legs(graphs[cycle[i]], p));
        invariant = image == host.vertices()[cycle[(i + shift) % length]];
      }
      if (invariant) {
        out.push_back(cycle);
        break;
      }
    }
  }
  return out;
}

HexagonTemplate hexagon_template_6as() {
  return {relation_kind(RelationTag::R6AS),
          {{"alpha1", "alpha3"},
           {"alpha1", "epsilon3"},
           {"alpha2", "epsilon3"},
           {"alpha2", "epsilon2"},
           {"alpha2", "epsilon1"},
           {"alpha3", "epsilon1"}}};
}

}  // namespace pants
