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

#pragma once

#include "pants/complex.hpp"
#include "pants/farey.hpp"
#include "pants/move_graph.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pants {

/// Checks that `inst` is a cell of `host`: the boundary is a closed cycle of
/// distinct vertices joined by host edges, the moves along it form the
/// multiset of its family, and the family's locality condition holds.
///
/// Locality in type-level hosts is checked by replaying the boundary on the
/// dual graph of boundary[0]: 3A moves all act on one edge, 5A moves
/// alternate between two edges bounding a (0,5) piece, C moves alternate
/// between two edges with disjoint supports. When every site carries an edge
/// and branch that replay is checked as given, otherwise one is searched for.
Verdict validate_instance(const RelationInstance& inst, const Complex& host);

/// The (0,5) vertex whose cut circles surround the leg pairs `first` and
/// `second`. Throws std::invalid_argument unless the four labels are distinct
/// members of 1..5.
CanonicalCode pair_state_0_5(std::pair<int, int> first, std::pair<int, int> second);

using PairState = std::array<std::pair<int, int>, 2>;

/// Builds an instance of `kind` from (0,5) pair states, filling sites when a
/// realization exists. Throws std::invalid_argument when a state is not a
/// vertex (see pair_state_0_5); the message names its position.
RelationInstance pair_cycle_instance(RelationTag kind, const std::vector<PairState>& states);

/// The 5A pentagon with beta_i = {i, i+1 mod 5}:
/// {b1,b3} -> {b1,b4} -> {b2,b4} -> {b2,b5} -> {b3,b5}, rotated left by
/// start_index (taken mod 5).
RelationInstance pentagon_instance_0_5(int start_index);

/// Every instance of `kind` in a finite host, once up to rotation and
/// reflection, sorted. Families that cannot occur in the host give an empty
/// list. Throws std::invalid_argument for infinite hosts.
std::vector<RelationInstance> find_instances(const Complex& host, RelationTag kind);

struct CommuteResult {
  bool commutes = true;
  /// Branch pairs (b1, b2) whose two orders disagree.
  std::vector<std::pair<int, int>> violations;
  /// One C square per branch pair whose four corners are distinct types.
  std::vector<RelationInstance> squares;
};

/// Applies A-moves at edges e1 and e2 of decode(vertices()[vertex]) in both
/// orders for all four branch pairs. Throws std::invalid_argument when either
/// edge is a self-loop or the supports (the edges and their end pants) meet.
CommuteResult commute_check(const TypeMoveGraph& host, int vertex, int e1, int e2);

/// Simple cycles mapped to themselves by a leg relabelling of exact order
/// `order` that rotates the cycle by length/order steps.
std::vector<std::vector<int>> symmetric_cycles(const TypeMoveGraph& host, int length, int order);

/// Structural form of the 6AS hexagon: symbolic curve pairs in boundary
/// order. Which steps are S-moves is not recorded.
struct HexagonTemplate {
  RelationKind kind;
  std::vector<std::array<std::string, 2>> boundary;
};

HexagonTemplate hexagon_template_6as();

}  // namespace pants
