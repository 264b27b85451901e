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

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <variant>
#include <vector>

namespace pants {

/// Vertices of an edge path; consecutive entries are joined by host edges.
/// A loop repeats its basepoint at the end; the constant loop is {b}.
using EdgePath = std::vector<Vertex>;

/// Removes loop[position + 1] and loop[position + 2]; requires
/// loop[position] == loop[position + 2].
struct CancelBacktrack {
  std::size_t position = 0;
  friend bool operator==(const CancelBacktrack&, const CancelBacktrack&) = default;
};

/// Inserts `vertex`, loop[position] after loop[position].
struct InsertBacktrack {
  std::size_t position = 0;
  Vertex vertex;
  friend bool operator==(const InsertBacktrack&, const InsertBacktrack&) = default;
};

/// Replaces loop[position .. position + length], which must run along one arc
/// of the cell boundary, by the complementary arc between the same
/// endpoints. 1 <= length < boundary size.
struct CellSwap {
  std::size_t position = 0;
  std::size_t length = 0;
  RelationInstance cell;
  friend bool operator==(const CellSwap&, const CellSwap&) = default;
};

using HomotopyStep = std::variant<CancelBacktrack, InsertBacktrack, CellSwap>;

struct Certificate {
  nlohmann::json host;  ///< descriptor of the complex the loop lives in
  EdgePath initial;
  std::vector<HomotopyStep> steps;
  EdgePath final_loop;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Replays `cert` on `host`, checking every intermediate loop and validating
/// every cited cell. Passes iff the replay ends at cert.final_loop and that
/// loop is constant. The diagnostic names the first failing step.
Verdict verify_certificate(const Complex& host, const Certificate& cert);

/// Applies one step without host checks. Throws std::invalid_argument when
/// the step does not match the loop's shape.
EdgePath apply_step(const EdgePath& loop, const HomotopyStep& step);

/// Drops every insert-backtrack that is immediately undone by the next step.
Certificate normalize(Certificate cert);

/// Contracts a closed loop of the slope complex to its basepoint using
/// backtrack cancellation and triangle swaps only.
///
/// Each round removes the slope of largest complexity |p| + q: interior
/// occurrences are pushed off along fan paths; when only the basepoint
/// attains the maximum the loop is conjugated past it so the inner loop
/// starts at a parent slope. The measure (max complexity, number of interior
/// positions attaining it, length) of the inner loop strictly decreases each
/// round; a violation throws std::logic_error. Throws std::invalid_argument
/// for open paths or non-edges.
Certificate reduce_farey_loop(SlopeModel model, const EdgePath& loop);

struct FillBudget {
  std::size_t max_states = 200000;
  std::size_t max_extra_length = 4;  ///< loops longer than initial + this are pruned
};

enum class FillStatus { Filled, BudgetExhausted, SearchExhausted };

const char* to_string(FillStatus status);

struct FillResult {
  FillStatus status = FillStatus::SearchExhausted;
  Certificate certificate;  ///< meaningful only when Filled
  std::size_t explored = 0;
};

/// Breadth-first search over freely reduced based loops, one cell swap per
/// level, for a contraction using only `cells`. The certificate found uses
/// the fewest cell swaps among loops within the length cap. Throws
/// std::invalid_argument for invalid cells or loops.
FillResult fill_finite_loop(const TypeMoveGraph& host, const EdgePath& loop,
                            std::span<const RelationInstance> cells, FillBudget budget = {});

/// Counts cell swaps in a certificate by relation family.
std::map<RelationTag, int> cell_usage(const Certificate& cert);

struct SimplyConnectedReport {
  int basis_loops = 0;
  int filled = 0;
  int failed = 0;
  std::vector<Certificate> certificates;  ///< one per filled loop, basis order
  std::vector<EdgePath> unfilled;
  std::vector<FillStatus> unfilled_status;  ///< parallel to unfilled
};

/// Fills each fundamental cycle of a BFS spanning tree rooted at vertex 0.
SimplyConnectedReport simply_connected_report(const TypeMoveGraph& host,
                                              std::span<const RelationInstance> cells,
                                              FillBudget budget = {});

/// Fundamental cycles of a BFS spanning tree rooted at vertex 0, one per
/// chord in edge order, as loops based at the root.
std::vector<std::vector<int>> cycle_basis(const TypeMoveGraph& host);

/// A random closed loop in the slope complex: a random walk out along
/// neighbours with denominator <= max_den, then back along the reverse walk
/// where each return edge is replaced, with probability 1/2, by the detour
/// through a triangle completion. At most 3 * max_out edges.
EdgePath random_farey_loop(std::mt19937_64& rng, int max_out, const BigInt& max_den);

}  // namespace pants
