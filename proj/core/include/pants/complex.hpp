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

#include "pants/pants_graph.hpp"
#include "pants/slope.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace pants {

/// A vertex of one of the supported complexes: a slope in the (0,4)/(1,1)
/// models, or a topological type in a type-level move graph.
using Vertex = std::variant<Slope, CanonicalCode>;

std::string to_string(const Vertex& v);

/// Result of a check that can fail with an explanation.
struct Verdict {
  bool ok = true;
  std::string diagnostic;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

/// A 2-complex that relation cells and homotopy certificates live in.
class Complex {
 public:
  virtual ~Complex() = default;

  virtual bool contains(const Vertex& v) const = 0;
  /// The move labelling the edge {a, b}, or nullopt when there is no edge.
  virtual std::optional<MoveKind> move_between(const Vertex& a, const Vertex& b) const = 0;
  /// True when the complex has finitely many vertices.
  virtual bool is_finite() const = 0;
  /// JSON descriptor from which the complex can be rebuilt (see host_from_json).
  virtual nlohmann::json descriptor() const = 0;
};

enum class RelationTag { R3A, R5A, R3S, R6AS, RC };

/// "3A", "5A", "3S", "6AS", "C".
const char* to_string(RelationTag tag);
/// Inverse of to_string; throws std::invalid_argument.
RelationTag parse_relation_tag(std::string_view text);

/// Fixed shape of each relation family.
struct RelationKind {
  RelationTag tag;
  int boundary_length;
  int a_moves;  ///< for RC: the number of moves, each used twice
  int s_moves;
};

RelationKind relation_kind(RelationTag tag);

/// The move performed between boundary[i] and boundary[i+1]. In type-level
/// hosts `edge`/`branch` name the A-move applied to the graph obtained by
/// replaying the earlier steps from decode(boundary[0]); -1 means
/// unspecified.
struct StepSite {
  MoveKind kind = MoveKind::A;
  int edge = -1;
  int branch = -1;
  friend bool operator==(const StepSite&, const StepSite&) = default;
};

/// A relation cell: a closed cyclic edge path of the host with the moves
/// along each step.
struct RelationInstance {
  RelationTag kind = RelationTag::R3A;
  std::vector<Vertex> boundary;
  std::vector<StepSite> sites;
  friend bool operator==(const RelationInstance&, const RelationInstance&) = default;
};

}  // namespace pants
