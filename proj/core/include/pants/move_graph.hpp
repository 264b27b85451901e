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
#include "pants/pants_graph.hpp"

#include <vector>

namespace pants {

/// An A-move edge of the type graph. `from` < `to` index into vertices();
/// `site` is the least (edge, branch) of decode(vertices()[from]) producing
/// vertices()[to].
struct MoveEdge {
  int from = 0;
  int to = 0;
  int edge = 0;
  int branch = 0;
  friend auto operator<=>(const MoveEdge&, const MoveEdge&) = default;
};

/// Type-level quotient of the pants decomposition complex: one vertex per
/// isomorphism type, one edge per pair of types related by an A-move.
/// S-moves and A-moves whose outcome is isomorphic to the source fix the type
/// and are only counted, not drawn.
class TypeMoveGraph : public Complex {
 public:
  TypeMoveGraph(SurfaceType surface, std::vector<CanonicalCode> vertices,
                std::vector<MoveEdge> edges, int type_fixing_moves);

  SurfaceType surface() const { return surface_; }
  const std::vector<CanonicalCode>& vertices() const { return vertices_; }
  const std::vector<MoveEdge>& edges() const { return edges_; }
  int type_fixing_moves() const { return type_fixing_moves_; }
  /// Sorted neighbour indices of vertex i.
  const std::vector<int>& neighbours(int i) const { return adjacency_[i]; }

  /// Index of `code`, or -1.
  int index_of(const CanonicalCode& code) const;
  bool adjacent(int i, int j) const;
  int component_count() const;

  bool contains(const Vertex& v) const override;
  std::optional<MoveKind> move_between(const Vertex& a, const Vertex& b) const override;
  bool is_finite() const override { return true; }
  nlohmann::json descriptor() const override;

  friend bool operator==(const TypeMoveGraph& a, const TypeMoveGraph& b) {
    return a.surface_ == b.surface_ && a.vertices_ == b.vertices_ && a.edges_ == b.edges_ &&
           a.type_fixing_moves_ == b.type_fixing_moves_;
  }

 private:
  SurfaceType surface_;
  std::vector<CanonicalCode> vertices_;
  std::vector<MoveEdge> edges_;
  int type_fixing_moves_;
  std::vector<std::vector<int>> adjacency_;
};

/// Throws std::length_error beyond the enumeration size guard.
TypeMoveGraph build_move_graph(SurfaceType s);

/// Simple cycles of the given length (>= 3), each listed once up to rotation
/// and reflection: it starts at its least vertex index and its second vertex
/// is smaller than its last. Sorted.
std::vector<std::vector<int>> simple_cycles(const TypeMoveGraph& graph, int length);

}  // namespace pants
