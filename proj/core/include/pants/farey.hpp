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

#include <array>
#include <utility>
#include <vector>

namespace pants {

/// Which surface the slope complex models. The two complexes are the same
/// Farey tessellation; only the labels differ.
enum class SlopeModel {
  A,  ///< (0,4): edges are A-moves, triangles are 3A cells
  S,  ///< (1,1): edges are S-moves, triangles are 3S cells
};

MoveKind edge_move(SlopeModel model);
RelationTag triangle_relation(SlopeModel model);
const char* to_string(SlopeModel model);

/// The whole (infinite) slope complex of one model.
class FareyComplex : public Complex {
 public:
  explicit FareyComplex(SlopeModel model) : model_(model) {}

  SlopeModel model() const { return model_; }

  bool contains(const Vertex& v) const override;
  std::optional<MoveKind> move_between(const Vertex& a, const Vertex& b) const override;
  bool is_finite() const override { return false; }
  nlohmann::json descriptor() const override;

 private:
  SlopeModel model_;
};

/// A finite, face-closed window into the slope complex. All lists are sorted
/// in slope order; edges as (smaller, larger), triangles ascending.
class FareySubcomplex : public Complex {
 public:
  FareySubcomplex(SlopeModel model, std::vector<Slope> vertices,
                  std::vector<std::pair<Slope, Slope>> edges,
                  std::vector<std::array<Slope, 3>> triangles);

  SlopeModel model() const { return model_; }
  const std::vector<Slope>& vertices() const { return vertices_; }
  const std::vector<std::pair<Slope, Slope>>& edges() const { return edges_; }
  const std::vector<std::array<Slope, 3>>& triangles() const { return triangles_; }

  bool has_edge(const Slope& a, const Slope& b) const;
  bool has_triangle(std::array<Slope, 3> t) const;

  bool contains(const Vertex& v) const override;
  std::optional<MoveKind> move_between(const Vertex& a, const Vertex& b) const override;
  bool is_finite() const override { return true; }
  nlohmann::json descriptor() const override;

  friend bool operator==(const FareySubcomplex& a, const FareySubcomplex& b) {
    return a.model_ == b.model_ && a.vertices_ == b.vertices_ && a.edges_ == b.edges_ &&
           a.triangles_ == b.triangles_;
  }

 private:
  SlopeModel model_;
  std::vector<Slope> vertices_;
  std::vector<std::pair<Slope, Slope>> edges_;
  std::vector<std::array<Slope, 3>> triangles_;
};

/// All slopes with |p| <= limit and q <= limit, every adjacency among them
/// and every triangle with all three corners present. Throws
/// std::invalid_argument for limit < 1.
FareySubcomplex bounded_subcomplex(SlopeModel model, int limit);

}  // namespace pants
