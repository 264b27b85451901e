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

#include "pants/farey.hpp"

#include "pants/json_io.hpp"

#include <algorithm>
#include <boost/integer/common_factor_rt.hpp>
#include <stdexcept>

namespace pants {

MoveKind edge_move(SlopeModel model) { return model == SlopeModel::A ? MoveKind::A : MoveKind::S; }

RelationTag triangle_relation(SlopeModel model) {
  return model == SlopeModel::A ? RelationTag::R3A : RelationTag::R3S;
}

const char* to_string(SlopeModel model) { return model == SlopeModel::A ? "A" : "S"; }

bool FareyComplex::contains(const Vertex& v) const { return std::holds_alternative<Slope>(v); }

std::optional<MoveKind> FareyComplex::move_between(const Vertex& a, const Vertex& b) const {
  const auto* sa = std::get_if<Slope>(&a);
  const auto* sb = std::get_if<Slope>(&b);
  if (!sa || !sb || !is_adjacent(*sa, *sb)) return std::nullopt;
  return edge_move(model_);
}

nlohmann::json FareyComplex::descriptor() const {
  return {{"model", "farey"}, {"kind", to_string(model_)}};
}

FareySubcomplex::FareySubcomplex(SlopeModel model, std::vector<Slope> vertices,
                                 std::vector<std::pair<Slope, Slope>> edges,
                                 std::vector<std::array<Slope, 3>> triangles)
    : model_(model), vertices_(std::move(vertices)), edges_(std::move(edges)),
      triangles_(std::move(triangles)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  for (auto& [a, b] : edges_) {
    if (b < a) std::swap(a, b);
    if (!is_adjacent(a, b)) {
      throw std::invalid_argument("subcomplex edge " + a.to_string() + " " + b.to_string() +
                                  " fails the adjacency predicate");
    }
    if (!std::binary_search(vertices_.begin(), vertices_.end(), a) ||
        !std::binary_search(vertices_.begin(), vertices_.end(), b)) {
      throw std::invalid_argument("subcomplex edge " + a.to_string() + " " + b.to_string() +
                                  " has a vertex outside the subcomplex");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto& t : triangles_) {
    std::sort(t.begin(), t.end());
    if (!has_edge(t[0], t[1]) || !has_edge(t[1], t[2]) || !has_edge(t[0], t[2])) {
      throw std::invalid_argument("subcomplex triangle " + t[0].to_string() + " " +
                                  t[1].to_string() + " " + t[2].to_string() +
                                  " has a side outside the subcomplex");
    }
  }
  std::sort(triangles_.begin(), triangles_.end());
  triangles_.erase(std::unique(triangles_.begin(), triangles_.end()), triangles_.end());
}

bool FareySubcomplex::has_edge(const Slope& a, const Slope& b) const {
  auto key = b < a ? std::pair{b, a} : std::pair{a, b};
  return std::binary_search(edges_.begin(), edges_.end(), key);
}

bool FareySubcomplex::has_triangle(std::array<Slope, 3> t) const {
  std::sort(t.begin(), t.end());
  return std::binary_search(triangles_.begin(), triangles_.end(), t);
}

bool FareySubcomplex::contains(const Vertex& v) const {
  const auto* s = std::get_if<Slope>(&v);
  return s && std::binary_search(vertices_.begin(), vertices_.end(), *s);
}

std::optional<MoveKind> FareySubcomplex::move_between(const Vertex& a, const Vertex& b) const {
  const auto* sa = std::get_if<Slope>(&a);
  const auto* sb = std::get_if<Slope>(&b);
  if (!sa || !sb || !has_edge(*sa, *sb)) return std::nullopt;
  return edge_move(model_);
}

nlohmann::json FareySubcomplex::descriptor() const {
  return {{"model", "farey-window"}, {"subcomplex", to_json(*this)}};
}

FareySubcomplex bounded_subcomplex(SlopeModel model, int limit) {
  if (limit < 1) throw std::invalid_argument("bounded_subcomplex: limit must be >= 1");
  std::vector<Slope> vertices{Slope::infinity()};
  for (int q = 1; q <= limit; ++q) {
    for (int p = -limit; p <= limit; ++p) {
      if (boost::integer::gcd(p < 0 ? -p : p, q) == 1) vertices.emplace_back(p, q);
    }
  }
  std::sort(vertices.begin(), vertices.end());

  std::vector<std::pair<Slope, Slope>> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (is_adjacent(vertices[i], vertices[j])) edges.emplace_back(vertices[i], vertices[j]);
    }
  }
  auto present = [&](const Slope& s) {
    return std::binary_search(vertices.begin(), vertices.end(), s);
  };
  std::vector<std::array<Slope, 3>> triangles;
  for (const auto& [a, b] : edges) {
    auto [c1, c2] = triangle_completions(a, b);
    for (const Slope& c : {c1, c2}) {
      // Emit each triangle once, from its two smallest corners.
      if (present(c) && b < c) triangles.push_back({a, b, c});
    }
  }
  return FareySubcomplex(model, std::move(vertices), std::move(edges), std::move(triangles));
}

}  // namespace pants
