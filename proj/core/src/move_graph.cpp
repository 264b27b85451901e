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

#include "pants/move_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace pants {

TypeMoveGraph::TypeMoveGraph(SurfaceType surface, std::vector<CanonicalCode> vertices,
                             std::vector<MoveEdge> edges, int type_fixing_moves)
    : surface_(surface), vertices_(std::move(vertices)), edges_(std::move(edges)),
      type_fixing_moves_(type_fixing_moves), adjacency_(vertices_.size()) {
  if (!std::is_sorted(vertices_.begin(), vertices_.end()) ||
      std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw std::invalid_argument("type move graph: vertices must be sorted and distinct");
  }
  const int count = static_cast<int>(vertices_.size());
  for (const MoveEdge& e : edges_) {
    if (e.from < 0 || e.to >= count || e.from >= e.to) {
      throw std::invalid_argument("type move graph: edge endpoints out of range");
    }
    adjacency_[e.from].push_back(e.to);
    adjacency_[e.to].push_back(e.from);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

int TypeMoveGraph::index_of(const CanonicalCode& code) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), code);
  return it != vertices_.end() && *it == code ? static_cast<int>(it - vertices_.begin()) : -1;
}

bool TypeMoveGraph::adjacent(int i, int j) const {
  return std::binary_search(adjacency_[i].begin(), adjacency_[i].end(), j);
}

int TypeMoveGraph::component_count() const {
  std::vector<int> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = static_cast<int>(vertices_.size());
  for (const MoveEdge& e : edges_) {
    int a = find(e.from), b = find(e.to);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

bool TypeMoveGraph::contains(const Vertex& v) const {
  const auto* code = std::get_if<CanonicalCode>(&v);
  return code && index_of(*code) >= 0;
}

std::optional<MoveKind> TypeMoveGraph::move_between(const Vertex& a, const Vertex& b) const {
  const auto* ca = std::get_if<CanonicalCode>(&a);
  const auto* cb = std::get_if<CanonicalCode>(&b);
  if (!ca || !cb) return std::nullopt;
  int i = index_of(*ca), j = index_of(*cb);
  if (i < 0 || j < 0 || !adjacent(i, j)) return std::nullopt;
  return MoveKind::A;
}

nlohmann::json TypeMoveGraph::descriptor() const {
  return {{"model", "types"}, {"g", surface_.genus}, {"n", surface_.boundary_count}};
}

TypeMoveGraph build_move_graph(SurfaceType s) {
  std::vector<CanonicalCode> vertices = enumerate_types(s);
  std::map<std::pair<int, int>, MoveEdge> edges;
  int type_fixing = 0;
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    const PantsGraph graph = decode(vertices[i]);
    for (int e = 0; e < static_cast<int>(graph.edges().size()); ++e) {
      if (graph.edges()[e].is_loop()) {
        ++type_fixing;
        continue;
      }
      for (int branch = 0; branch < 2; ++branch) {
        auto it = std::lower_bound(vertices.begin(), vertices.end(),
                                   canonical_code(apply_a_move(graph, e, branch)));
        const int j = static_cast<int>(it - vertices.begin());
        if (it == vertices.end() || j == i) {
          if (it == vertices.end()) throw std::logic_error("A-move left the enumerated types");
          ++type_fixing;
          continue;
        }
        MoveEdge edge{std::min(i, j), std::max(i, j), e, branch};
        if (i > j) continue;  // recorded from the smaller endpoint
        edges.emplace(std::pair{i, j}, edge);
      }
    }
  }
  std::vector<MoveEdge> list;
  for (const auto& [key, edge] : edges) list.push_back(edge);
  return TypeMoveGraph(s, std::move(vertices), std::move(list), type_fixing);
}

std::vector<std::vector<int>> simple_cycles(const TypeMoveGraph& graph, int length) {
  if (length < 3) throw std::invalid_argument("simple_cycles: length must be >= 3");
  std::vector<std::vector<int>> out;
  const int count = static_cast<int>(graph.vertices().size());
  std::vector<int> path;
  std::vector<char> used(count, 0);
  auto dfs = [&](auto&& self, int start) -> void {
    const int tip = path.back();
    if (static_cast<int>(path.size()) == length) {
      if (graph.adjacent(tip, start) && path[1] < path.back()) out.push_back(path);
      return;
    }
    for (int next : graph.neighbours(tip)) {
      if (next <= start || used[next]) continue;
      used[next] = 1;
      path.push_back(next);
      self(self, start);
      path.pop_back();
      used[next] = 0;
    }
  };
  for (int start = 0; start < count; ++start) {
    path = {start};
    used[start] = 1;
    dfs(dfs, start);
    used[start] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pants
