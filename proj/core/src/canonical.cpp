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
#include <map>
#include <optional>

namespace pants {
namespace {

// Canonical labelling by individualization-refinement. Colours are ranks
// of isomorphism-invariant signatures, so a discrete colouring is itself a
// relabelling; the least code over all leaves of the search tree is the
// canonical one.
class Canonicalizer {
 public:
  explicit Canonicalizer(const PantsGraph& graph)
      : graph_(graph), size_(graph.pant_count()), mult_(size_ * size_, 0), loops_(size_, 0),
        leg_labels_(size_) {
    for (const InternalEdge& e : graph.edges()) {
      if (e.is_loop()) {
        ++loops_[e.a];
      } else {
        ++mult_[e.a * size_ + e.b];
        ++mult_[e.b * size_ + e.a];
      }
    }
    for (const Leg& leg : graph.legs()) leg_labels_[leg.pant].push_back(leg.label);
  }

  CanonicalCode run() {
    using Key = std::pair<int, std::vector<int>>;
    std::vector<Key> keys(size_);
    for (int v = 0; v < size_; ++v) keys[v] = {loops_[v], leg_labels_[v]};
    search(refine(rank(keys)));
    return *best_;
  }

 private:
  template <typename Key>
  static std::vector<int> rank(const std::vector<Key>& keys) {
    std::vector<Key> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> colour(keys.size());
    for (std::size_t v = 0; v < keys.size(); ++v) {
      colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) -
                                   sorted.begin());
    }
    return colour;
  }

  static int count_colours(const std::vector<int>& colour) {
    return colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
  }

  std::vector<int> refine(std::vector<int> colour) const {
    using Key = std::pair<int, std::vector<std::pair<int, int>>>;
    int colours = count_colours(colour);
    while (true) {
      std::vector<Key> keys(size_);
      for (int v = 0; v < size_; ++v) {
        keys[v].first = colour[v];
        for (int u = 0; u < size_; ++u) {
          if (int m = mult_[v * size_ + u]; m > 0) keys[v].second.emplace_back(colour[u], m);
        }
        std::sort(keys[v].second.begin(), keys[v].second.end());
      }
      std::vector<int> next = rank(keys);
      int next_colours = count_colours(next);
      if (next_colours == colours) return next;
      colour = std::move(next);
      colours = next_colours;
    }
  }

  void search(const std::vector<int>& colour) {
    if (count_colours(colour) == size_) {
      CanonicalCode code = encode(colour);
      if (!best_ || code < *best_) best_ = std::move(code);
      return;
    }
    // First non-singleton cell in colour order.
    std::vector<int> cell_size(size_, 0);
    for (int c : colour) ++cell_size[c];
    int target = 0;
    while (cell_size[target] < 2) ++target;
    for (int v = 0; v < size_; ++v) {
      if (colour[v] != target) continue;
      std::vector<std::pair<int, int>> keys(size_);
      for (int u = 0; u < size_; ++u) keys[u] = {colour[u], u == v ? 0 : 1};
      search(refine(rank(keys)));
    }
  }

  CanonicalCode encode(const std::vector<int>& relabel) const {
    const SurfaceType s = graph_.surface();
    CanonicalCode code;
    code.digits = {s.genus, s.boundary_count, size_};
    for (const Leg& leg : graph_.legs()) code.digits.push_back(relabel[leg.pant]);
    std::vector<std::pair<int, int>> edges;
    for (const InternalEdge& e : graph_.edges()) {
      int a = relabel[e.a], b = relabel[e.b];
      edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    for (auto [a, b] : edges) {
      code.digits.push_back(a);
      code.digits.push_back(b);
    }
    return code;
  }

  const PantsGraph& graph_;
  int size_;
  std::vector<int> mult_;
  std::vector<int> loops_;
  std::vector<std::vector<int>> leg_labels_;
  std::optional<CanonicalCode> best_;
};

}  // namespace

CanonicalCode canonical_code(const PantsGraph& graph) { return Canonicalizer(graph).run(); }

PantsGraph decode(const CanonicalCode& code) {
  const auto& d = code.digits;
  if (d.size() < 3) throw InvalidGraph("code layout: fewer than three header digits");
  const int g = d[0], n = d[1], pants = d[2];
  if (g < 0 || n < 0) throw InvalidGraph("code layout: negative genus or boundary count");
  const int edge_count = 3 * g - 3 + n;
  if (edge_count < 0 || d.size() != static_cast<std::size_t>(3 + n + 2 * edge_count)) {
    throw InvalidGraph("code layout: length does not match (g, n)");
  }
  std::vector<Leg> legs;
  for (int i = 0; i < n; ++i) legs.push_back({i + 1, d[3 + i]});
  std::vector<InternalEdge> edges;
  for (int i = 0; i < edge_count; ++i) edges.push_back({d[3 + n + 2 * i], d[4 + n + 2 * i]});
  return PantsGraph(SurfaceType{g, n}, pants, std::move(legs), std::move(edges));
}

std::string CanonicalCode::to_string() const {
  if (digits.size() < 3) return "[]";
  const int n = digits[1];
  std::string out = "g" + std::to_string(digits[0]) + "n" + std::to_string(n) + "[";
  for (int i = 0; i < n; ++i) {
    if (i) out += ",";
    out += std::to_string(digits[3 + i]);
  }
  out += ";";
  for (std::size_t i = 3 + n; i + 1 < digits.size(); i += 2) {
    if (i != static_cast<std::size_t>(3 + n)) out += ",";
    out += std::to_string(digits[i]) + "-" + std::to_string(digits[i + 1]);
  }
  return out + "]";
}

}  // namespace pants
