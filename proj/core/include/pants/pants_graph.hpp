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

#include "pants/surface.hpp"

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pants {

enum class MoveKind { A, S };

const char* to_string(MoveKind kind);

/// A boundary circle: leg `label` (1..n) attached to pair of pants `pant`.
struct Leg {
  int label = 0;
  int pant = 0;
  friend auto operator<=>(const Leg&, const Leg&) = default;
};

/// A cut-system circle joining two pants; a == b is a self-loop.
struct InternalEdge {
  int a = 0;
  int b = 0;
  bool is_loop() const { return a == b; }
  friend auto operator<=>(const InternalEdge&, const InternalEdge&) = default;
};

/// Thrown when a graph violates one of the dual-graph invariants. what()
/// names the invariant.
class InvalidGraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One slot of a pair of pants: either a leg or one end of an internal edge.
struct Incidence {
  bool is_leg = false;
  int index = 0;  ///< leg label, or internal edge index
  int side = 0;   ///< 0 for edge.a, 1 for edge.b (edges only)
  friend auto operator<=>(const Incidence&, const Incidence&) = default;
};

/// Dual graph of a pants decomposition: one vertex per pair of pants, one
/// internal edge per cut circle, one labelled leg per boundary circle.
///
/// Pants are numbered 0..pant_count()-1. The constructor enforces every
/// invariant: valence 3, 2g-2+n pants, 3g-3+n edges, legs labelled 1..n,
/// connectivity (hence first Betti number g).
class PantsGraph {
 public:
  PantsGraph(SurfaceType surface, int pant_count, std::vector<Leg> legs,
             std::vector<InternalEdge> edges);

  SurfaceType surface() const { return surface_; }
  int pant_count() const { return pant_count_; }
  /// Sorted by label; legs()[i].label == i + 1.
  const std::vector<Leg>& legs() const { return legs_; }
  const std::vector<InternalEdge>& edges() const { return edges_; }

  /// The three slots of `pant`: legs by label first, then edge ends by
  /// (edge index, side).
  std::vector<Incidence> incidences(int pant) const;

  friend bool operator==(const PantsGraph&, const PantsGraph&) = default;

 private:
  SurfaceType surface_;
  int pant_count_;
  std::vector<Leg> legs_;
  std::vector<InternalEdge> edges_;
};

/// Isomorphism-invariant code of a PantsGraph (isomorphisms fix leg labels).
///
/// Layout: g, n, V, then the pant of each leg 1..n, then the sorted edge
/// list as (a, b) pairs with a <= b, all under the least relabelling of the
/// pants among those reached by colour refinement with individualization.
struct CanonicalCode {
  std::vector<int> digits;

  std::string to_string() const;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

CanonicalCode canonical_code(const PantsGraph& graph);

/// Rebuilds the graph whose pants are numbered as in the code. Throws
/// InvalidGraph for codes that do not describe a valid dual graph.
PantsGraph decode(const CanonicalCode& code);

/// Complement of one deleted circle: (1,1) for a self-loop, (0,4) otherwise.
/// Throws std::out_of_range if `edge` is not an internal edge index.
SurfaceType complement_type(const PantsGraph& graph, int edge);

/// Re-pairs the four strand ends around non-loop edge `edge`. With a, b the
/// other slots of edge.a and c, d those of edge.b (incidence order), branch 0
/// yields {a,c}|{b,d} and branch 1 yields {a,d}|{b,c}. Pant and edge indices
/// are kept, so moves on disjoint supports can be composed directly.
PantsGraph apply_a_move(const PantsGraph& graph, int edge, int branch);

struct LegalMove {
  MoveKind kind = MoveKind::A;
  int edge = 0;
  /// Sorted, de-duplicated outcome codes. For S-moves this is the graph's
  /// own code; for A-moves the codes of both branches.
  std::vector<CanonicalCode> outcomes;
};

std::vector<LegalMove> legal_moves(const PantsGraph& graph);

/// Applies a permutation of leg labels: label l becomes perm[l - 1].
PantsGraph relabel_legs(const PantsGraph& graph, std::span<const int> perm);

/// Largest 2g-2+n accepted by enumerate_types().
inline constexpr int kMaxEnumeratedPants = 8;

/// All isomorphism types for s, sorted. Throws std::length_error when
/// 2g-2+n exceeds kMaxEnumeratedPants.
std::vector<CanonicalCode> enumerate_types(SurfaceType s);

}  // namespace pants
