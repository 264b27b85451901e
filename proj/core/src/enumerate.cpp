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

namespace pants {
namespace {

using Cache = std::map<SurfaceType, std::vector<CanonicalCode>>;

// Every graph of type (g, n >= 1) other than the two one-pant graphs arises
// from a (g, n-1) graph by subdividing an internal edge or a leg and hanging
// leg n on the new pant. Every (g >= 2, 0) graph arises from a (g-1, 2)
// graph by joining legs 1 and 2, since any edge on a cycle can be cut.
std::vector<PantsGraph> extensions(const PantsGraph& base) {
  const SurfaceType s = base.surface();
  const SurfaceType next{s.genus, s.boundary_count + 1};
  const int fresh = base.pant_count();
  std::vector<PantsGraph> out;
  for (std::size_t i = 0; i < base.edges().size(); ++i) {
    std::vector<Leg> legs = base.legs();
    std::vector<InternalEdge> edges = base.edges();
    const int far = edges[i].b;
    edges[i].b = fresh;
    edges.push_back({fresh, far});
    legs.push_back({next.boundary_count, fresh});
    out.emplace_back(next, fresh + 1, std::move(legs), std::move(edges));
  }
  for (std::size_t i = 0; i < base.legs().size(); ++i) {
    std::vector<Leg> legs = base.legs();
    std::vector<InternalEdge> edges = base.edges();
    edges.push_back({legs[i].pant, fresh});
    legs[i].pant = fresh;
    legs.push_back({next.boundary_count, fresh});
    out.emplace_back(next, fresh + 1, std::move(legs), std::move(edges));
  }
  return out;
}

const std::vector<CanonicalCode>& types(SurfaceType s, Cache& cache) {
  if (auto it = cache.find(s); it != cache.end()) return it->second;
  std::vector<CanonicalCode> codes;
  const int g = s.genus, n = s.boundary_count;
  if (g == 0 && n == 3) {
    codes.push_back(canonical_code(PantsGraph(s, 1, {{1, 0}, {2, 0}, {3, 0}}, {})));
  } else if (g == 1 && n == 1) {
    codes.push_back(canonical_code(PantsGraph(s, 1, {{1, 0}}, {{0, 0}})));
  } else if (n == 0) {
    for (const CanonicalCode& code : types({g - 1, 2}, cache)) {
      PantsGraph base = decode(code);
      std::vector<InternalEdge> edges = base.edges();
      edges.push_back({base.legs()[0].pant, base.legs()[1].pant});
      codes.push_back(canonical_code(PantsGraph(s, base.pant_count(), {}, std::move(edges))));
    }
  } else {
    for (const CanonicalCode& code : types({g, n - 1}, cache)) {
      for (const PantsGraph& graph : extensions(decode(code))) codes.push_back(canonical_code(graph));
    }
  }
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return cache.emplace(s, std::move(codes)).first->second;
}

}  // namespace

std::vector<CanonicalCode> enumerate_types(SurfaceType s) {
  validate_surface(s.genus, s.boundary_count);
  if (pants_count(s) > kMaxEnumeratedPants) {
    throw std::length_error("enumerate_types: " + to_string(s) + " has " +
                            std::to_string(pants_count(s)) + " pants; the limit is " +
                            std::to_string(kMaxEnumeratedPants));
  }
  Cache cache;
  return types(s, cache);
}

}  // namespace pants
