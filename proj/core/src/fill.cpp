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

#include "pants/homotopy.hpp"
#include "pants/relations.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace pants {
namespace {

using Loop = std::vector<int>;

// Greedy leftmost cancellation; free reduction is confluent, so the result
// does not depend on the order.
Loop freely_reduce(Loop loop, std::vector<std::size_t>& cancels) {
  std::size_t p = 0;
  while (p + 2 < loop.size()) {
    if (loop[p] == loop[p + 2]) {
      cancels.push_back(p);
      loop.erase(loop.begin() + static_cast<std::ptrdiff_t>(p) + 1,
                 loop.begin() + static_cast<std::ptrdiff_t>(p) + 3);
      p = p >= 2 ? p - 2 : 0;
    } else {
      ++p;
    }
  }
  return loop;
}

// A freely reduced closed loop is P C P^-1 with C cyclically reduced.
// Returns the length of P.
std::size_t tail_length(const Loop& loop) {
  const std::size_t last = loop.size() - 1;
  std::size_t s = 0;
  while (last >= 2 * s + 2 && loop[s + 1] == loop[last - s - 1]) ++s;
  return s;
}

// Cyclic word of a closed loop: vertices w_0..w_{m-1}, cyclically reduced
// and rotated to its least rotation.
Loop cyclic_word(const Loop& closed) {
  std::vector<std::size_t> ignored;
  Loop reduced = freely_reduce(closed, ignored);
  const std::size_t s = tail_length(reduced);
  Loop word(reduced.begin() + static_cast<std::ptrdiff_t>(s),
            reduced.end() - static_cast<std::ptrdiff_t>(s) - 1);
  if (word.empty()) word.push_back(reduced[s]);
  Loop best = word;
  for (std::size_t r = 1; r < word.size(); ++r) {
    std::rotate(word.begin(), word.begin() + 1, word.end());
    if (word < best) best = word;
  }
  return best;
}

// One cell swap on a cyclic word: the arc of `length` edges starting at
// word[position] is replaced by the rest of the boundary of `cell`.
struct Swap {
  std::size_t position = 0;
  std::size_t length = 0;
  int cell = -1;
  int offset = 0;  ///< index of word[position] on the cell boundary
  int dir = 1;
};

struct SearchNode {
  Loop word;
  int parent = -1;
  Swap swap;
};

Loop closed_after_swap(const Loop& word, const Swap& sw, const std::vector<int>& boundary) {
  const int k = static_cast<int>(boundary.size());
  const std::size_t m = word.size();
  Loop closed;
  for (int j = 0; j <= k - static_cast<int>(sw.length); ++j) {
    closed.push_back(boundary[((sw.offset - sw.dir * j) % k + k) % k]);
  }
  for (std::size_t j = sw.length + 1; j <= m; ++j) closed.push_back(word[(sw.position + j) % m]);
  return closed;
}

// Replays one search transition on the based loop, appending the steps.
void replay_swap(Loop& based, const Loop& parent_word, const Swap& sw, const RelationInstance& cell,
                 const std::vector<CanonicalCode>& names, Certificate& cert) {
  const std::size_t m = parent_word.size();
  std::size_t s = tail_length(based);
  // Rotation taking the based core onto the parent's word.
  std::size_t t = 0;
  for (; t < m; ++t) {
    bool match = true;
    for (std::size_t j = 0; j < m && match; ++j) match = based[s + j] == parent_word[(j + t) % m];
    if (match) break;
  }
  if (t == m) throw std::logic_error("fill_finite_loop: replay lost track of the loop");
  const std::size_t turns = (sw.position + m - t) % m;
  for (std::size_t i = 0; i < turns; ++i) {
    const std::size_t close = s + m;
    cert.steps.push_back(InsertBacktrack{close, Vertex(names[based[s + 1]])});
    based.insert(based.begin() + static_cast<std::ptrdiff_t>(close) + 1, {based[s + 1], based[close]});
    ++s;
  }
  HomotopyStep step = CellSwap{s, sw.length, cell};
  cert.steps.push_back(step);
  // Apply on indices by mirroring apply_step.
  const int k = static_cast<int>(cell.boundary.size());
  Loop replacement;
  for (int j = 0; j <= k - static_cast<int>(sw.length); ++j) {
    const auto& code = std::get<CanonicalCode>(cell.boundary[((sw.offset - sw.dir * j) % k + k) % k]);
    replacement.push_back(static_cast<int>(std::lower_bound(names.begin(), names.end(), code) - names.begin()));
  }
  based.erase(based.begin() + static_cast<std::ptrdiff_t>(s),
              based.begin() + static_cast<std::ptrdiff_t>(s + sw.length) + 1);
  based.insert(based.begin() + static_cast<std::ptrdiff_t>(s), replacement.begin(), replacement.end());
  std::vector<std::size_t> cancels;
  based = freely_reduce(std::move(based), cancels);
  for (std::size_t p : cancels) cert.steps.push_back(CancelBacktrack{p});
}

}  // namespace

FillResult fill_finite_loop(const TypeMoveGraph& host, const EdgePath& loop,
                            std::span<const RelationInstance> cells, FillBudget budget) {
  Loop start;
  for (const Vertex& v : loop) {
    const auto* code = std::get_if<CanonicalCode>(&v);
    const int idx = code ? host.index_of(*code) : -1;
    if (idx < 0) throw std::invalid_argument("fill_finite_loop: loop vertex not in host");
    start.push_back(idx);
  }
  if (start.empty() || start.front() != start.back()) {
    throw std::invalid_argument("fill_finite_loop: loop is not closed");
  }
  for (std::size_t i = 0; i + 1 < start.size(); ++i) {
    if (!host.adjacent(start[i], start[i + 1])) {
      throw std::invalid_argument("fill_finite_loop: step " + std::to_string(i) +
                                  " is not an edge of the host");
    }
  }

  std::vector<std::vector<int>> boundaries;
  std::vector<std::vector<std::pair<int, int>>> cells_at(host.vertices().size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (Verdict v = validate_instance(cells[c], host); !v) {
      throw std::invalid_argument("fill_finite_loop: cell " + std::to_string(c) +
                                  " is invalid: " + v.diagnostic);
    }
    std::vector<int> boundary;
    for (const Vertex& v : cells[c].boundary) boundary.push_back(host.index_of(std::get<CanonicalCode>(v)));
    for (std::size_t r = 0; r < boundary.size(); ++r) {
      cells_at[boundary[r]].emplace_back(static_cast<int>(c), static_cast<int>(r));
    }
    boundaries.push_back(std::move(boundary));
  }

  FillResult result;
  std::vector<SearchNode> nodes;
  std::map<Loop, int> seen;
  SearchNode root;
  root.word = cyclic_word(start);
  const std::size_t cap = start.size() - 1 + budget.max_extra_length;
  seen.emplace(root.word, 0);
  nodes.push_back(std::move(root));

  std::deque<int> queue{0};
  int goal = nodes[0].word.size() == 1 ? 0 : -1;
  bool truncated = false;
  while (!queue.empty() && goal < 0) {
    const int current = queue.front();
    queue.pop_front();
    const Loop here = nodes[current].word;
    const std::size_t m = here.size();
    for (std::size_t p = 0; p < m && goal < 0; ++p) {
      for (auto [c, r] : cells_at[here[p]]) {
        const auto& b = boundaries[c];
        const int k = static_cast<int>(b.size());
        for (int dir : {1, -1}) {
          for (int len = 1; len < k && static_cast<std::size_t>(len) <= m; ++len) {
            if (here[(p + len) % m] != b[((r + dir * len) % k + k) % k]) break;
            const Swap sw{p, static_cast<std::size_t>(len), c, r, dir};
            Loop word = cyclic_word(closed_after_swap(here, sw, b));
            if (word.size() > cap || seen.count(word)) continue;
            if (seen.size() >= budget.max_states) {
              truncated = true;
              continue;
            }
            const int id = static_cast<int>(nodes.size());
            seen.emplace(word, id);
            const bool done = word.size() == 1;
            nodes.push_back(SearchNode{std::move(word), current, sw});
            if (done) {
              goal = id;
              break;
            }
            queue.push_back(id);
          }
          if (goal >= 0) break;
        }
        if (goal >= 0) break;
      }
    }
  }
  result.explored = nodes.size();
  if (goal < 0) {
    result.status = truncated ? FillStatus::BudgetExhausted : FillStatus::SearchExhausted;
    return result;
  }

  std::vector<int> chain;
  for (int id = goal; id > 0; id = nodes[id].parent) chain.push_back(id);
  std::reverse(chain.begin(), chain.end());
  Certificate& cert = result.certificate;
  cert.host = host.descriptor();
  cert.initial = loop;
  std::vector<std::size_t> cancels;
  Loop based = freely_reduce(start, cancels);
  for (std::size_t p : cancels) cert.steps.push_back(CancelBacktrack{p});
  for (int id : chain) {
    const SearchNode& node = nodes[id];
    replay_swap(based, nodes[node.parent].word, node.swap, cells[node.swap.cell], host.vertices(), cert);
  }
  if (based.size() != 1) throw std::logic_error("fill_finite_loop: replay did not contract the loop");
  cert.final_loop = {host.vertices()[based.front()]};
  result.certificate = normalize(std::move(cert));
  result.status = FillStatus::Filled;
  return result;
}

std::vector<std::vector<int>> cycle_basis(const TypeMoveGraph& host) {
  const int count = static_cast<int>(host.vertices().size());
  std::vector<int> parent(count, -2), root_of(count, -1);
  for (int root = 0; root < count; ++root) {
    if (parent[root] != -2) continue;
    parent[root] = -1;
    root_of[root] = root;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : host.neighbours(u)) {
        if (parent[w] != -2) continue;
        parent[w] = u;
        root_of[w] = root;
        queue.push_back(w);
      }
    }
  }
  auto to_root = [&](int v) {
    std::vector<int> path{v};
    while (parent[v] >= 0) path.push_back(v = parent[v]);
    return path;
  };
  std::vector<std::vector<int>> basis;
  for (const MoveEdge& e : host.edges()) {
    if (parent[e.to] == e.from || parent[e.from] == e.to) continue;
    std::vector<int> loop = to_root(e.from);
    std::reverse(loop.begin(), loop.end());
    std::vector<int> back = to_root(e.to);
    loop.insert(loop.end(), back.begin(), back.end());
    basis.push_back(std::move(loop));
  }
  return basis;
}

SimplyConnectedReport simply_connected_report(const TypeMoveGraph& host,
                                              std::span<const RelationInstance> cells,
                                              FillBudget budget) {
  SimplyConnectedReport report;
  for (const auto& indices : cycle_basis(host)) {
    ++report.basis_loops;
    EdgePath loop;
    for (int i : indices) loop.emplace_back(host.vertices()[i]);
    FillResult fill = fill_finite_loop(host, loop, cells, budget);
    if (fill.status == FillStatus::Filled) {
      ++report.filled;
      report.certificates.push_back(std::move(fill.certificate));
    } else {
      ++report.failed;
      report.unfilled.push_back(std::move(loop));
      report.unfilled_status.push_back(fill.status);
    }
  }
  return report;
}

}  // namespace pants
