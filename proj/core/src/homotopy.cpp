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
#include <stdexcept>
#include <tuple>

namespace pants {
namespace {

Verdict check_loop(const Complex& host, const EdgePath& loop) {
  if (loop.empty()) return Verdict::fail("loop is empty");
  if (loop.front() != loop.back()) return Verdict::fail("path is not closed");
  for (std::size_t i = 0; i < loop.size(); ++i) {
    if (!host.contains(loop[i])) {
      return Verdict::fail("vertex " + std::to_string(i) + " (" + to_string(loop[i]) +
                           ") is not in the host");
    }
    if (i + 1 < loop.size() && !host.move_between(loop[i], loop[i + 1])) {
      return Verdict::fail("edge " + std::to_string(i) + " (" + to_string(loop[i]) + " -> " +
                           to_string(loop[i + 1]) + ") is not an edge of the host");
    }
  }
  return Verdict::pass();
}

std::string step_name(const HomotopyStep& step) {
  if (std::holds_alternative<CancelBacktrack>(step)) return "cancel-backtrack";
  if (std::holds_alternative<InsertBacktrack>(step)) return "insert-backtrack";
  return "cell-swap";
}

}  // namespace

EdgePath apply_step(const EdgePath& loop, const HomotopyStep& step) {
  EdgePath out = loop;
  if (const auto* cancel = std::get_if<CancelBacktrack>(&step)) {
    const std::size_t p = cancel->position;
    if (p + 2 >= loop.size() || loop[p] != loop[p + 2]) {
      throw std::invalid_argument("no backtrack at position " + std::to_string(p));
    }
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(p) + 1,
              out.begin() + static_cast<std::ptrdiff_t>(p) + 3);
    return out;
  }
  if (const auto* insert = std::get_if<InsertBacktrack>(&step)) {
    const std::size_t p = insert->position;
    if (p >= loop.size()) {
      throw std::invalid_argument("insert position " + std::to_string(p) + " is past the loop");
    }
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(p) + 1, {insert->vertex, loop[p]});
    return out;
  }
  const auto& swap = std::get<CellSwap>(step);
  const auto& boundary = swap.cell.boundary;
  const std::size_t k = boundary.size();
  const std::size_t p = swap.position;
  const std::size_t len = swap.length;
  if (k < 3 || len < 1 || len >= k) {
    throw std::invalid_argument("cell swap length " + std::to_string(len) +
                                " must lie strictly between 0 and the boundary size");
  }
  if (p + len >= loop.size()) {
    throw std::invalid_argument("cell swap segment runs past the end of the loop");
  }
  auto start = std::find(boundary.begin(), boundary.end(), loop[p]);
  if (start == boundary.end()) {
    throw std::invalid_argument("loop vertex " + to_string(loop[p]) + " is not on the cell");
  }
  const std::size_t r = static_cast<std::size_t>(start - boundary.begin());
  auto at = [&](std::size_t base, long long offset) -> const Vertex& {
    long long idx = (static_cast<long long>(base) + offset) % static_cast<long long>(k);
    if (idx < 0) idx += static_cast<long long>(k);
    return boundary[static_cast<std::size_t>(idx)];
  };
  int dir = 0;
  if (at(r, 1) == loop[p + 1]) {
    dir = 1;
  } else if (at(r, -1) == loop[p + 1]) {
    dir = -1;
  } else {
    throw std::invalid_argument("segment at " + std::to_string(p) + " leaves the cell boundary");
  }
  for (std::size_t j = 2; j <= len; ++j) {
    if (at(r, dir * static_cast<long long>(j)) != loop[p + j]) {
      throw std::invalid_argument("segment at " + std::to_string(p) +
                                  " does not follow one arc of the cell boundary");
    }
  }
  EdgePath replacement;
  for (std::size_t j = 0; j <= k - len; ++j) {
    replacement.push_back(at(r, -dir * static_cast<long long>(j)));
  }
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(p),
            out.begin() + static_cast<std::ptrdiff_t>(p + len) + 1);
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(p), replacement.begin(), replacement.end());
  return out;
}

Verdict verify_certificate(const Complex& host, const Certificate& cert) {
  if (Verdict v = check_loop(host, cert.initial); !v) {
    return Verdict::fail("initial loop: " + v.diagnostic);
  }
  EdgePath loop = cert.initial;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const HomotopyStep& step = cert.steps[i];
    const std::string where = "step " + std::to_string(i) + " (" + step_name(step) + "): ";
    if (const auto* swap = std::get_if<CellSwap>(&step)) {
      if (Verdict v = validate_instance(swap->cell, host); !v) {
        return Verdict::fail(where + "cited cell is not a relation cell: " + v.diagnostic);
      }
    }
    try {
      loop = apply_step(loop, step);
    } catch (const std::invalid_argument& e) {
      return Verdict::fail(where + e.what());
    }
    if (Verdict v = check_loop(host, loop); !v) return Verdict::fail(where + v.diagnostic);
  }
  if (loop != cert.final_loop) {
    return Verdict::fail("replay does not end at the stated final loop");
  }
  if (loop.size() != 1) {
    return Verdict::fail("final loop has " + std::to_string(loop.size() - 1) +
                         " edges; expected the constant loop");
  }
  return Verdict::pass();
}

Certificate normalize(Certificate cert) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < cert.steps.size(); ++i) {
      const auto* insert = std::get_if<InsertBacktrack>(&cert.steps[i]);
      const auto* cancel = std::get_if<CancelBacktrack>(&cert.steps[i + 1]);
      if (insert && cancel && insert->position == cancel->position) {
        cert.steps.erase(cert.steps.begin() + static_cast<std::ptrdiff_t>(i),
                         cert.steps.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return cert;
}

Certificate reduce_farey_loop(SlopeModel model, const EdgePath& input) {
  const FareyComplex host(model);
  for (const Vertex& v : input) {
    if (!std::holds_alternative<Slope>(v)) {
      throw std::invalid_argument("reduce_farey_loop: loop vertices must be slopes");
    }
  }
  if (Verdict v = check_loop(host, input); !v) {
    throw std::invalid_argument("reduce_farey_loop: " + v.diagnostic);
  }

  Certificate cert;
  cert.host = host.descriptor();
  cert.initial = input;
  EdgePath loop = input;
  auto slope = [&](std::size_t i) -> const Slope& { return std::get<Slope>(loop[i]); };
  auto emit = [&](HomotopyStep step) {
    loop = apply_step(loop, step);
    cert.steps.push_back(std::move(step));
  };
  auto triangle = [&](const Slope& a, const Slope& b, const Slope& c) {
    std::array<Slope, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    const StepSite site{edge_move(model)};
    return RelationInstance{triangle_relation(model), {t[0], t[1], t[2]}, {site, site, site}};
  };

  using Measure = std::tuple<BigInt, std::size_t, std::size_t>;
  // The inner loop is loop[depth .. size-1-depth]; outside it the loop reads
  // P then reverse(P), so an inner contraction finishes by cancellation.
  std::size_t depth = 0;
  auto inner_measure = [&]() -> Measure {
    const std::size_t hi = loop.size() - 1 - depth;
    BigInt top = 0;
    for (std::size_t i = depth; i <= hi; ++i) top = std::max(top, slope(i).complexity());
    std::size_t count = 0;
    for (std::size_t i = depth + 1; i < hi; ++i) count += slope(i).complexity() == top;
    return {top, count, hi - depth};
  };

  while (true) {
    const std::size_t hi = loop.size() - 1 - depth;
    bool cancelled = false;
    for (std::size_t p = depth; p + 2 <= hi; ++p) {
      if (loop[p] == loop[p + 2]) {
        emit(CancelBacktrack{p});
        cancelled = true;
        break;
      }
    }
    if (cancelled) continue;
    if (hi == depth) {
      if (depth == 0) break;
      emit(CancelBacktrack{depth - 1});
      --depth;
      continue;
    }

    const Measure before = inner_measure();
    const BigInt& top = std::get<0>(before);
    std::optional<Slope> apex;
    for (std::size_t i = depth + 1; i < hi; ++i) {
      if (slope(i).complexity() == top && (!apex || slope(i) < *apex)) apex = slope(i);
    }
    if (apex) {
      // Push every interior occurrence of the apex off along its fan;
      // right to left so earlier positions stay put.
      const Slope v = *apex;
      for (std::size_t i = hi - 1; i > depth; --i) {
        if (slope(i) != v) continue;
        const std::vector<Slope> fan = fan_path(v, slope(i - 1), slope(i + 1));
        const std::size_t m = fan.size() - 1;
        for (std::size_t j = 0; j + 1 < m; ++j) {
          emit(CellSwap{i - 1 + j, 1, triangle(v, fan[j], fan[j + 1])});
        }
        emit(CellSwap{i - 1 + (m - 1), 2, triangle(v, fan[m - 1], fan[m])});
      }
      if (!(inner_measure() < before)) {
        throw std::logic_error("reduce_farey_loop: measure did not decrease");
      }
    } else {
      // Only the inner basepoint attains the maximum. Route the last edge
      // around the basepoint's fan so the loop reads v q1 ... q1 v, then
      // treat q1 ... q1 as the new inner loop.
      const Slope v = slope(depth);
      const Slope first = slope(depth + 1);
      const Slope last = slope(hi - 1);
      if (first != last) {
        const std::vector<Slope> fan = fan_path(v, last, first);
        for (std::size_t j = 0; j + 1 < fan.size(); ++j) {
          emit(CellSwap{hi - 1 + j, 1, triangle(v, fan[j], fan[j + 1])});
        }
      }
      ++depth;
      if (!(inner_measure() < before)) {
        throw std::logic_error("reduce_farey_loop: measure did not decrease");
      }
    }
  }
  cert.final_loop = loop;
  return cert;
}

std::map<RelationTag, int> cell_usage(const Certificate& cert) {
  std::map<RelationTag, int> usage;
  for (const HomotopyStep& step : cert.steps) {
    if (const auto* swap = std::get_if<CellSwap>(&step)) ++usage[swap->cell.kind];
  }
  return usage;
}

const char* to_string(FillStatus status) {
  switch (status) {
    case FillStatus::Filled: return "filled";
    case FillStatus::BudgetExhausted: return "budget-exhausted";
    case FillStatus::SearchExhausted: return "search-exhausted";
  }
  return "?";
}

}  // namespace pants
