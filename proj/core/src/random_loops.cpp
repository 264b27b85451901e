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

#include <stdexcept>

namespace pants {
namespace {

// Uniform in [lo, hi] by rejection, so results do not depend on the
// standard library's distribution implementations.
BigInt uniform(std::mt19937_64& rng, const BigInt& lo, const BigInt& hi) {
  const BigInt span = hi - lo + 1;
  const auto range = static_cast<std::uint64_t>(span);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return lo + BigInt(x % range);
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// (r, s) with p*s - q*r = 1, from the extended Euclidean algorithm.
std::pair<BigInt, BigInt> unimodular_partner(const BigInt& p, const BigInt& q) {
  BigInt old_r = p, r = q, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    BigInt quot = floor_div(old_r, r);
    BigInt tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
    tmp = old_t - quot * t;
    old_t = t;
    t = tmp;
  }
  // old_s * p + old_t * q = old_r = +-1
  if (old_r < 0) {
    old_s = -old_s;
    old_t = -old_t;
  }
  return {-old_t, old_s};
}

Slope random_neighbour(std::mt19937_64& rng, const Slope& v, const BigInt& max_den) {
  if (v.is_infinite()) return Slope(uniform(rng, -max_den, max_den), BigInt(1));
  auto [r, s] = unimodular_partner(v.num(), v.den());
  // Neighbours are +-(r + k p, s + k q); keep |s + k q| <= max_den.
  const BigInt& q = v.den();
  BigInt lo = -floor_div(max_den + s, q);
  BigInt hi = floor_div(max_den - s, q);
  BigInt k = uniform(rng, lo, hi);
  return Slope(r + k * v.num(), s + k * q);
}

}  // namespace

EdgePath random_farey_loop(std::mt19937_64& rng, int max_out, const BigInt& max_den) {
  if (max_out < 1 || max_den < 1) {
    throw std::invalid_argument("random_farey_loop: need max_out >= 1 and max_den >= 1");
  }
  std::vector<Slope> walk{Slope(uniform(rng, -max_den, max_den), uniform(rng, 1, max_den))};
  const int steps = static_cast<int>(uniform(rng, 1, max_out));
  while (static_cast<int>(walk.size()) <= steps) {
    Slope next = random_neighbour(rng, walk.back(), max_den);
    if (walk.size() >= 2 && next == walk[walk.size() - 2]) continue;
    walk.push_back(std::move(next));
  }
  EdgePath loop(walk.begin(), walk.end());
  for (std::size_t i = walk.size() - 1; i > 0; --i) {
    if (rng() % 2) {
      auto [c1, c2] = triangle_completions(walk[i], walk[i - 1]);
      const bool ok1 = c1.den() <= max_den, ok2 = c2.den() <= max_den;
      if (ok1 || ok2) {
        const bool pick_first = ok1 && (!ok2 || rng() % 2);
        loop.emplace_back(pick_first ? c1 : c2);
      }
    }
    loop.emplace_back(walk[i - 1]);
  }
  return loop;
}

}  // namespace pants
