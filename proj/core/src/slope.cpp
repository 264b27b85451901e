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

#include "pants/slope.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <stdexcept>

namespace pants {
namespace {

BigInt det(const Slope& a, const Slope& b) { return a.num() * b.den() - a.den() * b.num(); }

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

Slope::Slope(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_ == 0 && den_ == 0) {
    throw std::invalid_argument("slope 0/0 is undefined");
  }
  if (den_ == 0) {
    num_ = 1;
    return;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(abs_big(num_), abs_big(den_));
  num_ /= g;
  den_ /= g;
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

BigInt Slope::complexity() const { return abs_big(num_) + den_; }

std::string Slope::to_string() const { return num_.str() + "/" + den_.str(); }

Slope Slope::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) -> BigInt {
    if (s.empty()) throw std::invalid_argument("malformed slope '" + std::string(text) + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("malformed slope '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw std::invalid_argument("malformed slope '" + std::string(text) + "'");
      }
    }
    BigInt value(std::string(s.substr(start)));
    return s[0] == '-' ? BigInt(-value) : value;
  };
  if (text == "inf" || text == "oo" || text == "infinity") return infinity();
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Slope(parse_int(text), BigInt(1));
  return Slope(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

bool is_adjacent(const Slope& a, const Slope& b) { return abs_big(det(a, b)) == 1; }

std::pair<Slope, Slope> triangle_completions(const Slope& a, const Slope& b) {
  if (!is_adjacent(a, b)) {
    throw std::invalid_argument("triangle_completions: " + a.to_string() + " and " + b.to_string() +
                                " are not adjacent");
  }
  // Adjacent representatives give a unimodular pair, so neither sum nor
  // difference can vanish.
  return {Slope(a.num() + b.num(), a.den() + b.den()), Slope(a.num() - b.num(), a.den() - b.den())};
}

std::vector<Slope> fan_path(const Slope& v, const Slope& x, const Slope& y) {
  if (!is_adjacent(v, x) || !is_adjacent(v, y)) {
    throw std::invalid_argument("fan_path: endpoints must both be adjacent to " + v.to_string());
  }
  BigInt dx = det(v, x);
  BigInt dy = det(v, y);
  // Flip y's representative so it sits on the same affine line x + k*v.
  BigInt yn = y.num() * dx * dy;
  BigInt yd = y.den() * dx * dy;
  BigInt k = v.num() != 0 ? BigInt((yn - x.num()) / v.num()) : BigInt((yd - x.den()) / v.den());
  int step = k < 0 ? -1 : 1;
  BigInt count = abs_big(k);

  std::vector<Slope> path;
  path.reserve(static_cast<std::size_t>(count) + 1);
  BigInt pn = x.num();
  BigInt pd = x.den();
  for (BigInt i = 0; i <= count; ++i) {
    path.emplace_back(pn, pd);
    pn += step * v.num();
    pd += step * v.den();
  }
  return path;
}

}  // namespace pants
