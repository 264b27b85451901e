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

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pants {

using BigInt = boost::multiprecision::cpp_int;

/// A reduced fraction p/q or infinity, labelling an isotopy class of
/// essential curves on a (0,4) or (1,1) surface.
///
/// Representatives are unique: gcd(|p|, q) = 1, q >= 0, the sign lives in p,
/// and infinity is always 1/0.
class Slope {
 public:
  /// Normalizes num/den. Throws std::invalid_argument for 0/0.
  Slope(BigInt num, BigInt den);
  Slope(long long num, long long den) : Slope(BigInt(num), BigInt(den)) {}

  static Slope infinity() { return Slope(1, 0); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_infinite() const { return den_ == 0; }

  /// |p| + q; infinity and 0 both score 1.
  BigInt complexity() const;

  /// "p/q", with "1/0" for infinity.
  std::string to_string() const;
  /// Accepts "p/q", "p" (q = 1) and "inf"; the result is normalized.
  static Slope parse(std::string_view text);

  friend bool operator==(const Slope& a, const Slope& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  /// Lexicographic on (num, den). This is the order used for sorting
  /// serialized output and for every tie-break.
  friend bool operator<(const Slope& a, const Slope& b) {
    if (a.num_ != b.num_) return a.num_ < b.num_;
    return a.den_ < b.den_;
  }
  friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }
  friend bool operator>(const Slope& a, const Slope& b) { return b < a; }
  friend bool operator<=(const Slope& a, const Slope& b) { return !(b < a); }
  friend bool operator>=(const Slope& a, const Slope& b) { return !(a < b); }

 private:
  BigInt num_;
  BigInt den_;
};

/// |a.num * b.den - a.den * b.num| == 1.
bool is_adjacent(const Slope& a, const Slope& b);

/// The mediant and anti-mediant of an adjacent pair: the only two slopes
/// adjacent to both. Throws std::invalid_argument if a and b are not adjacent.
std::pair<Slope, Slope> triangle_completions(const Slope& a, const Slope& b);

/// The neighbours of v lie on a line x + k*v (k integer, up to sign). Returns
/// the segment of that line from x to y, so that each {v, z_i, z_i+1} is a
/// triangle. Throws std::invalid_argument if x or y is not adjacent to v.
std::vector<Slope> fan_path(const Slope& v, const Slope& x, const Slope& y);

}  // namespace pants
