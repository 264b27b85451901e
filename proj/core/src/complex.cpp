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

#include "pants/complex.hpp"

#include <stdexcept>

namespace pants {

std::string to_string(const Vertex& v) {
  return std::visit([](const auto& x) { return x.to_string(); }, v);
}

const char* to_string(RelationTag tag) {
  switch (tag) {
    case RelationTag::R3A: return "3A";
    case RelationTag::R5A: return "5A";
    case RelationTag::R3S: return "3S";
    case RelationTag::R6AS: return "6AS";
    case RelationTag::RC: return "C";
  }
  return "?";
}

RelationTag parse_relation_tag(std::string_view text) {
  if (text == "3A") return RelationTag::R3A;
  if (text == "5A") return RelationTag::R5A;
  if (text == "3S") return RelationTag::R3S;
  if (text == "6AS") return RelationTag::R6AS;
  if (text == "C") return RelationTag::RC;
  throw std::invalid_argument("unknown relation kind '" + std::string(text) + "'");
}

RelationKind relation_kind(RelationTag tag) {
  switch (tag) {
    case RelationTag::R3A: return {tag, 3, 3, 0};
    case RelationTag::R5A: return {tag, 5, 5, 0};
    case RelationTag::R3S: return {tag, 3, 0, 3};
    case RelationTag::R6AS: return {tag, 6, 4, 2};
    case RelationTag::RC: return {tag, 4, 2, 0};
  }
  throw std::logic_error("relation_kind: bad tag");
}

}  // namespace pants
