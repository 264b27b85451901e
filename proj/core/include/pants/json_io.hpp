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

// JSON interchange for every public value. Serialization is canonical:
// keys sorted, lists in the owning type's sorted order, so
// to_json(from_json(x)) reproduces x byte for byte.

#include "pants/complex.hpp"
#include "pants/farey.hpp"
#include "pants/homotopy.hpp"
#include "pants/move_graph.hpp"
#include "pants/pants_graph.hpp"
#include "pants/surface.hpp"

#include <nlohmann/json.hpp>

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pants {

using Json = nlohmann::json;

/// Malformed JSON text; what() carries "line L, column C".
class JsonSyntaxError : public std::runtime_error {
 public:
  JsonSyntaxError(std::string message, std::size_t line, std::size_t column)
      : std::runtime_error(std::move(message)), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed JSON that does not match the expected schema.
class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json parse_json(std::string_view text);
std::string dump(const Json& j);

Json to_json(SurfaceType s);
SurfaceType surface_from_json(const Json& j);

Json to_json(const Slope& s);
Slope slope_from_json(const Json& j);

Json to_json(const CanonicalCode& c);
CanonicalCode code_from_json(const Json& j);

/// Slopes are strings, type codes are integer arrays.
Json to_json(const Vertex& v);
Vertex vertex_from_json(const Json& j);

Json to_json(const EdgePath& path);
EdgePath path_from_json(const Json& j);

Json to_json(const PantsGraph& g);
PantsGraph pants_graph_from_json(const Json& j);

Json to_json(const FareySubcomplex& f);
FareySubcomplex farey_subcomplex_from_json(const Json& j);

Json to_json(const TypeMoveGraph& g);
TypeMoveGraph move_graph_from_json(const Json& j);

Json to_json(const RelationInstance& r);
RelationInstance relation_from_json(const Json& j);

Json to_json(const HomotopyStep& step);
HomotopyStep step_from_json(const Json& j);

Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

/// Rebuilds the complex named by a Complex::descriptor().
std::unique_ptr<Complex> host_from_json(const Json& descriptor);

/// What kind of object a JSON document holds, judged by its keys.
enum class ObjectKind { PantsGraph, FareySubcomplex, TypeMoveGraph, Relation, RelationList, Certificate, EdgePath };

ObjectKind detect_object(const Json& j);

}  // namespace pants
