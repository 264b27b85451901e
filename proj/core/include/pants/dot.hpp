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

#include "pants/farey.hpp"
#include "pants/homotopy.hpp"
#include "pants/move_graph.hpp"
#include "pants/pants_graph.hpp"

#include <span>
#include <string>

namespace pants {

/// Graphviz renderings. Output is deterministic; cells and triangles that
/// DOT cannot draw are listed as comments.
std::string to_dot(const FareySubcomplex& f);
std::string to_dot(const TypeMoveGraph& g);
std::string to_dot(const PantsGraph& g);
/// Edges of every cell, coloured per cell, with one comment line per cell.
std::string to_dot(std::span<const RelationInstance> cells);
/// The initial loop as a path, with the step list in comments.
std::string to_dot(const Certificate& c);
/// A path or loop, vertices in order.
std::string to_dot(const EdgePath& path);

}  // namespace pants
