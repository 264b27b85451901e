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

#include "pants/dot.hpp"

#include "pants/json_io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pants {
namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

const char* kPalette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"};

}  // namespace

std::string to_dot(const FareySubcomplex& f) {
  std::ostringstream out;
  out << "graph farey_" << to_string(f.model()) << " {\n";
  for (const Slope& v : f.vertices()) out << "  " << quoted(v.to_string()) << ";\n";
  for (const auto& [a, b] : f.edges()) {
    out << "  " << quoted(a.to_string()) << " -- " << quoted(b.to_string()) << " [label="
        << to_string(edge_move(f.model())) << "];\n";
  }
  for (const auto& t : f.triangles()) {
    out << "  // triangle " << to_string(triangle_relation(f.model())) << ": " << t[0].to_string()
        << " " << t[1].to_string() << " " << t[2].to_string() << "\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const TypeMoveGraph& g) {
  std::ostringstream out;
  out << "graph types_g" << g.surface().genus << "_n" << g.surface().boundary_count << " {\n";
  for (std::size_t i = 0; i < g.vertices().size(); ++i) {
    out << "  v" << i << " [label=" << quoted(g.vertices()[i].to_string()) << "];\n";
  }
  for (const MoveEdge& e : g.edges()) {
    out << "  v" << e.from << " -- v" << e.to << " [label=\"A@" << e.edge << "/" << e.branch
        << "\"];\n";
  }
  out << "  // components: " << g.component_count()
      << ", type-fixing moves: " << g.type_fixing_moves() << "\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const PantsGraph& g) {
  std::ostringstream out;
  out << "graph pants {\n";
  for (int p = 0; p < g.pant_count(); ++p) out << "  p" << p << " [shape=circle];\n";
  for (const Leg& leg : g.legs()) {
    out << "  leg" << leg.label << " [shape=plaintext,label=\"" << leg.label << "\"];\n";
    out << "  leg" << leg.label << " -- p" << leg.pant << ";\n";
  }
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const InternalEdge& e = g.edges()[i];
    out << "  p" << e.a << " -- p" << e.b << " [label=\"e" << i << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(std::span<const RelationInstance> cells) {
  std::ostringstream out;
  std::map<std::string, int> ids;
  auto id = [&](const Vertex& v) {
    auto [it, fresh] = ids.emplace(to_string(v), static_cast<int>(ids.size()));
    return it->second;
  };
  std::ostringstream body;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto& b = cells[c].boundary;
    const char* colour = kPalette[c % std::size(kPalette)];
    body << "  // cell " << c << " " << to_string(cells[c].kind) << ":";
    for (const Vertex& v : b) body << " " << to_string(v);
    body << "\n";
    for (std::size_t i = 0; i < b.size(); ++i) {
      body << "  v" << id(b[i]) << " -- v" << id(b[(i + 1) % b.size()]) << " [color=" << colour
           << "];\n";
    }
  }
  out << "graph cells {\n";
  std::vector<std::pair<int, std::string>> nodes;
  for (const auto& [label, i] : ids) nodes.emplace_back(i, label);
  std::sort(nodes.begin(), nodes.end());
  for (const auto& [i, label] : nodes) out << "  v" << i << " [label=" << quoted(label) << "];\n";
  out << body.str() << "}\n";
  return out.str();
}

std::string to_dot(const Certificate& c) {
  std::ostringstream out;
  out << "digraph certificate {\n";
  out << "  // host: " << dump(c.host) << "\n";
  for (std::size_t i = 0; i < c.initial.size(); ++i) {
    out << "  s" << i << " [label=" << quoted(to_string(c.initial[i])) << "];\n";
  }
  for (std::size_t i = 0; i + 1 < c.initial.size(); ++i) {
    out << "  s" << i << " -> s" << i + 1 << ";\n";
  }
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    out << "  // step " << i << ": " << dump(to_json(c.steps[i])) << "\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const EdgePath& path) {
  std::ostringstream out;
  out << "digraph path {\n";
  for (std::size_t i = 0; i < path.size(); ++i) {
    out << "  v" << i << " [label=" << quoted(to_string(path[i])) << "];\n";
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) out << "  v" << i << " -> v" << i + 1 << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace pants
