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

#include "pants/json_io.hpp"

#include <algorithm>
#include <map>

namespace pants {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw SchemaError(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing key '") + key + "'");
  return *it;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& value = field(j, key);
  if (!value.is_array()) throw SchemaError(std::string("key '") + key + "' must be an array");
  return value;
}

int int_value(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw SchemaError(std::string(what) + " must be an integer");
  return j.get<int>();
}

// Turns library exceptions raised while reading a document into SchemaError.
template <typename F>
auto reading(const char* what, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const SchemaError& e) {
    throw SchemaError(std::string(what) + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string(what) + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
    offset = std::min(offset, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw JsonSyntaxError("malformed JSON at line " + std::to_string(line) + ", column " +
                              std::to_string(column) + ": " + e.what(),
                          line, column);
  }
}

std::string dump(const Json& j) { return j.dump(); }

Json to_json(SurfaceType s) { return {{"g", s.genus}, {"n", s.boundary_count}}; }

SurfaceType surface_from_json(const Json& j) {
  return reading("surface type", [&] {
    return validate_surface(int_value(field(j, "g"), "g"), int_value(field(j, "n"), "n"));
  });
}

Json to_json(const Slope& s) { return s.to_string(); }

Slope slope_from_json(const Json& j) {
  return reading("slope", [&] {
    if (!j.is_string()) throw SchemaError("slopes are strings \"p/q\"");
    return Slope::parse(j.get<std::string>());
  });
}

Json to_json(const CanonicalCode& c) { return c.digits; }

CanonicalCode code_from_json(const Json& j) {
  return reading("type code", [&] {
    if (!j.is_array()) throw SchemaError("type codes are integer arrays");
    CanonicalCode code;
    for (const Json& d : j) code.digits.push_back(int_value(d, "code digit"));
    decode(code);  // rejects codes that are not dual graphs
    return code;
  });
}

Json to_json(const Vertex& v) { return std::visit([](const auto& x) { return to_json(x); }, v); }

Vertex vertex_from_json(const Json& j) {
  if (j.is_string()) return slope_from_json(j);
  if (j.is_array()) return code_from_json(j);
  throw SchemaError("vertex must be a slope string or a type code array");
}

Json to_json(const EdgePath& path) {
  Json out = Json::array();
  for (const Vertex& v : path) out.push_back(to_json(v));
  return out;
}

EdgePath path_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("edge path must be an array of vertices");
  EdgePath path;
  for (const Json& v : j) path.push_back(vertex_from_json(v));
  return path;
}

Json to_json(const PantsGraph& g) {
  Json pants = Json::array();
  for (int p = 0; p < g.pant_count(); ++p) pants.push_back(p);
  Json legs = Json::array();
  for (const Leg& leg : g.legs()) legs.push_back({leg.label, leg.pant});
  Json edges = Json::array();
  for (const InternalEdge& e : g.edges()) edges.push_back({e.a, e.b});
  return {{"g", g.surface().genus},
          {"n", g.surface().boundary_count},
          {"pants", pants},
          {"legs", legs},
          {"edges", edges}};
}

PantsGraph pants_graph_from_json(const Json& j) {
  return reading("pants graph", [&] {
    const int g = int_value(field(j, "g"), "g");
    const int n = int_value(field(j, "n"), "n");
    std::vector<int> ids;
    for (const Json& id : array_field(j, "pants")) ids.push_back(int_value(id, "pant id"));
    std::vector<int> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw SchemaError("pant ids must be distinct");
    }
    auto index = [&](const Json& id) {
      int value = int_value(id, "pant id");
      auto it = std::lower_bound(sorted.begin(), sorted.end(), value);
      if (it == sorted.end() || *it != value) {
        throw SchemaError("unknown pant id " + std::to_string(value));
      }
      return static_cast<int>(it - sorted.begin());
    };
    std::vector<Leg> legs;
    for (const Json& leg : array_field(j, "legs")) {
      if (!leg.is_array() || leg.size() != 2) throw SchemaError("legs are [label, pant] pairs");
      legs.push_back({int_value(leg[0], "leg label"), index(leg[1])});
    }
    std::vector<InternalEdge> edges;
    for (const Json& e : array_field(j, "edges")) {
      if (!e.is_array() || e.size() != 2) throw SchemaError("edges are [p, q] pairs");
      edges.push_back({index(e[0]), index(e[1])});
    }
    return PantsGraph(SurfaceType{g, n}, static_cast<int>(ids.size()), std::move(legs),
                      std::move(edges));
  });
}

Json to_json(const FareySubcomplex& f) {
  Json vertices = Json::array(), edges = Json::array(), triangles = Json::array();
  for (const Slope& v : f.vertices()) vertices.push_back(to_json(v));
  for (const auto& [a, b] : f.edges()) edges.push_back({to_json(a), to_json(b)});
  for (const auto& t : f.triangles()) triangles.push_back({to_json(t[0]), to_json(t[1]), to_json(t[2])});
  return {{"kind", to_string(f.model())},
          {"vertices", vertices},
          {"edges", edges},
          {"triangles", triangles}};
}

namespace {
SlopeModel model_from_json(const Json& j) {
  if (j == "A") return SlopeModel::A;
  if (j == "S") return SlopeModel::S;
  throw SchemaError("slope model must be \"A\" or \"S\"");
}
}  // namespace

FareySubcomplex farey_subcomplex_from_json(const Json& j) {
  return reading("farey subcomplex", [&] {
    std::vector<Slope> vertices;
    for (const Json& v : array_field(j, "vertices")) vertices.push_back(slope_from_json(v));
    std::vector<std::pair<Slope, Slope>> edges;
    for (const Json& e : array_field(j, "edges")) {
      if (!e.is_array() || e.size() != 2) throw SchemaError("edges are slope pairs");
      edges.emplace_back(slope_from_json(e[0]), slope_from_json(e[1]));
    }
    std::vector<std::array<Slope, 3>> triangles;
    for (const Json& t : array_field(j, "triangles")) {
      if (!t.is_array() || t.size() != 3) throw SchemaError("triangles are slope triples");
      triangles.push_back({slope_from_json(t[0]), slope_from_json(t[1]), slope_from_json(t[2])});
    }
    return FareySubcomplex(model_from_json(field(j, "kind")), std::move(vertices),
                           std::move(edges), std::move(triangles));
  });
}

Json to_json(const TypeMoveGraph& g) {
  Json vertices = Json::array(), edges = Json::array();
  for (const auto& code : g.vertices()) vertices.push_back(to_json(code));
  for (const MoveEdge& e : g.edges()) edges.push_back({e.from, e.to, e.edge, e.branch});
  return {{"g", g.surface().genus},
          {"n", g.surface().boundary_count},
          {"vertices", vertices},
          {"edges", edges},
          {"components", g.component_count()},
          {"type_fixing_moves", g.type_fixing_moves()}};
}

TypeMoveGraph move_graph_from_json(const Json& j) {
  return reading("type move graph", [&] {
    SurfaceType s = surface_from_json(j);
    std::vector<CanonicalCode> vertices;
    for (const Json& v : array_field(j, "vertices")) vertices.push_back(code_from_json(v));
    std::vector<MoveEdge> edges;
    for (const Json& e : array_field(j, "edges")) {
      if (!e.is_array() || e.size() != 4) throw SchemaError("edges are [from, to, edge, branch]");
      edges.push_back({int_value(e[0], "from"), int_value(e[1], "to"), int_value(e[2], "edge"),
                       int_value(e[3], "branch")});
    }
    TypeMoveGraph graph(s, std::move(vertices), std::move(edges),
                        int_value(field(j, "type_fixing_moves"), "type_fixing_moves"));
    if (int_value(field(j, "components"), "components") != graph.component_count()) {
      throw SchemaError("component count does not match the edges");
    }
    return graph;
  });
}

Json to_json(const RelationInstance& r) {
  Json sites = Json::array();
  for (const StepSite& s : r.sites) {
    Json site = {{"move", to_string(s.kind)}};
    if (s.edge >= 0) site["edge"] = s.edge;
    if (s.branch >= 0) site["branch"] = s.branch;
    sites.push_back(site);
  }
  return {{"kind", to_string(r.kind)}, {"boundary", to_json(r.boundary)}, {"sites", sites}};
}

RelationInstance relation_from_json(const Json& j) {
  return reading("relation instance", [&] {
    const Json& kind = field(j, "kind");
    if (!kind.is_string()) throw SchemaError("kind must be a string");
    RelationInstance r;
    r.kind = parse_relation_tag(kind.get<std::string>());
    r.boundary = path_from_json(field(j, "boundary"));
    if (j.contains("sites")) {
      for (const Json& s : array_field(j, "sites")) {
        StepSite site;
        const Json& move = field(s, "move");
        if (move == "A") {
          site.kind = MoveKind::A;
        } else if (move == "S") {
          site.kind = MoveKind::S;
        } else {
          throw SchemaError("site move must be \"A\" or \"S\"");
        }
        if (s.contains("edge")) site.edge = int_value(s["edge"], "site edge");
        if (s.contains("branch")) site.branch = int_value(s["branch"], "site branch");
        r.sites.push_back(site);
      }
    }
    return r;
  });
}

Json to_json(const HomotopyStep& step) {
  if (const auto* c = std::get_if<CancelBacktrack>(&step)) {
    return {{"op", "cancel-backtrack"}, {"position", c->position}};
  }
  if (const auto* i = std::get_if<InsertBacktrack>(&step)) {
    return {{"op", "insert-backtrack"}, {"position", i->position}, {"vertex", to_json(i->vertex)}};
  }
  const auto& s = std::get<CellSwap>(step);
  return {{"op", "cell-swap"},
          {"position", s.position},
          {"length", s.length},
          {"cell", to_json(s.cell)}};
}

HomotopyStep step_from_json(const Json& j) {
  return reading("homotopy step", [&]() -> HomotopyStep {
    const Json& op = field(j, "op");
    auto index = [&](const char* key) {
      const Json& v = field(j, key);
      if (!v.is_number_unsigned()) throw SchemaError(std::string(key) + " must be a non-negative integer");
      return v.get<std::size_t>();
    };
    if (op == "cancel-backtrack") return CancelBacktrack{index("position")};
    if (op == "insert-backtrack") {
      return InsertBacktrack{index("position"), vertex_from_json(field(j, "vertex"))};
    }
    if (op == "cell-swap") {
      return CellSwap{index("position"), index("length"), relation_from_json(field(j, "cell"))};
    }
    throw SchemaError("unknown step op " + op.dump());
  });
}

Json to_json(const Certificate& c) {
  Json steps = Json::array();
  for (const HomotopyStep& s : c.steps) steps.push_back(to_json(s));
  return {{"host", c.host},
          {"initial", to_json(c.initial)},
          {"steps", steps},
          {"final", to_json(c.final_loop)}};
}

Certificate certificate_from_json(const Json& j) {
  return reading("certificate", [&] {
    Certificate c;
    c.host = field(j, "host");
    c.initial = path_from_json(field(j, "initial"));
    for (const Json& s : array_field(j, "steps")) c.steps.push_back(step_from_json(s));
    c.final_loop = path_from_json(field(j, "final"));
    return c;
  });
}

std::unique_ptr<Complex> host_from_json(const Json& descriptor) {
  return reading("host descriptor", [&]() -> std::unique_ptr<Complex> {
    const Json& model = field(descriptor, "model");
    if (model == "farey") {
      return std::make_unique<FareyComplex>(model_from_json(field(descriptor, "kind")));
    }
    if (model == "farey-window") {
      return std::make_unique<FareySubcomplex>(
          farey_subcomplex_from_json(field(descriptor, "subcomplex")));
    }
    if (model == "types") {
      return std::make_unique<TypeMoveGraph>(build_move_graph(surface_from_json(descriptor)));
    }
    throw SchemaError("unknown host model " + model.dump());
  });
}

ObjectKind detect_object(const Json& j) {
  if (j.is_array() && !j.empty()) return ObjectKind::EdgePath;
  if (!j.is_object()) throw SchemaError("expected a JSON object or a non-empty edge path");
  if (j.contains("steps") && j.contains("initial")) return ObjectKind::Certificate;
  if (j.contains("instances")) return ObjectKind::RelationList;
  if (j.contains("boundary") && j.contains("kind")) return ObjectKind::Relation;
  if (j.contains("triangles")) return ObjectKind::FareySubcomplex;
  if (j.contains("pants") && j.contains("legs")) return ObjectKind::PantsGraph;
  if (j.contains("vertices") && j.contains("edges") && j.contains("g")) {
    return ObjectKind::TypeMoveGraph;
  }
  throw SchemaError("unrecognised object: expected a pants graph, farey subcomplex, type move "
                    "graph, relation instance(s), certificate or edge path");
}

}  // namespace pants
