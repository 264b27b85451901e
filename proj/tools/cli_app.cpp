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

#include "cli_app.hpp"

#include "CLI11.hpp"

#include <pants/dot.hpp>
#include <pants/homotopy.hpp>
#include <pants/json_io.hpp>
#include <pants/relations.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace pants::cli {
namespace {

// A verified-false outcome that is not an input error.
struct Rejected {
  Json report;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json read_json(const std::string& path) { return parse_json(read_input(path)); }

SlopeModel parse_model(const std::string& text) {
  if (text == "a" || text == "A") return SlopeModel::A;
  if (text == "s" || text == "S") return SlopeModel::S;
  throw std::invalid_argument("--model must be a or s");
}

EdgePath loop_from_document(const Json& j) {
  if (j.is_object() && j.contains("loop")) return path_from_json(j["loop"]);
  return path_from_json(j);
}

std::vector<RelationInstance> type_cells(const TypeMoveGraph& host, const std::string& list) {
  std::vector<RelationInstance> cells;
  std::stringstream ss(list);
  std::string tag;
  while (std::getline(ss, tag, ',')) {
    auto found = find_instances(host, parse_relation_tag(tag));
    cells.insert(cells.end(), found.begin(), found.end());
  }
  return cells;
}

Json usage_json(const Certificate& cert) {
  Json usage = Json::object();
  for (const auto& [tag, count] : cell_usage(cert)) usage[to_string(tag)] = count;
  return usage;
}

Json commute_summary(const TypeMoveGraph& host) {
  int pairs = 0, violations = 0, squares = 0;
  for (int v = 0; v < static_cast<int>(host.vertices().size()); ++v) {
    const PantsGraph graph = decode(host.vertices()[v]);
    const auto& edges = graph.edges();
    for (int e1 = 0; e1 < static_cast<int>(edges.size()); ++e1) {
      for (int e2 = e1 + 1; e2 < static_cast<int>(edges.size()); ++e2) {
        const InternalEdge& a = edges[e1];
        const InternalEdge& b = edges[e2];
        if (a.is_loop() || b.is_loop() || a.a == b.a || a.a == b.b || a.b == b.a || a.b == b.b) {
          continue;
        }
        ++pairs;
        CommuteResult r = commute_check(host, v, e1, e2);
        violations += static_cast<int>(r.violations.size());
        squares += static_cast<int>(r.squares.size());
      }
    }
  }
  return {{"g", host.surface().genus},
          {"n", host.surface().boundary_count},
          {"disjoint_pairs", pairs},
          {"violations", violations},
          {"squares", squares}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pants decompositions, elementary moves and contraction certificates", "pants"};
  app.require_subcommand(1);

  int g = 0, n = 0;
  std::string path, model = "a", kind, format = "json", cells = "3A,5A,C";
  int limit = 1;
  std::size_t budget = FillBudget{}.max_states;
  std::uint64_t seed = 0;
  int count = 10, max_out = 10;
  std::string max_den = "1000000";
  bool with_certificates = false;

  auto add_gn = [&](CLI::App* sub) {
    sub->add_option("g", g, "genus")->required();
    sub->add_option("n", n, "boundary count")->required();
  };

  auto* counts = app.add_subcommand("counts", "Curve and pants counts for (g,n)");
  add_gn(counts);
  auto* enumerate = app.add_subcommand("enumerate", "All topological types of (g,n)");
  add_gn(enumerate);
  auto* moves = app.add_subcommand("moves", "Legal S- and A-moves of a pants graph");
  moves->add_option("graph", path, "pants graph JSON")->required();
  auto* farey = app.add_subcommand("farey", "Slope complex queries");
  farey->require_subcommand(1);
  auto* ball = farey->add_subcommand("ball", "Bounded window of the slope complex");
  ball->add_option("limit", limit, "max |p| and q")->required();
  ball->add_option("--model", model, "a or s");
  auto* reduce = app.add_subcommand("reduce", "Contract a slope loop");
  reduce->add_option("loop", path, "loop JSON")->required();
  reduce->add_option("--model", model, "a or s");
  auto* fill = app.add_subcommand("fill", "Fill a loop of the type move graph");
  add_gn(fill);
  fill->add_option("loop", path, "loop JSON")->required();
  fill->add_option("--budget", budget, "max search states");
  fill->add_option("--cells", cells, "comma-separated relation kinds");
  auto* relations = app.add_subcommand("relations", "Relation cells of the type move graph");
  add_gn(relations);
  relations->add_option("--kind", kind, "3A|5A|3S|6AS|C")->required();
  auto* verify = app.add_subcommand("verify", "Check a contraction certificate");
  verify->add_option("certificate", path, "certificate JSON")->required();
  auto* exporter = app.add_subcommand("export", "Re-emit an object as canonical JSON or DOT");
  exporter->add_option("object", path, "object JSON")->required();
  exporter->add_option("--format", format, "dot or json");
  auto* graph_cmd = app.add_subcommand("graph", "Type-level move graph of (g,n)");
  add_gn(graph_cmd);
  auto* report = app.add_subcommand("report", "Fill every cycle-basis loop of the type move graph");
  add_gn(report);
  report->add_option("--budget", budget, "max search states per loop");
  report->add_option("--cells", cells, "comma-separated relation kinds");
  report->add_flag("--certificates", with_certificates, "include certificates");
  auto* commute = app.add_subcommand("commute", "Check all disjoint A-move pairs commute");
  add_gn(commute);
  auto* corpus = app.add_subcommand("corpus", "Seeded random closed loops of the slope complex");
  corpus->add_option("--seed", seed, "RNG seed")->required();
  corpus->add_option("--count", count, "number of loops");
  corpus->add_option("--max-out", max_out, "outward walk length bound");
  corpus->add_option("--max-den", max_den, "denominator bound");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Json result;
    std::string text;
    if (counts->parsed()) {
      SurfaceType s = validate_surface(g, n);
      result = {{"curves", curve_count(s)}, {"pants", pants_count(s)}};
    } else if (enumerate->parsed()) {
      SurfaceType s = validate_surface(g, n);
      Json types = Json::array();
      for (const auto& code : enumerate_types(s)) types.push_back(to_json(code));
      result = {{"g", g}, {"n", n}, {"count", types.size()}, {"types", types}};
    } else if (moves->parsed()) {
      PantsGraph graph = pants_graph_from_json(read_json(path));
      Json list = Json::array();
      for (const LegalMove& m : legal_moves(graph)) {
        Json outcomes = Json::array();
        for (const auto& c : m.outcomes) outcomes.push_back(to_json(c));
        list.push_back({{"kind", to_string(m.kind)},
                        {"edge", m.edge},
                        {"complement", to_json(complement_type(graph, m.edge))},
                        {"outcomes", outcomes}});
      }
      result = {{"code", to_json(canonical_code(graph))}, {"moves", list}};
    } else if (ball->parsed()) {
      result = to_json(bounded_subcomplex(parse_model(model), limit));
    } else if (reduce->parsed()) {
      result = to_json(reduce_farey_loop(parse_model(model), loop_from_document(read_json(path))));
    } else if (fill->parsed()) {
      TypeMoveGraph host = build_move_graph(validate_surface(g, n));
      FillBudget b;
      b.max_states = budget;
      FillResult r = fill_finite_loop(host, loop_from_document(read_json(path)),
                                      type_cells(host, cells), b);
      if (r.status != FillStatus::Filled) {
        throw Rejected{{{"status", to_string(r.status)}, {"explored", r.explored}}};
      }
      result = to_json(r.certificate);
    } else if (relations->parsed()) {
      TypeMoveGraph host = build_move_graph(validate_surface(g, n));
      RelationTag tag = parse_relation_tag(kind);
      Json list = Json::array();
      for (const auto& inst : find_instances(host, tag)) list.push_back(to_json(inst));
      result = {{"g", g}, {"n", n}, {"kind", to_string(tag)}, {"count", list.size()},
                {"instances", list}};
    } else if (verify->parsed()) {
      Certificate cert = certificate_from_json(read_json(path));
      std::unique_ptr<Complex> host = host_from_json(cert.host);
      Verdict v = verify_certificate(*host, cert);
      if (!v) throw Rejected{{{"valid", false}, {"diagnostic", v.diagnostic}}};
      result = {{"valid", true}, {"steps", cert.steps.size()}};
    } else if (exporter->parsed()) {
      if (format != "dot" && format != "json") throw std::invalid_argument("--format must be dot or json");
      Json doc = read_json(path);
      switch (detect_object(doc)) {
        case ObjectKind::PantsGraph: {
          PantsGraph x = pants_graph_from_json(doc);
          format == "dot" ? void(text = to_dot(x)) : void(result = to_json(x));
          break;
        }
        case ObjectKind::FareySubcomplex: {
          FareySubcomplex x = farey_subcomplex_from_json(doc);
          format == "dot" ? void(text = to_dot(x)) : void(result = to_json(x));
          break;
        }
        case ObjectKind::TypeMoveGraph: {
          TypeMoveGraph x = move_graph_from_json(doc);
          format == "dot" ? void(text = to_dot(x)) : void(result = to_json(x));
          break;
        }
        case ObjectKind::Relation: {
          std::vector<RelationInstance> x{relation_from_json(doc)};
          format == "dot" ? void(text = to_dot(std::span<const RelationInstance>(x)))
                          : void(result = to_json(x.front()));
          break;
        }
        case ObjectKind::RelationList: {
          std::vector<RelationInstance> x;
          Json list = Json::array();
          const Json& instances = doc["instances"];
          if (!instances.is_array()) throw SchemaError("instances must be an array");
          for (const Json& item : instances) {
            x.push_back(relation_from_json(item));
            list.push_back(to_json(x.back()));
          }
          if (format == "dot") {
            text = to_dot(std::span<const RelationInstance>(x));
          } else {
            result = doc;
            result["instances"] = list;
            result["count"] = list.size();
          }
          break;
        }
        case ObjectKind::Certificate: {
          Certificate x = certificate_from_json(doc);
          format == "dot" ? void(text = to_dot(x)) : void(result = to_json(x));
          break;
        }
        case ObjectKind::EdgePath: {
          EdgePath x = path_from_json(doc);
          format == "dot" ? void(text = to_dot(x)) : void(result = to_json(x));
          break;
        }
      }
    } else if (graph_cmd->parsed()) {
      result = to_json(build_move_graph(validate_surface(g, n)));
    } else if (report->parsed()) {
      TypeMoveGraph host = build_move_graph(validate_surface(g, n));
      FillBudget b;
      b.max_states = budget;
      std::vector<RelationInstance> cell_list = type_cells(host, cells);
      SimplyConnectedReport r = simply_connected_report(host, cell_list, b);
      Json usage = Json::array();
      Json certificates = Json::array();
      for (const auto& cert : r.certificates) {
        usage.push_back(usage_json(cert));
        if (with_certificates) certificates.push_back(to_json(cert));
      }
      result = {{"g", g},
                {"n", n},
                {"vertices", host.vertices().size()},
                {"edges", host.edges().size()},
                {"components", host.component_count()},
                {"cells", cell_list.size()},
                {"basis_loops", r.basis_loops},
                {"filled", r.filled},
                {"failed", r.failed},
                {"cell_usage", usage}};
      if (with_certificates) result["certificates"] = certificates;
      if (r.failed > 0) {
        Json unfilled = Json::array();
        for (std::size_t i = 0; i < r.unfilled.size(); ++i) {
          unfilled.push_back({{"loop", to_json(r.unfilled[i])}, {"status", to_string(r.unfilled_status[i])}});
        }
        result["unfilled"] = unfilled;
      }
      if (r.failed > 0) throw Rejected{result};
    } else if (commute->parsed()) {
      result = commute_summary(build_move_graph(validate_surface(g, n)));
      if (result["violations"] != 0) throw Rejected{result};
    } else if (corpus->parsed()) {
      std::mt19937_64 rng(seed);
      BigInt bound(max_den);
      Json loops = Json::array();
      for (int i = 0; i < count; ++i) loops.push_back(to_json(random_farey_loop(rng, max_out, bound)));
      result = {{"seed", seed}, {"loops", loops}};
    }
    if (!text.empty()) {
      out << text;
    } else {
      out << dump(result) << "\n";
    }
    return kOk;
  } catch (const Rejected& r) {
    out << dump(r.report) << "\n";
    return kRejected;
  } catch (const JsonSyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace pants::cli
