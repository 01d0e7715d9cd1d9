#include "genconn/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace genconn {

namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    fail(ErrorCode::parse_error, "cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Byte offset -> line:column for parse diagnostics.
std::pair<std::size_t, std::size_t> line_column(const std::string& text,
                                                std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

// Wraps json type/member errors in the library error type.
template <typename Fn>
auto guarded(const Fn& fn, const char* what) {
  try {
    return fn();
  } catch (const json::exception& e) {
    fail(ErrorCode::parse_error, std::string(what) + ": " + e.what());
  }
}

SignedEdge parse_signed_literal(const std::string& token) {
  const std::vector<SignedEdge> letters = parse_raw_letters(token);
  if (letters.size() != 1) {
    fail(ErrorCode::parse_error, "expected one signed edge, got '" + token + "'");
  }
  return letters.front();
}

std::string signed_literal(const SignedEdge& letter) {
  return letter.sign == EdgeSign::forward ? letter.edge : letter.edge + "^-1";
}

Polynomial polynomial_from_json(const json& j) {
  Polynomial p;
  for (const json& term : j) {
    Monomial m;
    m.coeff = term.at("coeff").get<double>();
    m.exponents = term.at("exponents").get<std::vector<int>>();
    p.terms.push_back(std::move(m));
  }
  return p;
}

json polynomial_to_json(const Polynomial& p) {
  json out = json::array();
  for (const Monomial& m : p.terms) {
    out.push_back({{"coeff", m.coeff}, {"exponents", m.exponents}});
  }
  return out;
}

}  // namespace

json load_json_file(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    fail(ErrorCode::parse_error, path.string() + ":" + std::to_string(line) +
                                     ":" + std::to_string(column) + ": " +
                                     e.what());
  }
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    fail(ErrorCode::invalid_argument, "cannot write '" + path.string() + "'");
  }
  out << dump_json(j);
}

std::string file_digest(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  std::uint64_t hash = 1469598103934665603ULL;
  for (const unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "fnv1a:%016llx",
                static_cast<unsigned long long>(hash));
  return buffer;
}

GraphPtr graph_from_json(const json& j) {
  return guarded(
      [&]() -> GraphPtr {
        std::vector<Vertex> vertices;
        for (const json& vj : j.at("vertices")) {
          Vertex v;
          v.id = vj.at("id").get<std::string>();
          if (vj.contains("position")) {
            v.position = vj.at("position").get<std::vector<double>>();
          }
          vertices.push_back(std::move(v));
        }
        std::vector<OrientedEdge> edges;
        for (const json& ej : j.at("edges")) {
          OrientedEdge e;
          e.id = ej.at("id").get<std::string>();
          e.source = ej.at("source").get<std::string>();
          e.target = ej.at("target").get<std::string>();
          if (ej.contains("polyline")) {
            e.polyline =
                ej.at("polyline").get<std::vector<std::vector<double>>>();
          }
          edges.push_back(std::move(e));
        }
        return std::make_shared<const EmbeddedGraph>(
            j.at("name").get<std::string>(), std::move(vertices),
            std::move(edges));
      },
      "graph file");
}

json graph_to_json(const EmbeddedGraph& graph) {
  json vertices = json::array();
  for (const Vertex& v : graph.vertices()) {
    json vj = {{"id", v.id}};
    if (v.position) vj["position"] = *v.position;
    vertices.push_back(std::move(vj));
  }
  json edges = json::array();
  for (const OrientedEdge& e : graph.edges()) {
    json ej = {{"id", e.id}, {"source", e.source}, {"target", e.target}};
    if (e.polyline) ej["polyline"] = *e.polyline;
    edges.push_back(std::move(ej));
  }
  return {{"name", graph.name()}, {"vertices", vertices}, {"edges", edges}};
}

GraphPtr load_graph(const std::filesystem::path& path) {
  return graph_from_json(load_json_file(path));
}

namespace {

void require_graph_name(const json& j, const GraphPtr& graph,
                        const char* field) {
  const std::string name = j.at(field).get<std::string>();
  if (name != graph->name()) {
    fail(ErrorCode::graph_mismatch, "file references graph '" + name +
                                        "' but '" + graph->name() +
                                        "' was supplied");
  }
}

}  // namespace

GeneralizedConnection connection_from_json(const json& j,
                                           const GraphPtr& graph) {
  return guarded(
      [&]() -> GeneralizedConnection {
        require_graph_name(j, graph, "graph");
        const GroupDescriptor descriptor =
            parse_descriptor(j.at("descriptor").get<std::string>());
        std::map<std::string, GroupElement> assignment;
        for (const auto& [edge_id, value] : j.at("assignment").items()) {
          assignment.emplace(
              edge_id, parse_element(descriptor, value.get<std::string>()));
        }
        return GeneralizedConnection(graph, descriptor, assignment);
      },
      "connection file");
}

json connection_to_json(const GeneralizedConnection& conn) {
  json assignment = json::object();
  for (const auto& [edge_id, value] : conn.assignment()) {
    assignment[edge_id] = to_string(value);
  }
  return {{"graph", conn.graph()->name()},
          {"descriptor", to_string(conn.descriptor())},
          {"assignment", assignment}};
}

GeneralizedConnection load_connection(const std::filesystem::path& path,
                                      const GraphPtr& graph) {
  return connection_from_json(load_json_file(path), graph);
}

GaugeTransformation gauge_from_json(const json& j, const GraphPtr& graph) {
  return guarded(
      [&]() -> GaugeTransformation {
        require_graph_name(j, graph, "graph");
        const GroupDescriptor descriptor =
            parse_descriptor(j.at("descriptor").get<std::string>());
        std::map<std::string, GroupElement> values;
        for (const auto& [vertex_id, value] : j.at("values").items()) {
          values.emplace(vertex_id,
                         parse_element(descriptor, value.get<std::string>()));
        }
        return GaugeTransformation(graph, descriptor, values);
      },
      "gauge file");
}

json gauge_to_json(const GaugeTransformation& gauge) {
  json values = json::object();
  for (const auto& [vertex_id, value] : gauge.value_map()) {
    values[vertex_id] = to_string(value);
  }
  return {{"graph", gauge.graph()->name()},
          {"descriptor", to_string(gauge.descriptor())},
          {"values", values}};
}

GaugeTransformation load_gauge(const std::filesystem::path& path,
                               const GraphPtr& graph) {
  return gauge_from_json(load_json_file(path), graph);
}

GroupoidAutomorphism automorphism_from_json(const json& j,
                                            const GraphPtr& graph) {
  return guarded(
      [&]() -> GroupoidAutomorphism {
        require_graph_name(j, graph, "graph");
        std::map<std::string, std::string> vertex_map;
        for (const auto& [from, to] : j.at("vertex_map").items()) {
          vertex_map.emplace(from, to.get<std::string>());
        }
        std::map<std::string, SignedEdge> edge_map;
        for (const auto& [from, to] : j.at("edge_map").items()) {
          edge_map.emplace(from, parse_signed_literal(to.get<std::string>()));
        }
        return GroupoidAutomorphism(graph, std::move(vertex_map),
                                    std::move(edge_map));
      },
      "automorphism file");
}

json automorphism_to_json(const GroupoidAutomorphism& F) {
  json vertex_map = json::object();
  for (const auto& [from, to] : F.vertex_map()) vertex_map[from] = to;
  json edge_map = json::object();
  for (const auto& [from, to] : F.edge_map()) {
    edge_map[from] = signed_literal(to);
  }
  return {{"graph", F.graph()->name()},
          {"vertex_map", vertex_map},
          {"edge_map", edge_map}};
}

GroupoidAutomorphism load_automorphism(const std::filesystem::path& path,
                                       const GraphPtr& graph) {
  return automorphism_from_json(load_json_file(path), graph);
}

Refinement refinement_from_json(const json& j, const GraphPtr& coarse,
                                const GraphPtr& fine) {
  return guarded(
      [&]() -> Refinement {
        require_graph_name(j, coarse, "coarse");
        require_graph_name(j, fine, "fine");
        std::map<std::string, PathWord> expansion;
        for (const auto& [edge_id, literal] : j.at("expansion").items()) {
          expansion.emplace(edge_id,
                            parse_path(fine, literal.get<std::string>()));
        }
        std::map<std::string, std::string> inclusion;
        for (const auto& [from, to] : j.at("vertex_inclusion").items()) {
          inclusion.emplace(from, to.get<std::string>());
        }
        return make_refinement(coarse, fine, std::move(expansion),
                               std::move(inclusion));
      },
      "refinement file");
}

json refinement_to_json(const Refinement& refinement) {
  json expansion = json::object();
  for (const auto& [edge_id, word] : refinement.expansion) {
    expansion[edge_id] = to_literal(word);
  }
  json inclusion = json::object();
  for (const auto& [from, to] : refinement.vertex_inclusion) {
    inclusion[from] = to;
  }
  return {{"coarse", refinement.coarse->name()},
          {"fine", refinement.fine->name()},
          {"expansion", expansion},
          {"vertex_inclusion", inclusion}};
}

Refinement load_refinement(const std::filesystem::path& path,
                           const GraphPtr& coarse, const GraphPtr& fine) {
  return refinement_from_json(load_json_file(path), coarse, fine);
}

SmoothConnectionSpec smooth_spec_from_json(const json& j) {
  return guarded(
      [&]() -> SmoothConnectionSpec {
        SmoothConnectionSpec spec;
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "u1_oneform") {
          spec.kind = SmoothConnectionSpec::Kind::u1_oneform;
          for (const json& cj : j.at("components")) {
            spec.u1_components.push_back(polynomial_from_json(cj));
          }
        } else if (kind == "su2_oneform") {
          spec.kind = SmoothConnectionSpec::Kind::su2_oneform;
          for (const json& cj : j.at("components")) {
            if (cj.size() != 3) {
              fail(ErrorCode::parse_error,
                   "su2 component needs three basis polynomials");
            }
            spec.su2_components.push_back({polynomial_from_json(cj[0]),
                                           polynomial_from_json(cj[1]),
                                           polynomial_from_json(cj[2])});
          }
        } else {
          fail(ErrorCode::parse_error, "unknown one-form kind '" + kind + "'");
        }
        if (j.contains("quadrature_points")) {
          spec.quadrature_points = j.at("quadrature_points").get<int>();
        }
        validate_spec(spec);
        return spec;
      },
      "one-form file");
}

json smooth_spec_to_json(const SmoothConnectionSpec& spec) {
  json components = json::array();
  if (spec.kind == SmoothConnectionSpec::Kind::u1_oneform) {
    for (const Polynomial& p : spec.u1_components) {
      components.push_back(polynomial_to_json(p));
    }
  } else {
    for (const auto& triple : spec.su2_components) {
      components.push_back(json::array({polynomial_to_json(triple[0]),
                                        polynomial_to_json(triple[1]),
                                        polynomial_to_json(triple[2])}));
    }
  }
  return {{"kind", spec.kind == SmoothConnectionSpec::Kind::u1_oneform
                       ? "u1_oneform"
                       : "su2_oneform"},
          {"quadrature_points", spec.quadrature_points},
          {"components", components}};
}

SmoothConnectionSpec load_smooth_spec(const std::filesystem::path& path) {
  return smooth_spec_from_json(load_json_file(path));
}

}  // namespace genconn
