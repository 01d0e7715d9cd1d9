#include "genconn/symmetry.hpp"

#include <set>
#include <string>

namespace genconn {

GaugeTransformation::GaugeTransformation(GraphPtr graph,
                                         GroupDescriptor descriptor,
                                         std::vector<GroupElement> values)
    : graph_(std::move(graph)),
      descriptor_(descriptor),
      values_(std::move(values)) {
  if (!graph_) fail(ErrorCode::invalid_argument, "null graph");
  if (values_.size() != graph_->vertices().size()) {
    fail(ErrorCode::invalid_argument,
         "gauge transformation must assign a value to every vertex");
  }
  for (const GroupElement& g : values_) {
    if (!(g.descriptor == descriptor_)) {
      fail(ErrorCode::incompatible_group,
           "gauge value does not match the descriptor");
    }
  }
}

GaugeTransformation::GaugeTransformation(
    GraphPtr graph, GroupDescriptor descriptor,
    const std::map<std::string, GroupElement>& values)
    : graph_(std::move(graph)), descriptor_(descriptor) {
  if (!graph_) fail(ErrorCode::invalid_argument, "null graph");
  if (values.size() != graph_->vertices().size()) {
    fail(ErrorCode::invalid_argument,
         "gauge transformation must assign a value to every vertex");
  }
  values_.reserve(values.size());
  for (const Vertex& v : graph_->vertices()) {
    const auto it = values.find(v.id);
    if (it == values.end()) {
      fail(ErrorCode::invalid_argument, "vertex '" + v.id + "' has no gauge value");
    }
    if (!(it->second.descriptor == descriptor_)) {
      fail(ErrorCode::incompatible_group,
           "gauge value for '" + v.id + "' does not match the descriptor");
    }
    values_.push_back(it->second);
  }
}

const GroupElement& GaugeTransformation::value(
    const std::string& vertex_id) const {
  return values_[graph_->vertex_index(vertex_id)];
}

std::map<std::string, GroupElement> GaugeTransformation::value_map() const {
  std::map<std::string, GroupElement> out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    out.emplace(graph_->vertices()[i].id, values_[i]);
  }
  return out;
}

GaugeTransformation identity_gauge(GraphPtr graph,
                                   const GroupDescriptor& descriptor) {
  std::vector<GroupElement> values(graph->vertices().size(),
                                   identity(descriptor));
  return GaugeTransformation(std::move(graph), descriptor, std::move(values));
}

void enumerate_gauge_transformations(
    const GraphPtr& graph, const GroupDescriptor& descriptor,
    const std::function<void(const GaugeTransformation&)>& visit) {
  const std::vector<GroupElement> elements = enumerate_elements(descriptor);
  const std::size_t vertex_count = graph->vertices().size();
  double total = 1.0;
  for (std::size_t i = 0; i < vertex_count; ++i) {
    total *= static_cast<double>(elements.size());
  }
  if (total > 1e7) {
    fail(ErrorCode::budget_exceeded,
         "gauge enumeration exceeds 10^7 transformations");
  }
  std::vector<std::size_t> odometer(vertex_count, 0);
  for (;;) {
    std::vector<GroupElement> values;
    values.reserve(vertex_count);
    for (const std::size_t index : odometer) values.push_back(elements[index]);
    visit(GaugeTransformation(graph, descriptor, std::move(values)));
    std::size_t k = 0;
    while (k < vertex_count) {
      if (++odometer[k] < elements.size()) break;
      odometer[k] = 0;
      ++k;
    }
    if (k == vertex_count) break;
  }
}

GaugeTransformation compose_gauge(const GaugeTransformation& g2,
                                  const GaugeTransformation& g1) {
  if (g2.graph() != g1.graph()) {
    fail(ErrorCode::graph_mismatch, "gauge transformations on different graphs");
  }
  if (!(g2.descriptor() == g1.descriptor())) {
    fail(ErrorCode::incompatible_group,
         "gauge transformations with different groups");
  }
  std::vector<GroupElement> values;
  values.reserve(g1.values().size());
  for (std::size_t i = 0; i < g1.values().size(); ++i) {
    values.push_back(multiply(g2.values()[i], g1.values()[i]));
  }
  return GaugeTransformation(g1.graph(), g1.descriptor(), std::move(values));
}

GaugeTransformation inverse_gauge(const GaugeTransformation& g) {
  std::vector<GroupElement> values;
  values.reserve(g.values().size());
  for (const GroupElement& v : g.values()) values.push_back(inverse(v));
  return GaugeTransformation(g.graph(), g.descriptor(), std::move(values));
}

GeneralizedConnection gauge_act(const GaugeTransformation& g,
                                const GeneralizedConnection& conn) {
  if (g.graph() != conn.graph()) {
    fail(ErrorCode::graph_mismatch,
         "gauge transformation and connection on different graphs");
  }
  if (!(g.descriptor() == conn.descriptor())) {
    fail(ErrorCode::incompatible_group,
         "gauge transformation and connection with different groups");
  }
  const EmbeddedGraph& graph = *conn.graph();
  std::vector<GroupElement> values;
  values.reserve(conn.values().size());
  for (std::size_t i = 0; i < graph.edges().size(); ++i) {
    const OrientedEdge& e = graph.edges()[i];
    values.push_back(multiply(multiply(g.value(e.target), conn.values()[i]),
                              inverse(g.value(e.source))));
  }
  return GeneralizedConnection(conn.graph(), conn.descriptor(),
                               std::move(values));
}

double wilson_loop(const GeneralizedConnection& conn, const PathWord& p) {
  if (!p.is_closed()) {
    fail(ErrorCode::not_closed, "wilson loop needs a closed path; got " +
                                    p.source() + " -> " + p.target());
  }
  return character(holonomy(conn, p));
}

GroupoidAutomorphism::GroupoidAutomorphism(
    GraphPtr graph, std::map<std::string, std::string> vertex_map,
    std::map<std::string, SignedEdge> edge_map)
    : graph_(std::move(graph)),
      vertex_map_(std::move(vertex_map)),
      edge_map_(std::move(edge_map)) {
  if (!graph_) fail(ErrorCode::invalid_argument, "null graph");
  if (vertex_map_.size() != graph_->vertices().size()) {
    fail(ErrorCode::invalid_argument, "vertex map must cover every vertex");
  }
  std::set<std::string> vertex_images;
  for (const auto& [from, to] : vertex_map_) {
    graph_->vertex(from);
    graph_->vertex(to);
    if (!vertex_images.insert(to).second) {
      fail(ErrorCode::invalid_argument, "vertex map is not a bijection");
    }
  }
  if (edge_map_.size() != graph_->edges().size()) {
    fail(ErrorCode::invalid_argument, "edge map must cover every edge");
  }
  std::set<std::string> edge_images;
  for (const auto& [from, image] : edge_map_) {
    const OrientedEdge& e = graph_->edge(from);
    graph_->edge(image.edge);
    if (!edge_images.insert(image.edge).second) {
      fail(ErrorCode::invalid_argument, "edge map is not a bijection");
    }
    // Endpoint compatibility makes the letter-wise extension a functor.
    const std::string& mapped_source = vertex_map_.at(e.source);
    const std::string& mapped_target = vertex_map_.at(e.target);
    if (letter_source(*graph_, image) != mapped_source ||
        letter_target(*graph_, image) != mapped_target) {
      fail(ErrorCode::invalid_argument,
           "edge map image of '" + from + "' does not respect endpoints");
    }
  }
}

GroupoidAutomorphism GroupoidAutomorphism::identity(GraphPtr graph) {
  std::map<std::string, std::string> vmap;
  std::map<std::string, SignedEdge> emap;
  for (const Vertex& v : graph->vertices()) vmap.emplace(v.id, v.id);
  for (const OrientedEdge& e : graph->edges()) {
    emap.emplace(e.id, SignedEdge{e.id, EdgeSign::forward});
  }
  return GroupoidAutomorphism(std::move(graph), std::move(vmap),
                              std::move(emap));
}

const std::string& GroupoidAutomorphism::apply(
    const std::string& vertex_id) const {
  const auto it = vertex_map_.find(vertex_id);
  if (it == vertex_map_.end()) {
    fail(ErrorCode::unknown_vertex, "vertex '" + vertex_id + "' not in map");
  }
  return it->second;
}

SignedEdge GroupoidAutomorphism::apply(const SignedEdge& letter) const {
  const auto it = edge_map_.find(letter.edge);
  if (it == edge_map_.end()) {
    fail(ErrorCode::unknown_generator, "edge '" + letter.edge + "' not in map");
  }
  SignedEdge image = it->second;
  if (letter.sign == EdgeSign::reverse) image = flipped(image);
  return image;
}

GroupoidAutomorphism compose_auto(const GroupoidAutomorphism& f2,
                                  const GroupoidAutomorphism& f1) {
  if (f2.graph() != f1.graph()) {
    fail(ErrorCode::graph_mismatch, "automorphisms on different graphs");
  }
  std::map<std::string, std::string> vmap;
  for (const auto& [from, mid] : f1.vertex_map()) {
    vmap.emplace(from, f2.apply(mid));
  }
  std::map<std::string, SignedEdge> emap;
  for (const auto& [from, mid] : f1.edge_map()) {
    emap.emplace(from, f2.apply(mid));
  }
  return GroupoidAutomorphism(f1.graph(), std::move(vmap), std::move(emap));
}

GroupoidAutomorphism inverse_auto(const GroupoidAutomorphism& f) {
  std::map<std::string, std::string> vmap;
  for (const auto& [from, to] : f.vertex_map()) vmap.emplace(to, from);
  std::map<std::string, SignedEdge> emap;
  for (const auto& [from, image] : f.edge_map()) {
    // F(e) = f^s implies F^-1(f) = e^s.
    emap.emplace(image.edge, SignedEdge{from, image.sign});
  }
  return GroupoidAutomorphism(f.graph(), std::move(vmap), std::move(emap));
}

PathWord apply_to_path(const GroupoidAutomorphism& f, const PathWord& p) {
  if (f.graph() != p.graph()) {
    fail(ErrorCode::graph_mismatch, "path lives on a different graph than the automorphism");
  }
  if (p.is_identity()) {
    return PathWord::identity(p.graph(), f.apply(p.source()));
  }
  std::vector<SignedEdge> letters;
  letters.reserve(p.letters().size());
  for (const SignedEdge& letter : p.letters()) {
    letters.push_back(f.apply(letter));
  }
  return reduce(p.graph(), std::move(letters));
}

GeneralizedConnection automorphism_act(const GroupoidAutomorphism& f,
                                       const GeneralizedConnection& conn) {
  if (f.graph() != conn.graph()) {
    fail(ErrorCode::graph_mismatch,
         "automorphism and connection on different graphs");
  }
  const GroupoidAutomorphism f_inv = inverse_auto(f);
  const EmbeddedGraph& graph = *conn.graph();
  std::vector<GroupElement> values;
  values.reserve(graph.edges().size());
  for (const OrientedEdge& e : graph.edges()) {
    const SignedEdge preimage = f_inv.apply(SignedEdge{e.id, EdgeSign::forward});
    const GroupElement& g = conn.value(preimage.edge);
    values.push_back(preimage.sign == EdgeSign::forward ? g : inverse(g));
  }
  return GeneralizedConnection(conn.graph(), conn.descriptor(),
                               std::move(values));
}

}  // namespace genconn
