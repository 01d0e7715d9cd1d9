#include "genconn/groupoid.hpp"

#include <cctype>
#include <cmath>

namespace genconn {

namespace {

bool valid_id(const std::string& id) {
  if (id.empty()) return false;
  for (const char c : id) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.' &&
        c != '-') {
      return false;
    }
  }
  return true;
}

double point_distance(const std::vector<double>& a,
                      const std::vector<double>& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

}  // namespace

EmbeddedGraph::EmbeddedGraph(std::string name, std::vector<Vertex> vertices,
                             std::vector<OrientedEdge> edges)
    : name_(std::move(name)),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)) {
  if (!valid_id(name_)) {
    fail(ErrorCode::invalid_argument, "graph name '" + name_ + "' is invalid");
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Vertex& v = vertices_[i];
    if (!valid_id(v.id)) {
      fail(ErrorCode::invalid_argument, "vertex id '" + v.id + "' is invalid");
    }
    if (!vertex_index_.emplace(v.id, i).second) {
      fail(ErrorCode::invalid_argument, "duplicate vertex id '" + v.id + "'");
    }
    if (v.position) {
      if (v.position->empty()) {
        fail(ErrorCode::invalid_argument,
             "vertex '" + v.id + "' has an empty position");
      }
      const int dim = static_cast<int>(v.position->size());
      if (dimension_ && *dimension_ != dim) {
        fail(ErrorCode::invalid_argument,
             "vertex positions have mixed dimensions");
      }
      dimension_ = dim;
    }
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const OrientedEdge& e = edges_[i];
    if (!valid_id(e.id)) {
      fail(ErrorCode::invalid_argument, "edge id '" + e.id + "' is invalid");
    }
    if (!edge_index_.emplace(e.id, i).second) {
      fail(ErrorCode::invalid_argument, "duplicate edge id '" + e.id + "'");
    }
    if (!vertex_index_.count(e.source) || !vertex_index_.count(e.target)) {
      fail(ErrorCode::invalid_argument,
           "edge '" + e.id + "' references a missing vertex");
    }
    if (e.polyline) {
      if (e.polyline->size() < 2) {
        fail(ErrorCode::invalid_argument,
             "edge '" + e.id + "' polyline needs at least two points");
      }
      for (const auto& point : *e.polyline) {
        if (!dimension_ || static_cast<int>(point.size()) != *dimension_) {
          fail(ErrorCode::invalid_argument,
               "edge '" + e.id + "' polyline dimension mismatch");
        }
      }
      const auto& src_pos = vertex(e.source).position;
      const auto& dst_pos = vertex(e.target).position;
      if (!src_pos || !dst_pos) {
        fail(ErrorCode::invalid_argument,
             "edge '" + e.id + "' has geometry but its endpoints have no positions");
      }
      if (point_distance(e.polyline->front(), *src_pos) > 1e-9 ||
          point_distance(e.polyline->back(), *dst_pos) > 1e-9) {
        fail(ErrorCode::invalid_argument,
             "edge '" + e.id + "' polyline endpoints do not match vertex positions");
      }
    }
  }
}

bool EmbeddedGraph::has_vertex(const std::string& id) const {
  return vertex_index_.count(id) > 0;
}

bool EmbeddedGraph::has_edge(const std::string& id) const {
  return edge_index_.count(id) > 0;
}

const Vertex& EmbeddedGraph::vertex(const std::string& id) const {
  const auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) {
    fail(ErrorCode::unknown_vertex, "vertex '" + id + "' not in graph '" + name_ + "'");
  }
  return vertices_[it->second];
}

const OrientedEdge& EmbeddedGraph::edge(const std::string& id) const {
  const auto it = edge_index_.find(id);
  if (it == edge_index_.end()) {
    fail(ErrorCode::unknown_generator,
         "edge '" + id + "' not in graph '" + name_ + "'");
  }
  return edges_[it->second];
}

std::size_t EmbeddedGraph::edge_index(const std::string& id) const {
  const auto it = edge_index_.find(id);
  if (it == edge_index_.end()) {
    fail(ErrorCode::unknown_generator,
         "edge '" + id + "' not in graph '" + name_ + "'");
  }
  return it->second;
}

std::size_t EmbeddedGraph::vertex_index(const std::string& id) const {
  const auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) {
    fail(ErrorCode::unknown_vertex, "vertex '" + id + "' not in graph '" + name_ + "'");
  }
  return it->second;
}

const std::string& letter_source(const EmbeddedGraph& g, const SignedEdge& l) {
  const OrientedEdge& e = g.edge(l.edge);
  return l.sign == EdgeSign::forward ? e.source : e.target;
}

const std::string& letter_target(const EmbeddedGraph& g, const SignedEdge& l) {
  const OrientedEdge& e = g.edge(l.edge);
  return l.sign == EdgeSign::forward ? e.target : e.source;
}

PathWord PathWord::identity(GraphPtr graph, const std::string& base) {
  return reduce(std::move(graph), {}, base);
}

PathWord reduce(GraphPtr graph, std::vector<SignedEdge> raw,
                std::optional<std::string> base) {
  if (!graph) fail(ErrorCode::invalid_argument, "null graph");
  // Validate generators and the chain before touching the word.
  for (const SignedEdge& letter : raw) {
    graph->edge(letter.edge);  // throws unknown-generator
  }
  for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
    if (letter_target(*graph, raw[i]) != letter_source(*graph, raw[i + 1])) {
      fail(ErrorCode::broken_path,
           "letters " + std::to_string(i) + " and " + std::to_string(i + 1) +
               " do not chain");
    }
  }
  std::string source;
  if (raw.empty()) {
    if (!base) {
      fail(ErrorCode::invalid_argument, "empty word needs a base vertex");
    }
    graph->vertex(*base);  // throws unknown-vertex
    source = *base;
  } else {
    source = letter_source(*graph, raw.front());
    if (base && *base != source) {
      fail(ErrorCode::broken_path, "base vertex '" + *base +
                                       "' does not match the word start '" +
                                       source + "'");
    }
  }
  const std::string target =
      raw.empty() ? source : letter_target(*graph, raw.back());

  // Single left-to-right pass with a stack; free-groupoid confluence makes
  // the result independent of cancellation order.
  std::vector<SignedEdge> reduced;
  reduced.reserve(raw.size());
  for (SignedEdge& letter : raw) {
    if (!reduced.empty() && reduced.back().edge == letter.edge &&
        reduced.back().sign != letter.sign) {
      reduced.pop_back();
    } else {
      reduced.push_back(std::move(letter));
    }
  }
  return PathWord(std::move(graph), std::move(reduced), std::move(source),
                  std::move(target));
}

PathWord compose(const PathWord& second, const PathWord& first) {
  if (second.graph() != first.graph()) {
    fail(ErrorCode::graph_mismatch, "paths live on different graphs");
  }
  if (second.source() != first.target()) {
    fail(ErrorCode::non_composable,
         "cannot compose: second path starts at '" + second.source() +
             "' but first path ends at '" + first.target() + "'");
  }
  std::vector<SignedEdge> letters = first.letters();
  letters.insert(letters.end(), second.letters().begin(),
                 second.letters().end());
  return reduce(first.graph(), std::move(letters), first.source());
}

PathWord inverse_path(const PathWord& p) {
  std::vector<SignedEdge> letters;
  letters.reserve(p.letters().size());
  for (auto it = p.letters().rbegin(); it != p.letters().rend(); ++it) {
    letters.push_back(flipped(*it));
  }
  return reduce(p.graph(), std::move(letters), p.target());
}

std::string to_literal(const PathWord& p) {
  if (p.is_identity()) return "@" + p.source();
  std::string out;
  for (std::size_t i = 0; i < p.letters().size(); ++i) {
    if (i) out += ',';
    out += p.letters()[i].edge;
    if (p.letters()[i].sign == EdgeSign::reverse) out += "^-1";
  }
  return out;
}

std::vector<SignedEdge> parse_raw_letters(std::string_view literal) {
  std::vector<SignedEdge> letters;
  std::size_t start = 0;
  while (start <= literal.size()) {
    std::size_t comma = literal.find(',', start);
    if (comma == std::string_view::npos) comma = literal.size();
    std::string token{literal.substr(start, comma - start)};
    // trim surrounding blanks
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) {
      token.erase(token.begin());
    }
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) {
      token.pop_back();
    }
    if (token.empty()) {
      fail(ErrorCode::parse_error, "empty letter in path literal");
    }
    SignedEdge letter;
    if (token.size() > 3 && token.substr(token.size() - 3) == "^-1") {
      letter.edge = token.substr(0, token.size() - 3);
      letter.sign = EdgeSign::reverse;
    } else {
      letter.edge = token;
      letter.sign = EdgeSign::forward;
    }
    letters.push_back(std::move(letter));
    if (comma == literal.size()) break;
    start = comma + 1;
  }
  return letters;
}

PathWord parse_path(GraphPtr graph, std::string_view literal) {
  if (literal.empty()) {
    fail(ErrorCode::parse_error, "empty path literal");
  }
  if (literal.front() == '@') {
    const std::string base{literal.substr(1)};
    if (base.empty()) {
      fail(ErrorCode::parse_error, "identity literal needs a base vertex");
    }
    if (!graph->has_vertex(base)) {
      fail(ErrorCode::unknown_vertex,
           "vertex '" + base + "' not in graph '" + graph->name() + "'");
    }
    return PathWord::identity(std::move(graph), base);
  }
  return reduce(std::move(graph), parse_raw_letters(literal));
}

}  // namespace genconn
