#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "genconn/errors.hpp"

namespace genconn {

struct Vertex {
  std::string id;
  std::optional<std::vector<double>> position;
};

struct OrientedEdge {
  std::string id;
  std::string source;
  std::string target;
  // Polyline through the ambient space; first/last points must coincide with
  // the endpoint vertex positions. Needed only by the smooth discretizer.
  std::optional<std::vector<std::vector<double>>> polyline;
};

// Finite generator set of a subgroupoid of the path groupoid. Immutable
// after construction; all values referencing it hold a shared pointer.
class EmbeddedGraph {
 public:
  EmbeddedGraph(std::string name, std::vector<Vertex> vertices,
                std::vector<OrientedEdge> edges);

  const std::string& name() const { return name_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<OrientedEdge>& edges() const { return edges_; }

  bool has_vertex(const std::string& id) const;
  bool has_edge(const std::string& id) const;
  const Vertex& vertex(const std::string& id) const;
  const OrientedEdge& edge(const std::string& id) const;
  std::size_t edge_index(const std::string& id) const;
  std::size_t vertex_index(const std::string& id) const;

  // Coordinate dimension when vertex positions are present.
  std::optional<int> dimension() const { return dimension_; }

 private:
  std::string name_;
  std::vector<Vertex> vertices_;
  std::vector<OrientedEdge> edges_;
  std::unordered_map<std::string, std::size_t> vertex_index_;
  std::unordered_map<std::string, std::size_t> edge_index_;
  std::optional<int> dimension_;
};

using GraphPtr = std::shared_ptr<const EmbeddedGraph>;

enum class EdgeSign { forward, reverse };

struct SignedEdge {
  std::string edge;
  EdgeSign sign = EdgeSign::forward;

  friend bool operator==(const SignedEdge& a, const SignedEdge& b) {
    return a.edge == b.edge && a.sign == b.sign;
  }
};

inline SignedEdge flipped(SignedEdge letter) {
  letter.sign = letter.sign == EdgeSign::forward ? EdgeSign::reverse
                                                 : EdgeSign::forward;
  return letter;
}

// Start/end vertex of a single signed letter.
const std::string& letter_source(const EmbeddedGraph& g, const SignedEdge& l);
const std::string& letter_target(const EmbeddedGraph& g, const SignedEdge& l);

// Reduced signed-edge word: an arrow of the free groupoid on the graph.
// Instances are only created through reduce()/identity(), so the REDUCED and
// CHAINED invariants always hold.
class PathWord {
 public:
  static PathWord identity(GraphPtr graph, const std::string& base);

  const GraphPtr& graph() const { return graph_; }
  const std::vector<SignedEdge>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  const std::string& source() const { return source_; }
  const std::string& target() const { return target_; }
  bool is_closed() const { return source_ == target_; }

  friend bool operator==(const PathWord& a, const PathWord& b) {
    return a.graph_ == b.graph_ && a.letters_ == b.letters_ &&
           a.source_ == b.source_;
  }

 private:
  PathWord(GraphPtr graph, std::vector<SignedEdge> letters, std::string source,
           std::string target)
      : graph_(std::move(graph)),
        letters_(std::move(letters)),
        source_(std::move(source)),
        target_(std::move(target)) {}

  friend PathWord reduce(GraphPtr, std::vector<SignedEdge>,
                         std::optional<std::string>);

  GraphPtr graph_;
  std::vector<SignedEdge> letters_;
  std::string source_;
  std::string target_;
};

// Cancels adjacent inverse pairs of a chained raw word; the result is the
// unique reduced representative. base is required when the word is empty and
// must match the first letter's start when both are given.
PathWord reduce(GraphPtr graph, std::vector<SignedEdge> raw,
                std::optional<std::string> base = std::nullopt);

// compose(second, first) traverses first, then second.
PathWord compose(const PathWord& second, const PathWord& first);

PathWord inverse_path(const PathWord& p);

inline const std::string& source(const PathWord& p) { return p.source(); }
inline const std::string& target(const PathWord& p) { return p.target(); }

// Literal syntax: comma-separated signed edge ids ("e1,e2^-1"), identity as
// "@vertex".
std::string to_literal(const PathWord& p);
std::vector<SignedEdge> parse_raw_letters(std::string_view literal);
PathWord parse_path(GraphPtr graph, std::string_view literal);

}  // namespace genconn
