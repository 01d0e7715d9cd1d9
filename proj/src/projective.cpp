#include "genconn/projective.hpp"

#include <cmath>
#include <set>

namespace genconn {

namespace {

double point_distance(const std::vector<double>& a,
                      const std::vector<double>& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

std::vector<double> lerp(const std::vector<double>& a,
                         const std::vector<double>& b, double t) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + t * (b[i] - a[i]);
  return out;
}

struct PolylineSplit {
  std::vector<std::vector<double>> first;
  std::vector<std::vector<double>> second;
  std::vector<double> point;
};

// Split at the given arc-length fraction.
PolylineSplit split_at_fraction(const std::vector<std::vector<double>>& line,
                                double fraction) {
  std::vector<double> lengths(line.size() - 1);
  double total = 0.0;
  for (std::size_t s = 0; s + 1 < line.size(); ++s) {
    lengths[s] = point_distance(line[s], line[s + 1]);
    total += lengths[s];
  }
  if (total <= 0.0) {
    fail(ErrorCode::invalid_argument, "polyline has zero length");
  }
  double remaining = fraction * total;
  std::size_t seg = 0;
  while (seg + 1 < lengths.size() && remaining > lengths[seg]) {
    remaining -= lengths[seg];
    ++seg;
  }
  const double t = lengths[seg] > 0.0 ? remaining / lengths[seg] : 0.0;
  PolylineSplit split;
  split.point = lerp(line[seg], line[seg + 1], t);
  split.first.assign(line.begin(), line.begin() + seg + 1);
  split.first.push_back(split.point);
  split.second.push_back(split.point);
  split.second.insert(split.second.end(), line.begin() + seg + 1, line.end());
  return split;
}

// Split at an explicit point that must lie on the polyline.
PolylineSplit split_at_point(const std::vector<std::vector<double>>& line,
                             const std::vector<double>& point) {
  double best = 1e300;
  std::size_t best_seg = 0;
  double best_t = 0.0;
  for (std::size_t s = 0; s + 1 < line.size(); ++s) {
    const auto& a = line[s];
    const auto& b = line[s + 1];
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      num += (point[k] - a[k]) * (b[k] - a[k]);
      den += (b[k] - a[k]) * (b[k] - a[k]);
    }
    const double t = den > 0.0 ? std::clamp(num / den, 0.0, 1.0) : 0.0;
    const double d = point_distance(point, lerp(a, b, t));
    if (d < best) {
      best = d;
      best_seg = s;
      best_t = t;
    }
  }
  if (best > 1e-9) {
    fail(ErrorCode::invalid_argument,
         "new vertex position does not lie on the edge polyline");
  }
  PolylineSplit split;
  split.point = lerp(line[best_seg], line[best_seg + 1], best_t);
  split.first.assign(line.begin(), line.begin() + best_seg + 1);
  split.first.push_back(split.point);
  split.second.push_back(split.point);
  split.second.insert(split.second.end(), line.begin() + best_seg + 1,
                      line.end());
  return split;
}

}  // namespace

Refinement make_refinement(GraphPtr coarse, GraphPtr fine,
                           std::map<std::string, PathWord> expansion,
                           std::map<std::string, std::string> vertex_inclusion) {
  if (!coarse || !fine) fail(ErrorCode::invalid_argument, "null graph");
  if (vertex_inclusion.size() != coarse->vertices().size()) {
    fail(ErrorCode::invalid_argument,
         "vertex inclusion must cover every coarse vertex");
  }
  std::set<std::string> images;
  for (const auto& [from, to] : vertex_inclusion) {
    coarse->vertex(from);
    fine->vertex(to);
    if (!images.insert(to).second) {
      fail(ErrorCode::invalid_argument, "vertex inclusion is not injective");
    }
  }
  if (expansion.size() != coarse->edges().size()) {
    fail(ErrorCode::invalid_argument,
         "expansion must cover every coarse edge");
  }
  for (const auto& [edge_id, word] : expansion) {
    const OrientedEdge& e = coarse->edge(edge_id);
    if (word.graph() != fine) {
      fail(ErrorCode::graph_mismatch,
           "expansion of '" + edge_id + "' does not live on the fine graph");
    }
    if (word.is_identity()) {
      fail(ErrorCode::invalid_argument,
           "expansion of '" + edge_id + "' is an identity word");
    }
    if (word.source() != vertex_inclusion.at(e.source) ||
        word.target() != vertex_inclusion.at(e.target)) {
      fail(ErrorCode::invalid_argument,
           "expansion of '" + edge_id + "' has wrong endpoints");
    }
  }
  return Refinement{std::move(coarse), std::move(fine), std::move(expansion),
                    std::move(vertex_inclusion)};
}

std::pair<GraphPtr, Refinement> subdivide_edge(const GraphPtr& graph,
                                               const std::string& edge_id,
                                               const SubdivisionSpec& spec) {
  const OrientedEdge& split_edge = graph->edge(edge_id);
  if (spec.new_vertex_id.empty()) {
    fail(ErrorCode::invalid_argument, "subdivision needs a new vertex id");
  }
  if (graph->has_vertex(spec.new_vertex_id)) {
    fail(ErrorCode::invalid_argument,
         "vertex id '" + spec.new_vertex_id + "' already exists");
  }
  if (!spec.position && !(spec.fraction > 0.0 && spec.fraction < 1.0)) {
    fail(ErrorCode::invalid_argument, "split fraction must lie in (0, 1)");
  }
  const std::string first_id =
      spec.first_edge_id.empty() ? edge_id + "_a" : spec.first_edge_id;
  const std::string second_id =
      spec.second_edge_id.empty() ? edge_id + "_b" : spec.second_edge_id;
  if (graph->has_edge(first_id) || graph->has_edge(second_id) ||
      first_id == second_id) {
    fail(ErrorCode::invalid_argument, "replacement edge ids collide");
  }

  Vertex mid;
  mid.id = spec.new_vertex_id;
  OrientedEdge first{first_id, split_edge.source, mid.id, std::nullopt};
  OrientedEdge second{second_id, mid.id, split_edge.target, std::nullopt};
  if (split_edge.polyline) {
    const PolylineSplit split =
        spec.position ? split_at_point(*split_edge.polyline, *spec.position)
                      : split_at_fraction(*split_edge.polyline, spec.fraction);
    mid.position = split.point;
    first.polyline = split.first;
    second.polyline = split.second;
  } else if (spec.position) {
    mid.position = spec.position;
  }

  std::vector<Vertex> vertices = graph->vertices();
  vertices.push_back(mid);
  std::vector<OrientedEdge> edges;
  edges.reserve(graph->edges().size() + 1);
  for (const OrientedEdge& e : graph->edges()) {
    if (e.id == edge_id) {
      edges.push_back(first);
      edges.push_back(second);
    } else {
      edges.push_back(e);
    }
  }
  auto fine = std::make_shared<const EmbeddedGraph>(
      graph->name() + ".split." + spec.new_vertex_id, std::move(vertices),
      std::move(edges));

  std::map<std::string, PathWord> expansion;
  for (const OrientedEdge& e : graph->edges()) {
    if (e.id == edge_id) {
      expansion.emplace(
          e.id, reduce(fine,
                       {SignedEdge{first_id, EdgeSign::forward},
                        SignedEdge{second_id, EdgeSign::forward}}));
    } else {
      expansion.emplace(e.id,
                        reduce(fine, {SignedEdge{e.id, EdgeSign::forward}}));
    }
  }
  std::map<std::string, std::string> inclusion;
  for (const Vertex& v : graph->vertices()) inclusion.emplace(v.id, v.id);
  return {fine, make_refinement(graph, fine, std::move(expansion),
                                std::move(inclusion))};
}

std::pair<GraphPtr, Refinement> add_edges(const GraphPtr& graph,
                                          std::vector<OrientedEdge> extra,
                                          std::vector<Vertex> extra_vertices) {
  if (extra.empty()) {
    fail(ErrorCode::invalid_argument, "edge addition needs at least one edge");
  }
  std::vector<Vertex> vertices = graph->vertices();
  vertices.insert(vertices.end(), extra_vertices.begin(), extra_vertices.end());
  std::vector<OrientedEdge> edges = graph->edges();
  std::string suffix;
  for (const OrientedEdge& e : extra) {
    suffix += "." + e.id;
    edges.push_back(e);
  }
  auto fine = std::make_shared<const EmbeddedGraph>(
      graph->name() + ".plus" + suffix, std::move(vertices), std::move(edges));
  std::map<std::string, PathWord> expansion;
  for (const OrientedEdge& e : graph->edges()) {
    expansion.emplace(e.id, reduce(fine, {SignedEdge{e.id, EdgeSign::forward}}));
  }
  std::map<std::string, std::string> inclusion;
  for (const Vertex& v : graph->vertices()) inclusion.emplace(v.id, v.id);
  return {fine, make_refinement(graph, fine, std::move(expansion),
                                std::move(inclusion))};
}

Refinement compose_refinements(const Refinement& coarse_to_mid,
                               const Refinement& mid_to_fine) {
  if (coarse_to_mid.fine != mid_to_fine.coarse) {
    fail(ErrorCode::graph_mismatch,
         "refinements do not chain: mid graphs differ");
  }
  std::map<std::string, PathWord> expansion;
  for (const auto& [edge_id, mid_word] : coarse_to_mid.expansion) {
    std::vector<SignedEdge> letters;
    for (const SignedEdge& letter : mid_word.letters()) {
      const PathWord& fine_word = mid_to_fine.expansion.at(letter.edge);
      const PathWord oriented = letter.sign == EdgeSign::forward
                                    ? fine_word
                                    : inverse_path(fine_word);
      letters.insert(letters.end(), oriented.letters().begin(),
                     oriented.letters().end());
    }
    expansion.emplace(edge_id, reduce(mid_to_fine.fine, std::move(letters)));
  }
  std::map<std::string, std::string> inclusion;
  for (const auto& [from, mid] : coarse_to_mid.vertex_inclusion) {
    inclusion.emplace(from, mid_to_fine.vertex_inclusion.at(mid));
  }
  return make_refinement(coarse_to_mid.coarse, mid_to_fine.fine,
                         std::move(expansion), std::move(inclusion));
}

GeneralizedConnection restrict_connection(
    const Refinement& refinement, const GeneralizedConnection& fine_conn) {
  if (fine_conn.graph() != refinement.fine) {
    fail(ErrorCode::graph_mismatch,
         "connection does not live on the refinement's fine graph");
  }
  std::vector<GroupElement> values;
  values.reserve(refinement.coarse->edges().size());
  for (const OrientedEdge& e : refinement.coarse->edges()) {
    values.push_back(holonomy(fine_conn, refinement.expansion.at(e.id)));
  }
  return GeneralizedConnection(refinement.coarse, fine_conn.descriptor(),
                               std::move(values));
}

PathWord expand_path(const Refinement& refinement, const PathWord& coarse_path) {
  if (coarse_path.graph() != refinement.coarse) {
    fail(ErrorCode::graph_mismatch,
         "path does not live on the refinement's coarse graph");
  }
  if (coarse_path.is_identity()) {
    return PathWord::identity(
        refinement.fine, refinement.vertex_inclusion.at(coarse_path.source()));
  }
  std::vector<SignedEdge> letters;
  for (const SignedEdge& letter : coarse_path.letters()) {
    const PathWord& word = refinement.expansion.at(letter.edge);
    const PathWord oriented =
        letter.sign == EdgeSign::forward ? word : inverse_path(word);
    letters.insert(letters.end(), oriented.letters().begin(),
                   oriented.letters().end());
  }
  return reduce(refinement.fine, std::move(letters));
}

GeneralizedConnection random_section(const Refinement& refinement,
                                     const GeneralizedConnection& coarse_conn,
                                     RandomStream& rng) {
  if (coarse_conn.graph() != refinement.coarse) {
    fail(ErrorCode::graph_mismatch,
         "connection does not live on the refinement's coarse graph");
  }
  const GroupDescriptor& descriptor = coarse_conn.descriptor();
  // Expansion supports must not overlap so each word can be solved
  // independently.
  std::set<std::string> support;
  for (const auto& [edge_id, word] : refinement.expansion) {
    for (const SignedEdge& letter : word.letters()) {
      if (!support.insert(letter.edge).second) {
        fail(ErrorCode::invalid_argument,
             "expansion supports overlap on fine edge '" + letter.edge +
                 "'; no canonical section");
      }
    }
  }

  std::map<std::string, GroupElement> assignment;
  // Solve each expansion word: sample all letters but the last, then solve
  // the last letter so the fine holonomy reproduces the coarse value.
  for (const OrientedEdge& e : refinement.coarse->edges()) {
    const PathWord& word = refinement.expansion.at(e.id);
    const auto& letters = word.letters();
    GroupElement partial = identity(descriptor);
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      const GroupElement sample = haar_sample(descriptor, rng);
      assignment.emplace(letters[i].edge, sample);
      const GroupElement oriented =
          letters[i].sign == EdgeSign::forward ? sample : inverse(sample);
      partial = multiply(oriented, partial);
    }
    const GroupElement last =
        multiply(coarse_conn.value(e.id), inverse(partial));
    assignment.emplace(letters.back().edge,
                       letters.back().sign == EdgeSign::forward ? last
                                                                : inverse(last));
  }
  // Haar-sample the fine edges outside every expansion support.
  for (const OrientedEdge& e : refinement.fine->edges()) {
    if (!assignment.count(e.id)) {
      assignment.emplace(e.id, haar_sample(descriptor, rng));
    }
  }
  return GeneralizedConnection(refinement.fine, descriptor, assignment);
}

ConsistencyReport check_consistency(const Refinement& refinement,
                                    const GeneralizedConnection& fine_conn,
                                    std::span<const PathWord> coarse_paths) {
  const GeneralizedConnection coarse_conn =
      restrict_connection(refinement, fine_conn);
  ConsistencyReport report;
  report.bound = fine_conn.descriptor().kind == GroupKind::su2
                     ? 10.0 * fine_conn.descriptor().tolerance
                     : 0.0;
  for (const PathWord& p : coarse_paths) {
    const GroupElement via_restriction = holonomy(coarse_conn, p);
    const GroupElement via_expansion =
        holonomy(fine_conn, expand_path(refinement, p));
    const double deviation = distance(via_restriction, via_expansion);
    report.entries.push_back({to_literal(p), deviation});
    report.max_deviation = std::max(report.max_deviation, deviation);
  }
  report.pass = report.max_deviation <= report.bound;
  return report;
}

}  // namespace genconn
