#include "genconn/generators.hpp"

#include <cmath>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>

namespace genconn {

GraphPtr cycle_graph(int n, const std::string& name) {
  if (n < 1) fail(ErrorCode::invalid_argument, "cycle needs at least one vertex");
  std::vector<Vertex> vertices;
  std::vector<OrientedEdge> edges;
  for (int i = 0; i < n; ++i) {
    vertices.push_back({"v" + std::to_string(i), std::nullopt});
  }
  for (int i = 0; i < n; ++i) {
    edges.push_back({"e" + std::to_string(i), "v" + std::to_string(i),
                     "v" + std::to_string((i + 1) % n), std::nullopt});
  }
  return std::make_shared<const EmbeddedGraph>(name, std::move(vertices),
                                               std::move(edges));
}

GraphPtr theta_graph(int edge_count, const std::string& name) {
  if (edge_count < 1) {
    fail(ErrorCode::invalid_argument, "theta graph needs at least one edge");
  }
  std::vector<Vertex> vertices{{"x", std::nullopt}, {"y", std::nullopt}};
  std::vector<OrientedEdge> edges;
  for (int i = 0; i < edge_count; ++i) {
    edges.push_back({"p" + std::to_string(i), "x", "y", std::nullopt});
  }
  return std::make_shared<const EmbeddedGraph>(name, std::move(vertices),
                                               std::move(edges));
}

GraphPtr grid_graph(int rows, int cols, const std::string& name) {
  if (rows < 1 || cols < 1) {
    fail(ErrorCode::invalid_argument, "grid needs positive extents");
  }
  std::vector<Vertex> vertices;
  auto vertex_id = [](int r, int c) {
    return "v" + std::to_string(r) + "_" + std::to_string(c);
  };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      vertices.push_back({vertex_id(r, c),
                          std::vector<double>{static_cast<double>(c),
                                              static_cast<double>(r)}});
    }
  }
  std::vector<OrientedEdge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c + 1 < cols; ++c) {
      OrientedEdge e;
      e.id = "h" + std::to_string(r) + "_" + std::to_string(c);
      e.source = vertex_id(r, c);
      e.target = vertex_id(r, c + 1);
      e.polyline = {{static_cast<double>(c), static_cast<double>(r)},
                    {static_cast<double>(c + 1), static_cast<double>(r)}};
      edges.push_back(std::move(e));
    }
  }
  for (int r = 0; r + 1 < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      OrientedEdge e;
      e.id = "u" + std::to_string(r) + "_" + std::to_string(c);
      e.source = vertex_id(r, c);
      e.target = vertex_id(r + 1, c);
      e.polyline = {{static_cast<double>(c), static_cast<double>(r)},
                    {static_cast<double>(c), static_cast<double>(r + 1)}};
      edges.push_back(std::move(e));
    }
  }
  return std::make_shared<const EmbeddedGraph>(name, std::move(vertices),
                                               std::move(edges));
}

GraphPtr random_graph(RandomStream& rng, int vertex_count, int edge_count,
                      const std::string& name) {
  if (vertex_count < 1 || edge_count < 1 || edge_count < vertex_count - 1) {
    fail(ErrorCode::invalid_argument,
         "random graph needs >= 1 vertex and enough edges to connect");
  }
  std::vector<Vertex> vertices;
  for (int i = 0; i < vertex_count; ++i) {
    vertices.push_back({"v" + std::to_string(i), std::nullopt});
  }
  std::vector<OrientedEdge> edges;
  int next_edge = 0;
  auto add_edge = [&](int a, int b) {
    OrientedEdge e;
    e.id = "e" + std::to_string(next_edge++);
    e.source = "v" + std::to_string(a);
    e.target = "v" + std::to_string(b);
    edges.push_back(std::move(e));
  };
  // Random spanning tree keeps every vertex reachable for word sampling.
  for (int i = 1; i < vertex_count; ++i) {
    const int parent = static_cast<int>(rng.uniform_below(i));
    if (rng.uniform_below(2) == 0) {
      add_edge(parent, i);
    } else {
      add_edge(i, parent);
    }
  }
  while (static_cast<int>(edges.size()) < edge_count) {
    const int a = static_cast<int>(rng.uniform_below(vertex_count));
    const int b = static_cast<int>(rng.uniform_below(vertex_count));
    add_edge(a, b);
  }
  return std::make_shared<const EmbeddedGraph>(name, std::move(vertices),
                                               std::move(edges));
}

namespace {

// Signed letters leaving each vertex.
std::unordered_map<std::string, std::vector<SignedEdge>> leaving_letters(
    const EmbeddedGraph& graph) {
  std::unordered_map<std::string, std::vector<SignedEdge>> out;
  for (const OrientedEdge& e : graph.edges()) {
    out[e.source].push_back(SignedEdge{e.id, EdgeSign::forward});
    out[e.target].push_back(SignedEdge{e.id, EdgeSign::reverse});
  }
  return out;
}

}  // namespace

std::vector<SignedEdge> random_raw_word(RandomStream& rng,
                                        const EmbeddedGraph& graph, int length,
                                        std::optional<std::string> start) {
  const auto leaving = leaving_letters(graph);
  std::string current;
  if (start) {
    graph.vertex(*start);
    current = *start;
  } else {
    std::vector<std::string> candidates;
    for (const Vertex& v : graph.vertices()) {
      if (leaving.count(v.id)) candidates.push_back(v.id);
    }
    if (candidates.empty()) return {};
    current = candidates[rng.uniform_below(candidates.size())];
  }
  std::vector<SignedEdge> word;
  word.reserve(length);
  for (int i = 0; i < length; ++i) {
    const auto it = leaving.find(current);
    if (it == leaving.end()) break;  // isolated start vertex
    const SignedEdge& letter = it->second[rng.uniform_below(it->second.size())];
    word.push_back(letter);
    current = letter_target(graph, letter);
  }
  return word;
}

std::vector<SignedEdge> insert_retracings(RandomStream& rng,
                                          const EmbeddedGraph& graph,
                                          std::vector<SignedEdge> raw,
                                          const std::string& base, int count) {
  const auto leaving = leaving_letters(graph);
  for (int k = 0; k < count; ++k) {
    // Chain vertices, including both endpoints.
    std::vector<std::string> stops;
    stops.push_back(raw.empty() ? base : letter_source(graph, raw.front()));
    for (const SignedEdge& letter : raw) {
      stops.push_back(letter_target(graph, letter));
    }
    const std::size_t pos = rng.uniform_below(stops.size());
    const auto it = leaving.find(stops[pos]);
    if (it == leaving.end()) continue;
    const SignedEdge& out = it->second[rng.uniform_below(it->second.size())];
    raw.insert(raw.begin() + pos, {out, flipped(out)});
  }
  return raw;
}

PathWord random_path(RandomStream& rng, GraphPtr graph, int length,
                     std::optional<std::string> start) {
  std::vector<SignedEdge> raw =
      random_raw_word(rng, *graph, length, std::move(start));
  if (raw.empty()) {
    // No edges reachable; fall back to an identity word.
    const std::string base = graph->vertices().front().id;
    return PathWord::identity(std::move(graph), base);
  }
  return reduce(std::move(graph), std::move(raw));
}

std::pair<PathWord, PathWord> random_composable_pair(RandomStream& rng,
                                                     GraphPtr graph,
                                                     int length) {
  PathWord first = random_path(rng, graph, length);
  PathWord second = random_path(rng, graph, length, first.target());
  return {std::move(second), std::move(first)};
}

PathWord random_closed_path(RandomStream& rng, GraphPtr graph, int length) {
  std::vector<SignedEdge> raw = random_raw_word(rng, *graph, length);
  if (raw.empty()) {
    return PathWord::identity(graph, graph->vertices().front().id);
  }
  const std::string start = letter_source(*graph, raw.front());
  std::string current = letter_target(*graph, raw.back());
  if (current != start) {
    // BFS route back to the start over the underlying undirected graph.
    const auto leaving = leaving_letters(*graph);
    std::unordered_map<std::string, SignedEdge> arrived_by;
    std::deque<std::string> queue{current};
    std::unordered_map<std::string, bool> visited{{current, true}};
    while (!queue.empty()) {
      const std::string v = queue.front();
      queue.pop_front();
      if (v == start) break;
      const auto it = leaving.find(v);
      if (it == leaving.end()) continue;
      for (const SignedEdge& letter : it->second) {
        const std::string& next = letter_target(*graph, letter);
        if (!visited[next]) {
          visited[next] = true;
          arrived_by.emplace(next, letter);
          queue.push_back(next);
        }
      }
    }
    std::vector<SignedEdge> route;
    std::string v = start;
    while (v != current) {
      const SignedEdge& letter = arrived_by.at(v);
      route.push_back(letter);
      v = letter_source(*graph, letter);
    }
    raw.insert(raw.end(), route.rbegin(), route.rend());
  }
  return reduce(std::move(graph), std::move(raw));
}

GaugeTransformation random_gauge(RandomStream& rng, GraphPtr graph,
                                 const GroupDescriptor& descriptor) {
  std::vector<GroupElement> values;
  values.reserve(graph->vertices().size());
  for (std::size_t i = 0; i < graph->vertices().size(); ++i) {
    values.push_back(haar_sample(descriptor, rng));
  }
  return GaugeTransformation(std::move(graph), descriptor, std::move(values));
}

GroupoidAutomorphism cycle_rotation(GraphPtr cycle, int shift) {
  const int n = static_cast<int>(cycle->vertices().size());
  const int k = ((shift % n) + n) % n;
  std::map<std::string, std::string> vmap;
  std::map<std::string, SignedEdge> emap;
  for (int i = 0; i < n; ++i) {
    vmap.emplace("v" + std::to_string(i), "v" + std::to_string((i + k) % n));
    emap.emplace("e" + std::to_string(i),
                 SignedEdge{"e" + std::to_string((i + k) % n),
                            EdgeSign::forward});
  }
  return GroupoidAutomorphism(std::move(cycle), std::move(vmap),
                              std::move(emap));
}

GroupoidAutomorphism cycle_reflection(GraphPtr cycle, int axis) {
  const int n = static_cast<int>(cycle->vertices().size());
  const int a = ((axis % n) + n) % n;
  std::map<std::string, std::string> vmap;
  std::map<std::string, SignedEdge> emap;
  for (int i = 0; i < n; ++i) {
    vmap.emplace("v" + std::to_string(i),
                 "v" + std::to_string(((a - i) % n + n) % n));
    // e_i: v_i -> v_{i+1} maps onto e_{a-i-1} traversed backwards.
    emap.emplace("e" + std::to_string(i),
                 SignedEdge{"e" + std::to_string(((a - i - 1) % n + n) % n),
                            EdgeSign::reverse});
  }
  return GroupoidAutomorphism(std::move(cycle), std::move(vmap),
                              std::move(emap));
}

GroupoidAutomorphism random_cycle_automorphism(RandomStream& rng,
                                               GraphPtr cycle) {
  const int n = static_cast<int>(cycle->vertices().size());
  const int k = static_cast<int>(rng.uniform_below(n));
  if (rng.uniform_below(2) == 0) {
    return cycle_rotation(std::move(cycle), k);
  }
  return cycle_reflection(std::move(cycle), k);
}

GroupoidAutomorphism theta_permutation(GraphPtr theta,
                                       const std::vector<int>& edge_perm,
                                       bool swap_poles) {
  const int m = static_cast<int>(theta->edges().size());
  if (static_cast<int>(edge_perm.size()) != m) {
    fail(ErrorCode::invalid_argument, "edge permutation has wrong size");
  }
  std::map<std::string, std::string> vmap;
  if (swap_poles) {
    vmap = {{"x", "y"}, {"y", "x"}};
  } else {
    vmap = {{"x", "x"}, {"y", "y"}};
  }
  std::map<std::string, SignedEdge> emap;
  for (int i = 0; i < m; ++i) {
    emap.emplace("p" + std::to_string(i),
                 SignedEdge{"p" + std::to_string(edge_perm[i]),
                            swap_poles ? EdgeSign::reverse
                                       : EdgeSign::forward});
  }
  return GroupoidAutomorphism(std::move(theta), std::move(vmap),
                              std::move(emap));
}

GroupoidAutomorphism random_theta_automorphism(RandomStream& rng,
                                               GraphPtr theta) {
  const int m = static_cast<int>(theta->edges().size());
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = m - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.uniform_below(i + 1));
    std::swap(perm[i], perm[j]);
  }
  return theta_permutation(std::move(theta), perm, rng.uniform_below(2) == 0);
}

CylindricalFunction random_cylindrical(RandomStream& rng, GraphPtr graph,
                                       const GroupDescriptor& descriptor,
                                       int path_count, int term_count) {
  if (path_count < 1 || term_count < 1) {
    fail(ErrorCode::invalid_argument, "need at least one path and one term");
  }
  std::vector<PathWord> paths;
  for (int i = 0; i < path_count; ++i) {
    paths.push_back(random_path(rng, graph, 3 + static_cast<int>(rng.uniform_below(5))));
  }
  struct Term {
    double coeff;
    std::vector<int> exponents;
  };
  std::vector<Term> terms;
  for (int t = 0; t < term_count; ++t) {
    Term term;
    term.coeff = 2.0 * rng.uniform01() - 1.0;
    for (int i = 0; i < path_count; ++i) {
      term.exponents.push_back(static_cast<int>(rng.uniform_below(3)));
    }
    terms.push_back(std::move(term));
  }
  double char_bound = 1.0;
  switch (descriptor.kind) {
    case GroupKind::cyclic: char_bound = 1.0; break;
    case GroupKind::symmetric: char_bound = descriptor.n; break;
    case GroupKind::su2: char_bound = 2.0; break;
  }
  double bound = 0.0;
  for (const Term& term : terms) {
    double term_bound = std::fabs(term.coeff);
    for (const int e : term.exponents) term_bound *= std::pow(char_bound, e);
    bound += term_bound;
  }
  CylindricalFunction f;
  f.graph = std::move(graph);
  f.descriptor = descriptor;
  f.probe_paths = std::move(paths);
  f.evaluator = [terms](std::span<const GroupElement> h) {
    double sum = 0.0;
    for (const Term& term : terms) {
      double value = term.coeff;
      for (std::size_t i = 0; i < term.exponents.size(); ++i) {
        const double c = character(h[i]);
        for (int e = 0; e < term.exponents[i]; ++e) value *= c;
      }
      sum += value;
    }
    return sum;
  };
  f.bound = bound;
  f.name = "random-cylindrical";
  return f;
}

}  // namespace genconn
