#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "genconn/connection.hpp"

namespace genconn {

// Coarse-to-fine graph refinement: every coarse edge expands to a reduced
// non-identity path on the fine graph, compatibly with the vertex inclusion.
// The induced restriction map between connection spaces is the projective
// bond.
struct Refinement {
  GraphPtr coarse;
  GraphPtr fine;
  std::map<std::string, PathWord> expansion;          // coarse edge -> fine path
  std::map<std::string, std::string> vertex_inclusion;  // coarse -> fine vertex
};

Refinement make_refinement(GraphPtr coarse, GraphPtr fine,
                           std::map<std::string, PathWord> expansion,
                           std::map<std::string, std::string> vertex_inclusion);

struct SubdivisionSpec {
  std::string new_vertex_id;
  // Arc-length fraction along the polyline (or abstract split when the edge
  // has no geometry). Ignored when position is given.
  double fraction = 0.5;
  // Optional explicit split point; must lie on the polyline when present.
  std::optional<std::vector<double>> position;
  // Replacement edge ids; default "<edge>_a" / "<edge>_b".
  std::string first_edge_id;
  std::string second_edge_id;
};

// Replaces e: x -> y by e_a: x -> m, e_b: m -> y; expansion(e) = [e_a, e_b].
std::pair<GraphPtr, Refinement> subdivide_edge(const GraphPtr& graph,
                                               const std::string& edge_id,
                                               const SubdivisionSpec& spec);

// Fine graph = coarse graph plus extra edges; coarse edges expand trivially.
std::pair<GraphPtr, Refinement> add_edges(const GraphPtr& graph,
                                          std::vector<OrientedEdge> extra,
                                          std::vector<Vertex> extra_vertices = {});

// Bond composition: first refine coarse -> mid, then mid -> fine.
Refinement compose_refinements(const Refinement& coarse_to_mid,
                               const Refinement& mid_to_fine);

// coarse value of e = fine holonomy along expansion(e).
GeneralizedConnection restrict_connection(const Refinement& refinement,
                                          const GeneralizedConnection& fine_conn);

// Letter-wise expansion of a coarse path to the fine graph.
PathWord expand_path(const Refinement& refinement, const PathWord& coarse_path);

// Measure-preserving random section of the restriction map: free fine edges
// are Haar-sampled, the last letter of each expansion word is solved for.
// Requires expansion supports to be disjoint with distinct letters.
GeneralizedConnection random_section(const Refinement& refinement,
                                     const GeneralizedConnection& coarse_conn,
                                     RandomStream& rng);

struct ConsistencyReport {
  struct Entry {
    std::string path;
    double deviation;
  };
  std::vector<Entry> entries;
  double max_deviation = 0.0;
  double bound = 0.0;  // 0 for finite groups, 10 * tolerance for su2
  bool pass = true;
};

// Compares coarse-side evaluation after restriction against fine-side
// evaluation of the expanded path, per sample path.
ConsistencyReport check_consistency(const Refinement& refinement,
                                    const GeneralizedConnection& fine_conn,
                                    std::span<const PathWord> coarse_paths);

}  // namespace genconn
