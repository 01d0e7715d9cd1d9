#pragma once

#include <optional>
#include <utility>

#include "genconn/measure.hpp"
#include "genconn/symmetry.hpp"

namespace genconn {

// Built-in graph families. Cycle and theta graphs carry known automorphism
// groups (dihedral, edge permutations with pole swap) used by the symmetry
// suites; the grid carries straight-segment geometry for the discretizer.

// n vertices v0..v{n-1}, edges e{i}: v{i} -> v{(i+1) mod n}.
GraphPtr cycle_graph(int n, const std::string& name = "cycle");

// Two vertices x, y joined by `edges` parallel edges p0.. : x -> y.
GraphPtr theta_graph(int edges, const std::string& name = "theta");

// rows x cols planar grid with unit spacing, positions and polylines.
// Horizontal edges h{r}_{c}, vertical edges u{r}_{c}.
GraphPtr grid_graph(int rows, int cols, const std::string& name = "grid");

// Random connected multigraph: a random spanning tree plus extra random
// edges (self-loops allowed). Requires edges >= vertices - 1, edges >= 1.
GraphPtr random_graph(RandomStream& rng, int vertices, int edges,
                      const std::string& name = "random");

// Random chained raw word of exactly `length` letters (may contain
// retracings). Starts at `start` or a random vertex with incident edges.
std::vector<SignedEdge> random_raw_word(RandomStream& rng,
                                        const EmbeddedGraph& graph, int length,
                                        std::optional<std::string> start = {});

// Inserts `count` cancelling letter pairs at random chain positions; the
// reduced word is unchanged.
std::vector<SignedEdge> insert_retracings(RandomStream& rng,
                                          const EmbeddedGraph& graph,
                                          std::vector<SignedEdge> raw,
                                          const std::string& base, int count);

PathWord random_path(RandomStream& rng, GraphPtr graph, int length,
                     std::optional<std::string> start = {});

// (second, first) with source(second) == target(first).
std::pair<PathWord, PathWord> random_composable_pair(RandomStream& rng,
                                                     GraphPtr graph,
                                                     int length);

// Random walk closed up by a tree route back to the start vertex.
PathWord random_closed_path(RandomStream& rng, GraphPtr graph, int length);

GaugeTransformation random_gauge(RandomStream& rng, GraphPtr graph,
                                 const GroupDescriptor& descriptor);

// Dihedral symmetries of a cycle graph.
GroupoidAutomorphism cycle_rotation(GraphPtr cycle, int shift);
GroupoidAutomorphism cycle_reflection(GraphPtr cycle, int axis);
GroupoidAutomorphism random_cycle_automorphism(RandomStream& rng,
                                               GraphPtr cycle);

// Edge permutation of a theta graph, optionally swapping the two poles
// (which reverses every edge).
GroupoidAutomorphism theta_permutation(GraphPtr theta,
                                       const std::vector<int>& edge_perm,
                                       bool swap_poles);
GroupoidAutomorphism random_theta_automorphism(RandomStream& rng,
                                               GraphPtr theta);

// Random bounded cylindrical function: a small linear combination of
// products of powers of path characters.
CylindricalFunction random_cylindrical(RandomStream& rng, GraphPtr graph,
                                       const GroupDescriptor& descriptor,
                                       int paths, int terms);

}  // namespace genconn
