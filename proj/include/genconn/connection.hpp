#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "genconn/group.hpp"
#include "genconn/groupoid.hpp"
#include "genconn/polynomial.hpp"

namespace genconn {

// Functor from the graph-generated subgroupoid to G, freely determined by
// one group element per generator edge. Immutable.
class GeneralizedConnection {
 public:
  // values aligned with graph->edges() order.
  GeneralizedConnection(GraphPtr graph, GroupDescriptor descriptor,
                        std::vector<GroupElement> values);
  GeneralizedConnection(GraphPtr graph, GroupDescriptor descriptor,
                        const std::map<std::string, GroupElement>& assignment);

  const GraphPtr& graph() const { return graph_; }
  const GroupDescriptor& descriptor() const { return descriptor_; }
  const GroupElement& value(const std::string& edge_id) const;
  const std::vector<GroupElement>& values() const { return values_; }

  std::map<std::string, GroupElement> assignment() const;

 private:
  GraphPtr graph_;
  GroupDescriptor descriptor_;
  std::vector<GroupElement> values_;
};

// Independent Haar draw on every generator edge, in graph edge order.
GeneralizedConnection random_connection(GraphPtr graph,
                                        const GroupDescriptor& descriptor,
                                        RandomStream& rng);

// Evaluation map at a fixed connection: the functor value on a path. The
// product is ordered with the last letter's element leftmost, so that
// holonomy(compose(p2, p1)) = multiply(holonomy(p2), holonomy(p1)).
GroupElement holonomy(const GeneralizedConnection& conn, const PathWord& p);

// Smooth polynomial one-form, either abelian (u1) or su2-valued, with a
// fixed trivialization. u1 holonomies land in su2 as (cos t, sin t, 0, 0).
struct SmoothConnectionSpec {
  enum class Kind { u1_oneform, su2_oneform };
  Kind kind = Kind::u1_oneform;
  // u1: one polynomial per ambient coordinate.
  std::vector<Polynomial> u1_components;
  // su2: per ambient coordinate, one polynomial per su(2) basis direction.
  std::vector<std::array<Polynomial, 3>> su2_components;
  int quadrature_points = 32;

  int dimension() const {
    return static_cast<int>(kind == Kind::u1_oneform ? u1_components.size()
                                                     : su2_components.size());
  }
};

void validate_spec(const SmoothConnectionSpec& spec);

// Edge holonomies of the smooth connection: composite Gauss-Legendre line
// integrals (u1) or path-ordered products of per-step exponentials (su2).
// Every edge needs polyline geometry. descriptor must be su2.
GeneralizedConnection discretize_smooth(
    const SmoothConnectionSpec& spec, GraphPtr graph,
    const GroupDescriptor& descriptor = GroupDescriptor::su2());

// First candidate path with differing holonomy, if any.
std::optional<PathWord> separates(const GeneralizedConnection& a,
                                  const GeneralizedConnection& b,
                                  std::span<const PathWord> candidate_paths);

}  // namespace genconn
