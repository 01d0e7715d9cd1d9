#pragma once

#include <functional>
#include <map>
#include <string>

#include "genconn/connection.hpp"

namespace genconn {

// Element of the generalized gauge group restricted to graph vertices: one
// group value per vertex, acting by conjugation at path endpoints.
class GaugeTransformation {
 public:
  GaugeTransformation(GraphPtr graph, GroupDescriptor descriptor,
                      std::vector<GroupElement> values);  // vertex order
  GaugeTransformation(GraphPtr graph, GroupDescriptor descriptor,
                      const std::map<std::string, GroupElement>& values);

  const GraphPtr& graph() const { return graph_; }
  const GroupDescriptor& descriptor() const { return descriptor_; }
  const GroupElement& value(const std::string& vertex_id) const;
  const std::vector<GroupElement>& values() const { return values_; }
  std::map<std::string, GroupElement> value_map() const;

 private:
  GraphPtr graph_;
  GroupDescriptor descriptor_;
  std::vector<GroupElement> values_;
};

GaugeTransformation identity_gauge(GraphPtr graph,
                                   const GroupDescriptor& descriptor);

// Visits all |G|^vertices gauge transformations of a finite group, in a
// fixed odometer order.
void enumerate_gauge_transformations(
    const GraphPtr& graph, const GroupDescriptor& descriptor,
    const std::function<void(const GaugeTransformation&)>& visit);
GaugeTransformation compose_gauge(const GaugeTransformation& g2,
                                  const GaugeTransformation& g1);
GaugeTransformation inverse_gauge(const GaugeTransformation& g);

// assignment(e) -> g(target(e)) * assignment(e) * g(source(e))^-1; the same
// relation then holds for the holonomy of every path.
GeneralizedConnection gauge_act(const GaugeTransformation& g,
                                const GeneralizedConnection& conn);

// Class function of the holonomy around a closed path; gauge invariant.
double wilson_loop(const GeneralizedConnection& conn, const PathWord& p);

// Invertible functor of the free groupoid induced by a graph symmetry:
// a vertex bijection plus a signed-edge bijection respecting endpoints.
class GroupoidAutomorphism {
 public:
  GroupoidAutomorphism(GraphPtr graph,
                       std::map<std::string, std::string> vertex_map,
                       std::map<std::string, SignedEdge> edge_map);

  static GroupoidAutomorphism identity(GraphPtr graph);

  const GraphPtr& graph() const { return graph_; }
  const std::map<std::string, std::string>& vertex_map() const {
    return vertex_map_;
  }
  const std::map<std::string, SignedEdge>& edge_map() const {
    return edge_map_;
  }

  const std::string& apply(const std::string& vertex_id) const;
  SignedEdge apply(const SignedEdge& letter) const;

 private:
  GraphPtr graph_;
  std::map<std::string, std::string> vertex_map_;
  std::map<std::string, SignedEdge> edge_map_;
};

GroupoidAutomorphism compose_auto(const GroupoidAutomorphism& f2,
                                  const GroupoidAutomorphism& f1);
GroupoidAutomorphism inverse_auto(const GroupoidAutomorphism& f);

// Letter-wise image; preserves composition and identities.
PathWord apply_to_path(const GroupoidAutomorphism& f, const PathWord& p);

// Pullback action: the new connection evaluates any path p to the old
// connection's value on the preimage path.
GeneralizedConnection automorphism_act(const GroupoidAutomorphism& f,
                                       const GeneralizedConnection& conn);

}  // namespace genconn
