#include "genconn/connection.hpp"

#include <cmath>
#include <string>

#include "genconn/quadrature.hpp"

namespace genconn {

namespace {

void require_graph(const GeneralizedConnection& conn, const PathWord& p) {
  if (conn.graph() != p.graph()) {
    fail(ErrorCode::graph_mismatch,
         "path lives on a different graph than the connection");
  }
}

}  // namespace

GeneralizedConnection::GeneralizedConnection(GraphPtr graph,
                                             GroupDescriptor descriptor,
                                             std::vector<GroupElement> values)
    : graph_(std::move(graph)),
      descriptor_(descriptor),
      values_(std::move(values)) {
  if (!graph_) fail(ErrorCode::invalid_argument, "null graph");
  if (values_.size() != graph_->edges().size()) {
    fail(ErrorCode::invalid_argument,
         "assignment covers " + std::to_string(values_.size()) + " edges, graph has " +
             std::to_string(graph_->edges().size()));
  }
  for (const GroupElement& g : values_) {
    if (!(g.descriptor == descriptor_)) {
      fail(ErrorCode::incompatible_group,
           "assigned element does not match the connection descriptor");
    }
  }
}

GeneralizedConnection::GeneralizedConnection(
    GraphPtr graph, GroupDescriptor descriptor,
    const std::map<std::string, GroupElement>& assignment)
    : graph_(std::move(graph)), descriptor_(descriptor) {
  if (!graph_) fail(ErrorCode::invalid_argument, "null graph");
  if (assignment.size() != graph_->edges().size()) {
    fail(ErrorCode::invalid_argument,
         "assignment covers " + std::to_string(assignment.size()) +
             " edges, graph has " + std::to_string(graph_->edges().size()));
  }
  values_.reserve(graph_->edges().size());
  for (const OrientedEdge& e : graph_->edges()) {
    const auto it = assignment.find(e.id);
    if (it == assignment.end()) {
      fail(ErrorCode::invalid_argument, "edge '" + e.id + "' has no assigned element");
    }
    if (!(it->second.descriptor == descriptor_)) {
      fail(ErrorCode::incompatible_group,
           "element for edge '" + e.id + "' does not match the connection descriptor");
    }
    values_.push_back(it->second);
  }
}

const GroupElement& GeneralizedConnection::value(
    const std::string& edge_id) const {
  return values_[graph_->edge_index(edge_id)];
}

std::map<std::string, GroupElement> GeneralizedConnection::assignment() const {
  std::map<std::string, GroupElement> out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    out.emplace(graph_->edges()[i].id, values_[i]);
  }
  return out;
}

GeneralizedConnection random_connection(GraphPtr graph,
                                        const GroupDescriptor& descriptor,
                                        RandomStream& rng) {
  std::vector<GroupElement> values;
  values.reserve(graph->edges().size());
  for (std::size_t i = 0; i < graph->edges().size(); ++i) {
    values.push_back(haar_sample(descriptor, rng));
  }
  return GeneralizedConnection(std::move(graph), descriptor, std::move(values));
}

GroupElement holonomy(const GeneralizedConnection& conn, const PathWord& p) {
  require_graph(conn, p);
  GroupElement h = identity(conn.descriptor());
  for (const SignedEdge& letter : p.letters()) {
    const GroupElement& g = conn.value(letter.edge);
    h = letter.sign == EdgeSign::forward ? multiply(g, h)
                                         : multiply(inverse(g), h);
  }
  return h;
}

void validate_spec(const SmoothConnectionSpec& spec) {
  if (spec.quadrature_points < 16) {
    fail(ErrorCode::invalid_argument, "quadrature_points must be at least 16");
  }
  const int dim = spec.dimension();
  if (dim == 0) {
    fail(ErrorCode::invalid_argument, "one-form has no components");
  }
  if (spec.kind == SmoothConnectionSpec::Kind::u1_oneform) {
    for (const Polynomial& p : spec.u1_components) {
      validate_polynomial(p, dim, 6);
    }
  } else {
    for (const auto& triple : spec.su2_components) {
      for (const Polynomial& p : triple) validate_polynomial(p, dim, 6);
    }
  }
}

namespace {

// Line integral of the u1 one-form along one straight segment, by
// Gauss-Legendre quadrature in the segment parameter.
double segment_phase(const SmoothConnectionSpec& spec,
                     const std::vector<double>& from,
                     const std::vector<double>& to) {
  const GaussLegendreRule& rule = gauss_legendre(spec.quadrature_points);
  const std::size_t dim = from.size();
  std::vector<double> point(dim);
  double phase = 0.0;
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    const double t = 0.5 * (rule.nodes[q] + 1.0);
    for (std::size_t k = 0; k < dim; ++k) {
      point[k] = from[k] + t * (to[k] - from[k]);
    }
    double pull_back = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
      pull_back += spec.u1_components[k].eval(point) * (to[k] - from[k]);
    }
    phase += 0.5 * rule.weights[q] * pull_back;
  }
  return phase;
}

// Path-ordered product over one straight segment: constant-field steps with
// the field sampled at step midpoints. Later steps multiply on the left.
Quaternion segment_transport(const SmoothConnectionSpec& spec,
                             const std::vector<double>& from,
                             const std::vector<double>& to) {
  const std::size_t dim = from.size();
  const int steps = spec.quadrature_points;
  std::vector<double> point(dim);
  Quaternion acc{1.0, 0.0, 0.0, 0.0};
  for (int s = 0; s < steps; ++s) {
    const double t_mid = (s + 0.5) / steps;
    for (std::size_t k = 0; k < dim; ++k) {
      point[k] = from[k] + t_mid * (to[k] - from[k]);
    }
    double v[3] = {0.0, 0.0, 0.0};
    for (std::size_t k = 0; k < dim; ++k) {
      const double dx = (to[k] - from[k]) / steps;
      for (int a = 0; a < 3; ++a) {
        v[a] += spec.su2_components[k][a].eval(point) * dx;
      }
    }
    const Quaternion step = quaternion_exp_pure(v[0], v[1], v[2]);
    Quaternion next;
    next.w = step.w * acc.w - step.x * acc.x - step.y * acc.y - step.z * acc.z;
    next.x = step.w * acc.x + step.x * acc.w + step.y * acc.z - step.z * acc.y;
    next.y = step.w * acc.y - step.x * acc.z + step.y * acc.w + step.z * acc.x;
    next.z = step.w * acc.z + step.x * acc.y - step.y * acc.x + step.z * acc.w;
    const double norm = std::sqrt(next.w * next.w + next.x * next.x +
                                  next.y * next.y + next.z * next.z);
    acc = Quaternion{next.w / norm, next.x / norm, next.y / norm,
                     next.z / norm};
  }
  return acc;
}

}  // namespace

GeneralizedConnection discretize_smooth(const SmoothConnectionSpec& spec,
                                        GraphPtr graph,
                                        const GroupDescriptor& descriptor) {
  validate_spec(spec);
  if (descriptor.kind != GroupKind::su2) {
    fail(ErrorCode::unsupported_group,
         "smooth discretization produces su2 elements; got " +
             to_string(descriptor));
  }
  const auto graph_dim = graph->dimension();
  if (!graph_dim || *graph_dim != spec.dimension()) {
    fail(ErrorCode::invalid_argument,
         "one-form dimension does not match the graph coordinates");
  }
  std::vector<GroupElement> values;
  values.reserve(graph->edges().size());
  for (const OrientedEdge& e : graph->edges()) {
    if (!e.polyline) {
      fail(ErrorCode::no_geometry, "edge '" + e.id + "' has no polyline geometry");
    }
    const auto& line = *e.polyline;
    if (spec.kind == SmoothConnectionSpec::Kind::u1_oneform) {
      double phase = 0.0;
      for (std::size_t s = 0; s + 1 < line.size(); ++s) {
        phase += segment_phase(spec, line[s], line[s + 1]);
      }
      values.push_back(
          su2_element(descriptor, std::cos(phase), std::sin(phase), 0.0, 0.0));
    } else {
      Quaternion acc{1.0, 0.0, 0.0, 0.0};
      for (std::size_t s = 0; s + 1 < line.size(); ++s) {
        const Quaternion seg = segment_transport(spec, line[s], line[s + 1]);
        Quaternion next;
        next.w = seg.w * acc.w - seg.x * acc.x - seg.y * acc.y - seg.z * acc.z;
        next.x = seg.w * acc.x + seg.x * acc.w + seg.y * acc.z - seg.z * acc.y;
        next.y = seg.w * acc.y - seg.x * acc.z + seg.y * acc.w + seg.z * acc.x;
        next.z = seg.w * acc.z + seg.x * acc.y - seg.y * acc.x + seg.z * acc.w;
        acc = next;
      }
      values.push_back(su2_element(descriptor, acc.w, acc.x, acc.y, acc.z));
    }
  }
  return GeneralizedConnection(std::move(graph), descriptor, std::move(values));
}

std::optional<PathWord> separates(const GeneralizedConnection& a,
                                  const GeneralizedConnection& b,
                                  std::span<const PathWord> candidate_paths) {
  if (a.graph() != b.graph()) {
    fail(ErrorCode::graph_mismatch, "connections live on different graphs");
  }
  if (!(a.descriptor() == b.descriptor())) {
    fail(ErrorCode::incompatible_group,
         "connections have different structure groups");
  }
  for (const PathWord& p : candidate_paths) {
    if (!equal(holonomy(a, p), holonomy(b, p))) return p;
  }
  return std::nullopt;
}

}  // namespace genconn
