#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "genconn/projective.hpp"
#include "genconn/symmetry.hpp"

namespace genconn {

// Function of finitely many path holonomies: the dense testable class for
// the product-Haar measure on a fixed graph.
struct CylindricalFunction {
  GraphPtr graph;
  GroupDescriptor descriptor;
  std::vector<PathWord> probe_paths;
  std::function<double(std::span<const GroupElement>)> evaluator;
  double bound = 1.0;  // declared sup bound, for honest error semantics
  std::string name;
};

double evaluate(const CylindricalFunction& f, const GeneralizedConnection& conn);

struct Budget {
  enum class Mode { exact, monte_carlo };
  Mode mode = Mode::monte_carlo;
  long long samples = 10000;

  static Budget exact() { return Budget{Mode::exact, 0}; }
  static Budget monte_carlo(long long samples) {
    return Budget{Mode::monte_carlo, samples};
  }
};

struct IntegralResult {
  double value = 0.0;
  Budget::Mode mode = Budget::Mode::exact;
  long long samples = 0;    // monte carlo only
  double std_error = 0.0;   // monte carlo only
  // Reduced fraction when every enumerated value is an integer.
  std::optional<std::string> exact_fraction;
};

// Number of edge assignments |G|^edges; throws unsupported-exact for su2 and
// budget-exceeded beyond 10^7.
long long exact_enumeration_count(const GroupDescriptor& descriptor,
                                  std::size_t edge_count);

// Visits every assignment of group elements to graph edges, in a fixed
// odometer order over the deterministic element enumeration.
void enumerate_connections(
    const GraphPtr& graph, const GroupDescriptor& descriptor,
    const std::function<void(const GeneralizedConnection&)>& visit);

// Integral of f against the per-edge product Haar measure: full enumeration
// (exact) or a sample mean over independent Haar-random connections (mc).
// Monte Carlo fans out over `workers` derived streams; the reduction order
// is fixed, so results are reproducible at a fixed worker count.
IntegralResult integrate(const CylindricalFunction& f, const Budget& budget,
                         RandomStream& rng, int workers = 1);

struct InvarianceReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double delta = 0.0;  // lhs - rhs (paired mean difference in mc mode)
  double threshold = 0.0;
  bool pass = false;
  Budget::Mode mode = Budget::Mode::exact;
  long long samples = 0;
  double std_error = 0.0;  // of the paired difference
};

// Compares the integral of f with the integral of f composed with the
// action. Exact mode certifies equality by checking that the action permutes
// the enumerated value multiset; mc mode uses paired sampling (common random
// numbers) with a 3 sigma acceptance band.
InvarianceReport verify_gauge_invariance(const CylindricalFunction& f,
                                         const GaugeTransformation& g,
                                         const Budget& budget,
                                         RandomStream& rng, int workers = 1);

InvarianceReport verify_automorphism_invariance(const CylindricalFunction& f,
                                                const GroupoidAutomorphism& F,
                                                const Budget& budget,
                                                RandomStream& rng,
                                                int workers = 1);

// Cylindrical consistency: the integral of a coarse function equals the
// integral of its pullback along the restriction map. Exact mode checks the
// fiber structure of the enumeration; mc mode pairs each coarse sample with
// a measure-preserving random section.
InvarianceReport verify_refinement_consistency(
    const CylindricalFunction& f_coarse, const Refinement& refinement,
    const Budget& budget, RandomStream& rng, int workers = 1);

// Named integrand registry used by the CLI.
CylindricalFunction make_wilson(GraphPtr graph, const GroupDescriptor& d,
                                PathWord closed_path);
CylindricalFunction make_wilson_squared(GraphPtr graph,
                                        const GroupDescriptor& d,
                                        PathWord closed_path);
CylindricalFunction make_indicator_identity(GraphPtr graph,
                                            const GroupDescriptor& d,
                                            PathWord path);
CylindricalFunction make_character_product(GraphPtr graph,
                                           const GroupDescriptor& d,
                                           std::vector<PathWord> closed_paths);
CylindricalFunction make_constant(GraphPtr graph, const GroupDescriptor& d,
                                  double value);

}  // namespace genconn
