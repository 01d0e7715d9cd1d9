#include "genconn/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

namespace genconn {

namespace {

constexpr long long kEnumerationLimit = 10000000;

void require_function(const CylindricalFunction& f) {
  if (!f.graph) fail(ErrorCode::invalid_argument, "cylindrical function has no graph");
  if (!f.evaluator) fail(ErrorCode::invalid_argument, "cylindrical function has no evaluator");
  for (const PathWord& p : f.probe_paths) {
    if (p.graph() != f.graph) {
      fail(ErrorCode::graph_mismatch, "probe path lives on a different graph");
    }
  }
}

double kahan_sum(const std::vector<double>& values) {
  double sum = 0.0;
  double carry = 0.0;
  for (const double v : values) {
    const double y = v - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return sum;
}

// Reduced p/q when every value is an integer; the enumeration mean is then
// an exact rational.
std::optional<std::string> exact_fraction(const std::vector<double>& values) {
  long long numerator = 0;
  for (const double v : values) {
    if (!(std::nearbyint(v) == v) || std::fabs(v) > 1e9) return std::nullopt;
    numerator += static_cast<long long>(v);
    if (std::llabs(numerator) > (1LL << 60)) return std::nullopt;
  }
  long long denominator = static_cast<long long>(values.size());
  if (denominator == 0) return std::nullopt;
  const long long g = std::gcd(std::llabs(numerator), denominator);
  if (g > 1) {
    numerator /= g;
    denominator /= g;
  }
  if (denominator == 1) return std::to_string(numerator);
  return std::to_string(numerator) + "/" + std::to_string(denominator);
}

struct McAccumulator {
  double sum = 0.0;
  double sum_sq = 0.0;
  long long count = 0;

  void add(double v) {
    sum += v;
    sum_sq += v * v;
    ++count;
  }
};

struct McStats {
  double mean = 0.0;
  double std_error = 0.0;
  long long samples = 0;
};

// Order-fixed reduction over the per-worker partial sums.
McStats combine(const std::vector<McAccumulator>& parts) {
  double sum = 0.0;
  double sum_sq = 0.0;
  long long count = 0;
  for (const McAccumulator& part : parts) {
    sum += part.sum;
    sum_sq += part.sum_sq;
    count += part.count;
  }
  McStats stats;
  stats.samples = count;
  if (count == 0) return stats;
  stats.mean = sum / static_cast<double>(count);
  if (count > 1) {
    const double variance =
        std::max(0.0, (sum_sq - static_cast<double>(count) * stats.mean * stats.mean) /
                          static_cast<double>(count - 1));
    stats.std_error = std::sqrt(variance / static_cast<double>(count));
  }
  return stats;
}

// Runs `body(worker_rng, accumulator)` per sample across workers with
// deterministic per-worker streams derived from the master seed.
template <typename Body>
std::vector<McAccumulator> run_workers(long long samples, int workers,
                                       const RandomStream& master,
                                       const Body& body) {
  if (samples < 1) fail(ErrorCode::invalid_argument, "monte carlo needs samples >= 1");
  if (workers < 1) fail(ErrorCode::invalid_argument, "worker count must be positive");
  const int used = static_cast<int>(
      std::min<long long>(workers, samples));
  std::vector<McAccumulator> parts(used);
  std::vector<long long> counts(used, samples / used);
  for (int i = 0; i < samples % used; ++i) ++counts[i];

  auto chunk = [&](int index) {
    RandomStream stream = master.spawn(static_cast<std::uint64_t>(index));
    for (long long k = 0; k < counts[index]; ++k) {
      body(stream, parts[index]);
    }
  };
  if (used == 1) {
    chunk(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(used);
    for (int i = 0; i < used; ++i) threads.emplace_back(chunk, i);
    for (std::thread& t : threads) t.join();
  }
  return parts;
}

std::vector<double> enumerate_values(
    const GraphPtr& graph, const GroupDescriptor& descriptor,
    const std::function<double(const GeneralizedConnection&)>& value_of) {
  const long long count =
      exact_enumeration_count(descriptor, graph->edges().size());
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(count));
  enumerate_connections(graph, descriptor,
                        [&](const GeneralizedConnection& conn) {
                          values.push_back(value_of(conn));
                        });
  return values;
}

IntegralResult exact_result(std::vector<double> values) {
  IntegralResult result;
  result.mode = Budget::Mode::exact;
  result.exact_fraction = exact_fraction(values);
  // Canonical (sorted) summation: the reported value is invariant under any
  // permutation of the enumeration.
  std::sort(values.begin(), values.end());
  result.value = values.empty() ? 0.0
                                : kahan_sum(values) / static_cast<double>(values.size());
  return result;
}

// Paired invariance comparison shared by the three verify operations.
template <typename TransformedValue>
InvarianceReport paired_mc(const CylindricalFunction& f, const Budget& budget,
                           RandomStream& rng, int workers,
                           const TransformedValue& transformed_value) {
  if (budget.samples < 1) {
    fail(ErrorCode::invalid_argument, "monte carlo needs samples >= 1");
  }
  if (workers < 1) {
    fail(ErrorCode::invalid_argument, "worker count must be positive");
  }
  struct PairedPart {
    McAccumulator lhs, rhs, delta;
  };
  std::vector<PairedPart> parts(
      static_cast<std::size_t>(std::min<long long>(
          std::max(workers, 1), std::max<long long>(budget.samples, 1))));

  const int used = static_cast<int>(parts.size());
  std::vector<long long> counts(used, budget.samples / used);
  for (int i = 0; i < budget.samples % used; ++i) ++counts[i];
  auto chunk = [&](int index) {
    RandomStream stream = rng.spawn(static_cast<std::uint64_t>(index));
    for (long long k = 0; k < counts[index]; ++k) {
      const GeneralizedConnection conn =
          random_connection(f.graph, f.descriptor, stream);
      const double a = evaluate(f, conn);
      const double b = transformed_value(conn, stream);
      parts[index].lhs.add(a);
      parts[index].rhs.add(b);
      parts[index].delta.add(a - b);
    }
  };
  if (used == 1) {
    chunk(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(used);
    for (int i = 0; i < used; ++i) threads.emplace_back(chunk, i);
    for (std::thread& t : threads) t.join();
  }

  std::vector<McAccumulator> lhs_parts, rhs_parts, delta_parts;
  for (const PairedPart& part : parts) {
    lhs_parts.push_back(part.lhs);
    rhs_parts.push_back(part.rhs);
    delta_parts.push_back(part.delta);
  }
  const McStats lhs = combine(lhs_parts);
  const McStats rhs = combine(rhs_parts);
  const McStats delta = combine(delta_parts);

  InvarianceReport report;
  report.mode = Budget::Mode::monte_carlo;
  report.samples = delta.samples;
  report.lhs = lhs.mean;
  report.rhs = rhs.mean;
  report.delta = delta.mean;
  report.std_error = delta.std_error;
  report.threshold = 3.0 * delta.std_error + 1e-12;
  report.pass = std::fabs(delta.mean) <= report.threshold;
  return report;
}

InvarianceReport exact_permutation_report(std::vector<double> lhs_values,
                                          std::vector<double> rhs_values) {
  std::sort(lhs_values.begin(), lhs_values.end());
  std::sort(rhs_values.begin(), rhs_values.end());
  InvarianceReport report;
  report.mode = Budget::Mode::exact;
  report.samples = 0;
  const double lhs_mean =
      lhs_values.empty() ? 0.0
                         : kahan_sum(lhs_values) / static_cast<double>(lhs_values.size());
  report.lhs = lhs_mean;
  report.threshold = 0.0;
  if (lhs_values == rhs_values) {
    // The action permutes the enumeration, so the two integrals are equal as
    // exact rational averages; report a certified zero difference.
    report.rhs = lhs_mean;
    report.delta = 0.0;
    report.pass = true;
  } else {
    const double rhs_mean =
        rhs_values.empty() ? 0.0
                           : kahan_sum(rhs_values) / static_cast<double>(rhs_values.size());
    report.rhs = rhs_mean;
    report.delta = lhs_mean - rhs_mean;
    report.pass = false;
  }
  return report;
}

}  // namespace

double evaluate(const CylindricalFunction& f, const GeneralizedConnection& conn) {
  if (conn.graph() != f.graph) {
    fail(ErrorCode::graph_mismatch,
         "connection does not live on the function's graph");
  }
  std::vector<GroupElement> holonomies;
  holonomies.reserve(f.probe_paths.size());
  for (const PathWord& p : f.probe_paths) {
    holonomies.push_back(holonomy(conn, p));
  }
  return f.evaluator(holonomies);
}

long long exact_enumeration_count(const GroupDescriptor& descriptor,
                                  std::size_t edge_count) {
  if (!descriptor.is_finite()) {
    fail(ErrorCode::unsupported_exact,
         "exact integration requires a finite group; got " +
             to_string(descriptor));
  }
  const long long order = descriptor.order();
  long long count = 1;
  for (std::size_t i = 0; i < edge_count; ++i) {
    if (count > kEnumerationLimit / order) {
      fail(ErrorCode::budget_exceeded,
           "enumeration of " + std::to_string(order) + "^" +
               std::to_string(edge_count) + " assignments exceeds 10^7");
    }
    count *= order;
  }
  return count;
}

void enumerate_connections(
    const GraphPtr& graph, const GroupDescriptor& descriptor,
    const std::function<void(const GeneralizedConnection&)>& visit) {
  exact_enumeration_count(descriptor, graph->edges().size());
  const std::vector<GroupElement> elements = enumerate_elements(descriptor);
  const std::size_t edge_count = graph->edges().size();
  std::vector<std::size_t> odometer(edge_count, 0);
  for (;;) {
    std::vector<GroupElement> values;
    values.reserve(edge_count);
    for (const std::size_t index : odometer) values.push_back(elements[index]);
    visit(GeneralizedConnection(graph, descriptor, std::move(values)));
    std::size_t k = 0;
    while (k < edge_count) {
      if (++odometer[k] < elements.size()) break;
      odometer[k] = 0;
      ++k;
    }
    if (k == edge_count) break;
  }
}

IntegralResult integrate(const CylindricalFunction& f, const Budget& budget,
                         RandomStream& rng, int workers) {
  require_function(f);
  if (budget.mode == Budget::Mode::exact) {
    return exact_result(enumerate_values(
        f.graph, f.descriptor,
        [&](const GeneralizedConnection& conn) { return evaluate(f, conn); }));
  }
  const std::vector<McAccumulator> parts = run_workers(
      budget.samples, workers, rng,
      [&](RandomStream& stream, McAccumulator& acc) {
        acc.add(evaluate(f, random_connection(f.graph, f.descriptor, stream)));
      });
  const McStats stats = combine(parts);
  IntegralResult result;
  result.mode = Budget::Mode::monte_carlo;
  result.value = stats.mean;
  result.samples = stats.samples;
  result.std_error = stats.std_error;
  return result;
}

InvarianceReport verify_gauge_invariance(const CylindricalFunction& f,
                                         const GaugeTransformation& g,
                                         const Budget& budget,
                                         RandomStream& rng, int workers) {
  require_function(f);
  if (g.graph() != f.graph) {
    fail(ErrorCode::graph_mismatch, "gauge transformation on a different graph");
  }
  if (!(g.descriptor() == f.descriptor)) {
    fail(ErrorCode::incompatible_group, "gauge transformation group mismatch");
  }
  if (budget.mode == Budget::Mode::exact) {
    auto lhs = enumerate_values(f.graph, f.descriptor,
                                [&](const GeneralizedConnection& conn) {
                                  return evaluate(f, conn);
                                });
    auto rhs = enumerate_values(f.graph, f.descriptor,
                                [&](const GeneralizedConnection& conn) {
                                  return evaluate(f, gauge_act(g, conn));
                                });
    return exact_permutation_report(std::move(lhs), std::move(rhs));
  }
  return paired_mc(f, budget, rng, workers,
                   [&](const GeneralizedConnection& conn, RandomStream&) {
                     return evaluate(f, gauge_act(g, conn));
                   });
}

InvarianceReport verify_automorphism_invariance(const CylindricalFunction& f,
                                                const GroupoidAutomorphism& F,
                                                const Budget& budget,
                                                RandomStream& rng,
                                                int workers) {
  require_function(f);
  if (F.graph() != f.graph) {
    fail(ErrorCode::graph_mismatch, "automorphism on a different graph");
  }
  if (budget.mode == Budget::Mode::exact) {
    auto lhs = enumerate_values(f.graph, f.descriptor,
                                [&](const GeneralizedConnection& conn) {
                                  return evaluate(f, conn);
                                });
    auto rhs = enumerate_values(f.graph, f.descriptor,
                                [&](const GeneralizedConnection& conn) {
                                  return evaluate(f, automorphism_act(F, conn));
                                });
    return exact_permutation_report(std::move(lhs), std::move(rhs));
  }
  return paired_mc(f, budget, rng, workers,
                   [&](const GeneralizedConnection& conn, RandomStream&) {
                     return evaluate(f, automorphism_act(F, conn));
                   });
}

InvarianceReport verify_refinement_consistency(
    const CylindricalFunction& f_coarse, const Refinement& refinement,
    const Budget& budget, RandomStream& rng, int workers) {
  require_function(f_coarse);
  if (f_coarse.graph != refinement.coarse) {
    fail(ErrorCode::graph_mismatch,
         "function does not live on the refinement's coarse graph");
  }
  if (budget.mode == Budget::Mode::exact) {
    auto coarse_values =
        enumerate_values(refinement.coarse, f_coarse.descriptor,
                         [&](const GeneralizedConnection& conn) {
                           return evaluate(f_coarse, conn);
                         });
    auto fine_values =
        enumerate_values(refinement.fine, f_coarse.descriptor,
                         [&](const GeneralizedConnection& conn) {
                           return evaluate(f_coarse,
                                           restrict_connection(refinement, conn));
                         });
    std::sort(coarse_values.begin(), coarse_values.end());
    std::sort(fine_values.begin(), fine_values.end());
    InvarianceReport report;
    report.mode = Budget::Mode::exact;
    report.threshold = 0.0;
    report.lhs = coarse_values.empty()
                     ? 0.0
                     : kahan_sum(coarse_values) /
                           static_cast<double>(coarse_values.size());
    // The restriction map must hit each coarse assignment with the same
    // fiber multiplicity; sortedness makes the check a single scan.
    const std::size_t fiber = coarse_values.empty()
                                  ? 0
                                  : fine_values.size() / coarse_values.size();
    bool fibered = fiber > 0 &&
                   fine_values.size() == fiber * coarse_values.size();
    if (fibered) {
      for (std::size_t i = 0; i < fine_values.size(); ++i) {
        if (fine_values[i] != coarse_values[i / fiber]) {
          fibered = false;
          break;
        }
      }
    }
    if (fibered) {
      report.rhs = report.lhs;
      report.delta = 0.0;
      report.pass = true;
    } else {
      report.rhs = fine_values.empty()
                       ? 0.0
                       : kahan_sum(fine_values) /
                             static_cast<double>(fine_values.size());
      report.delta = report.lhs - report.rhs;
      report.pass = false;
    }
    return report;
  }
  // Pair each coarse sample with a measure-preserving random section of the
  // restriction map; the same stream drives both sides.
  CylindricalFunction coarse = f_coarse;
  return paired_mc(coarse, budget, rng, workers,
                   [&](const GeneralizedConnection& conn, RandomStream& stream) {
                     const GeneralizedConnection fine =
                         random_section(refinement, conn, stream);
                     return evaluate(f_coarse,
                                     restrict_connection(refinement, fine));
                   });
}

namespace {

double character_bound(const GroupDescriptor& d) {
  switch (d.kind) {
    case GroupKind::cyclic:
      return 1.0;
    case GroupKind::symmetric:
      return static_cast<double>(d.n);
    case GroupKind::su2:
      return 2.0;
  }
  return 1.0;
}

void require_closed(const PathWord& p, const char* what) {
  if (!p.is_closed()) {
    fail(ErrorCode::not_closed, std::string(what) + " needs a closed path; got " +
                                    p.source() + " -> " + p.target());
  }
}

}  // namespace

CylindricalFunction make_wilson(GraphPtr graph, const GroupDescriptor& d,
                                PathWord closed_path) {
  require_closed(closed_path, "wilson");
  CylindricalFunction f;
  f.graph = std::move(graph);
  f.descriptor = d;
  f.probe_paths = {std::move(closed_path)};
  f.evaluator = [](std::span<const GroupElement> h) { return character(h[0]); };
  f.bound = character_bound(d);
  f.name = "wilson";
  return f;
}

CylindricalFunction make_wilson_squared(GraphPtr graph,
                                        const GroupDescriptor& d,
                                        PathWord closed_path) {
  require_closed(closed_path, "wilson2");
  CylindricalFunction f;
  f.graph = std::move(graph);
  f.descriptor = d;
  f.probe_paths = {std::move(closed_path)};
  f.evaluator = [](std::span<const GroupElement> h) {
    const double value = character(h[0]);
    return value * value;
  };
  f.bound = character_bound(d) * character_bound(d);
  f.name = "wilson2";
  return f;
}

CylindricalFunction make_indicator_identity(GraphPtr graph,
                                            const GroupDescriptor& d,
                                            PathWord path) {
  CylindricalFunction f;
  f.graph = std::move(graph);
  f.descriptor = d;
  f.probe_paths = {std::move(path)};
  f.evaluator = [d](std::span<const GroupElement> h) {
    return equal(h[0], identity(d)) ? 1.0 : 0.0;
  };
  f.bound = 1.0;
  f.name = "indicator-identity";
  return f;
}

CylindricalFunction make_character_product(GraphPtr graph,
                                           const GroupDescriptor& d,
                                           std::vector<PathWord> closed_paths) {
  if (closed_paths.empty()) {
    fail(ErrorCode::invalid_argument, "character product needs at least one path");
  }
  for (const PathWord& p : closed_paths) require_closed(p, "character-product");
  CylindricalFunction f;
  f.graph = std::move(graph);
  f.descriptor = d;
  f.probe_paths = std::move(closed_paths);
  f.evaluator = [](std::span<const GroupElement> h) {
    double product = 1.0;
    for (const GroupElement& g : h) product *= character(g);
    return product;
  };
  f.bound = std::pow(character_bound(d),
                     static_cast<double>(f.probe_paths.size()));
  f.name = "character-product";
  return f;
}

CylindricalFunction make_constant(GraphPtr graph, const GroupDescriptor& d,
                                  double value) {
  CylindricalFunction f;
  f.graph = std::move(graph);
  f.descriptor = d;
  f.evaluator = [value](std::span<const GroupElement>) { return value; };
  f.bound = std::fabs(value);
  f.name = "constant";
  return f;
}

}  // namespace genconn
