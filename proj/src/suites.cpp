#include "genconn/suites.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "genconn/generators.hpp"
#include "genconn/io.hpp"
#include "genconn/measure.hpp"

namespace genconn {

namespace {

using nlohmann::json;

struct PropertyRecorder {
  PropertyResult result;
  long long failures = 0;

  explicit PropertyRecorder(std::string name) { result.name = std::move(name); }

  void observe(double deviation, double bound) {
    ++result.samples;
    result.max_deviation = std::max(result.max_deviation, deviation);
    if (deviation > bound) ++failures;
  }

  void observe_equal(bool ok) { observe(ok ? 0.0 : 1.0, 0.0); }

  PropertyResult finish(std::string note = {}) {
    result.pass = failures == 0;
    if (note.empty() && failures > 0) {
      note = std::to_string(failures) + " of " +
             std::to_string(result.samples) + " samples failed";
    }
    result.note = std::move(note);
    return result;
  }
};

GraphPtr resolve_graph(const json& spec, RandomStream& rng,
                       const std::filesystem::path& base_dir) {
  const std::string kind = spec.at("kind").get<std::string>();
  if (kind == "cycle") return cycle_graph(spec.value("n", 4));
  if (kind == "theta") return theta_graph(spec.value("edges", 3));
  if (kind == "grid") return grid_graph(spec.value("rows", 3), spec.value("cols", 3));
  if (kind == "random") {
    return random_graph(rng, spec.value("vertices", 6), spec.value("edges", 8));
  }
  if (kind == "file") {
    return load_graph(base_dir / spec.at("path").get<std::string>());
  }
  fail(ErrorCode::invalid_argument, "unknown graph kind '" + kind + "'");
}

GraphPtr config_graph(const json& config, RandomStream& rng,
                      const std::filesystem::path& base_dir,
                      const json& fallback) {
  return resolve_graph(config.contains("graph") ? config.at("graph") : fallback,
                       rng, base_dir);
}

GroupDescriptor config_descriptor(const json& config,
                                  const std::string& fallback) {
  return parse_descriptor(config.value("descriptor", fallback));
}

double elementwise_bound(const GroupDescriptor& d) {
  return d.kind == GroupKind::su2 ? 10.0 * d.tolerance : 0.0;
}

double connection_distance(const GeneralizedConnection& a,
                           const GeneralizedConnection& b) {
  double max = 0.0;
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    max = std::max(max, distance(a.values()[i], b.values()[i]));
  }
  return max;
}

// ---------------------------------------------------------------------------
// groupoid-axioms

SuiteReport groupoid_axioms_suite(const json& config, std::uint64_t seed,
                                  const std::filesystem::path& base_dir) {
  RandomStream rng(seed);
  const GraphPtr graph = config_graph(
      config, rng, base_dir, json{{"kind", "random"}, {"vertices", 6}, {"edges", 8}});
  const int samples = config.value("samples", 500);
  const int word_length = config.value("word_length", 24);
  const int retracings = config.value("retracings", 6);

  PropertyRecorder normal_form("reduce-normal-form");
  PropertyRecorder idempotent("reduce-idempotent");
  PropertyRecorder associative("compose-associative");
  PropertyRecorder identities("identity-laws");
  PropertyRecorder inverses("inverse-laws");

  for (int i = 0; i < samples; ++i) {
    const int length = static_cast<int>(rng.uniform_below(word_length + 1));
    std::vector<SignedEdge> raw = random_raw_word(rng, *graph, length);
    const std::string base = raw.empty()
                                 ? graph->edges().front().source
                                 : letter_source(*graph, raw.front());
    const PathWord reduced = reduce(graph, raw, base);
    const int extra = 1 + static_cast<int>(rng.uniform_below(retracings));
    const std::vector<SignedEdge> padded =
        insert_retracings(rng, *graph, raw, base, extra);
    normal_form.observe_equal(reduce(graph, padded, base) == reduced);
    idempotent.observe_equal(reduce(graph, reduced.letters(),
                                    reduced.source()) == reduced);

    const PathWord p1 = random_path(rng, graph, word_length / 2);
    const PathWord p2 = random_path(rng, graph, word_length / 2, p1.target());
    const PathWord p3 = random_path(rng, graph, word_length / 2, p2.target());
    associative.observe_equal(compose(compose(p3, p2), p1) ==
                              compose(p3, compose(p2, p1)));
    identities.observe_equal(
        compose(p1, PathWord::identity(graph, p1.source())) == p1 &&
        compose(PathWord::identity(graph, p1.target()), p1) == p1);
    inverses.observe_equal(
        compose(inverse_path(p1), p1) ==
            PathWord::identity(graph, p1.source()) &&
        compose(p1, inverse_path(p1)) ==
            PathWord::identity(graph, p1.target()) &&
        inverse_path(inverse_path(p1)) == p1);
  }

  SuiteReport report{"groupoid-axioms", seed, {}};
  report.properties = {normal_form.finish(), idempotent.finish(),
                       associative.finish(), identities.finish(),
                       inverses.finish()};
  return report;
}

// ---------------------------------------------------------------------------
// functoriality

SuiteReport functoriality_suite(const json& config, std::uint64_t seed,
                                const std::filesystem::path& base_dir) {
  RandomStream rng(seed);
  const GroupDescriptor descriptor = config_descriptor(config, "cyclic:3");
  const GraphPtr graph = config_graph(
      config, rng, base_dir, json{{"kind", "random"}, {"vertices", 6}, {"edges", 8}});
  const int samples = config.value("samples", 500);
  const int word_length = config.value("word_length", 16);
  const double bound = elementwise_bound(descriptor);

  PropertyRecorder multiplicative("holonomy-multiplicative");
  PropertyRecorder inv("holonomy-inverse");
  PropertyRecorder ident("holonomy-identity");
  PropertyRecorder retracing("holonomy-retracing-insensitive");

  for (int i = 0; i < samples; ++i) {
    const GeneralizedConnection conn = random_connection(graph, descriptor, rng);
    const auto [second, first] = random_composable_pair(rng, graph, word_length);
    multiplicative.observe(
        distance(holonomy(conn, compose(second, first)),
                 multiply(holonomy(conn, second), holonomy(conn, first))),
        bound);
    inv.observe(distance(holonomy(conn, inverse_path(first)),
                         inverse(holonomy(conn, first))),
                bound);
    const std::size_t v = rng.uniform_below(graph->vertices().size());
    ident.observe(distance(holonomy(conn, PathWord::identity(
                                              graph, graph->vertices()[v].id)),
                           identity(descriptor)),
                  0.0);
    std::vector<SignedEdge> raw =
        random_raw_word(rng, *graph, static_cast<int>(rng.uniform_below(word_length + 1)));
    const std::string base = raw.empty()
                                 ? graph->edges().front().source
                                 : letter_source(*graph, raw.front());
    const std::vector<SignedEdge> padded =
        insert_retracings(rng, *graph, raw, base, 3);
    retracing.observe(distance(holonomy(conn, reduce(graph, raw, base)),
                               holonomy(conn, reduce(graph, padded, base))),
                      0.0);
  }

  SuiteReport report{"functoriality", seed, {}};
  report.properties = {multiplicative.finish(), inv.finish(), ident.finish(),
                       retracing.finish()};
  return report;
}

// ---------------------------------------------------------------------------
// gauge

std::vector<PathWord> sample_paths_for_covariance(RandomStream& rng,
                                                  const GraphPtr& graph,
                                                  int count, int word_length) {
  std::vector<PathWord> paths;
  for (const OrientedEdge& e : graph->edges()) {
    paths.push_back(reduce(graph, {SignedEdge{e.id, EdgeSign::forward}}));
  }
  for (int i = 0; i < count; ++i) {
    paths.push_back(random_path(rng, graph, word_length));
    paths.push_back(random_closed_path(rng, graph, word_length));
  }
  return paths;
}

SuiteReport gauge_suite(const json& config, std::uint64_t seed,
                        const std::filesystem::path& base_dir) {
  RandomStream rng(seed);
  const GroupDescriptor descriptor = config_descriptor(config, "cyclic:3");
  const GraphPtr graph =
      config_graph(config, rng, base_dir, json{{"kind", "cycle"}, {"n", 4}});
  const int samples = config.value("samples", 500);
  const int word_length = config.value("word_length", 12);
  const double bound = elementwise_bound(descriptor);

  PropertyRecorder covariance("gauge-path-covariance");
  PropertyRecorder wilson("wilson-gauge-invariance");
  PropertyRecorder trivial("identity-gauge-trivial");
  PropertyRecorder compat("gauge-composition-compatible");

  for (int i = 0; i < samples; ++i) {
    const GeneralizedConnection conn = random_connection(graph, descriptor, rng);
    const GaugeTransformation g = random_gauge(rng, graph, descriptor);
    const GeneralizedConnection acted = gauge_act(g, conn);
    const PathWord p = random_path(rng, graph, word_length);
    covariance.observe(
        distance(holonomy(acted, p),
                 multiply(multiply(g.value(p.target()), holonomy(conn, p)),
                          inverse(g.value(p.source())))),
        bound);
    const PathWord loop = random_closed_path(rng, graph, word_length);
    wilson.observe(std::fabs(wilson_loop(acted, loop) - wilson_loop(conn, loop)),
                   descriptor.is_finite() ? 0.0 : bound);
    trivial.observe(connection_distance(
                        gauge_act(identity_gauge(graph, descriptor), conn), conn),
                    descriptor.is_finite() ? 0.0 : 1e-12);
    const GaugeTransformation g2 = random_gauge(rng, graph, descriptor);
    compat.observe(connection_distance(gauge_act(compose_gauge(g2, g), conn),
                                       gauge_act(g2, gauge_act(g, conn))),
                   bound);
  }

  SuiteReport report{"gauge", seed, {}};
  report.properties = {covariance.finish(), wilson.finish(), trivial.finish(),
                       compat.finish()};

  if (config.value("exhaustive", false)) {
    if (!descriptor.is_finite()) {
      fail(ErrorCode::invalid_argument, "exhaustive mode needs a finite group");
    }
    PropertyRecorder exhaustive("gauge-covariance-exhaustive");
    RandomStream path_rng = rng.spawn(1001);
    const std::vector<PathWord> paths =
        sample_paths_for_covariance(path_rng, graph, 4, word_length);
    enumerate_connections(graph, descriptor, [&](const GeneralizedConnection& conn) {
      enumerate_gauge_transformations(
          graph, descriptor, [&](const GaugeTransformation& g) {
            const GeneralizedConnection acted = gauge_act(g, conn);
            for (const PathWord& p : paths) {
              exhaustive.observe(
                  distance(holonomy(acted, p),
                           multiply(multiply(g.value(p.target()),
                                             holonomy(conn, p)),
                                    inverse(g.value(p.source())))),
                  0.0);
              if (p.is_closed()) {
                exhaustive.observe(
                    std::fabs(wilson_loop(acted, p) - wilson_loop(conn, p)),
                    0.0);
              }
            }
          });
    });
    report.properties.push_back(exhaustive.finish());
  }
  return report;
}

// ---------------------------------------------------------------------------
// automorphism

GroupoidAutomorphism random_family_automorphism(RandomStream& rng,
                                                const GraphPtr& graph) {
  // Cycle graphs carry the dihedral family, theta graphs the permutation
  // plus pole-swap family.
  if (graph->vertices().size() == 2 && graph->has_vertex("x") &&
      graph->has_vertex("y")) {
    return random_theta_automorphism(rng, graph);
  }
  return random_cycle_automorphism(rng, graph);
}

SuiteReport automorphism_suite(const json& config, std::uint64_t seed,
                               const std::filesystem::path& base_dir) {
  RandomStream rng(seed);
  const GroupDescriptor descriptor = config_descriptor(config, "cyclic:3");
  const GraphPtr graph =
      config_graph(config, rng, base_dir, json{{"kind", "cycle"}, {"n", 6}});
  const std::string graph_kind =
      config.contains("graph") ? config.at("graph").value("kind", "cycle")
                               : "cycle";
  if (graph_kind != "cycle" && graph_kind != "theta") {
    fail(ErrorCode::invalid_argument,
         "automorphism suite needs a cycle or theta graph");
  }
  const int samples = config.value("samples", 500);
  const int word_length = config.value("word_length", 12);
  const double bound = elementwise_bound(descriptor);

  PropertyRecorder evaluation("automorphism-evaluation-identity");
  PropertyRecorder trivial("identity-automorphism-trivial");
  PropertyRecorder compat("automorphism-composition-compatible");
  PropertyRecorder functorial("automorphism-path-functorial");

  for (int i = 0; i < samples; ++i) {
    const GeneralizedConnection conn = random_connection(graph, descriptor, rng);
    const GroupoidAutomorphism f = random_family_automorphism(rng, graph);
    const PathWord p = random_path(rng, graph, word_length);
    evaluation.observe(
        distance(holonomy(automorphism_act(f, conn), p),
                 holonomy(conn, apply_to_path(inverse_auto(f), p))),
        bound);
    trivial.observe(
        connection_distance(
            automorphism_act(GroupoidAutomorphism::identity(graph), conn), conn),
        0.0);
    const GroupoidAutomorphism f2 = random_family_automorphism(rng, graph);
    compat.observe(
        connection_distance(automorphism_act(compose_auto(f2, f), conn),
                            automorphism_act(f2, automorphism_act(f, conn))),
        bound);
    const auto [second, first] = random_composable_pair(rng, graph, word_length);
    functorial.observe_equal(
        apply_to_path(f, compose(second, first)) ==
            compose(apply_to_path(f, second), apply_to_path(f, first)) &&
        apply_to_path(f, PathWord::identity(graph, first.source())) ==
            PathWord::identity(graph, f.apply(first.source())));
  }

  SuiteReport report{"automorphism", seed, {}};
  report.properties = {evaluation.finish(), trivial.finish(), compat.finish(),
                       functorial.finish()};
  return report;
}

// ---------------------------------------------------------------------------
// projective

SuiteReport projective_suite(const json& config, std::uint64_t seed,
                             const std::filesystem::path& base_dir) {
  RandomStream rng(seed);
  SuiteReport report{"projective", seed, {}};

  // Data-verification mode: check that a supplied fine connection restricts
  // to a supplied coarse connection along a supplied refinement.
  if (config.contains("refinement")) {
    const GraphPtr coarse =
        load_graph(base_dir / config.at("coarse_graph").get<std::string>());
    const GraphPtr fine =
        load_graph(base_dir / config.at("fine_graph").get<std::string>());
    const Refinement refinement = load_refinement(
        base_dir / config.at("refinement").get<std::string>(), coarse, fine);
    const GeneralizedConnection fine_conn = load_connection(
        base_dir / config.at("fine_connection").get<std::string>(), fine);
    const GeneralizedConnection coarse_conn = load_connection(
        base_dir / config.at("coarse_connection").get<std::string>(), coarse);
    const double bound = elementwise_bound(fine_conn.descriptor());
    PropertyRecorder matches("restriction-matches-data");
    const GeneralizedConnection restricted =
        restrict_connection(refinement, fine_conn);
    for (std::size_t i = 0; i < restricted.values().size(); ++i) {
      matches.observe(
          distance(restricted.values()[i], coarse_conn.values()[i]), bound);
    }
    report.properties = {matches.finish()};
    return report;
  }

  const GroupDescriptor descriptor = config_descriptor(config, "cyclic:3");
  const GraphPtr graph =
      config_graph(config, rng, base_dir, json{{"kind", "cycle"}, {"n", 4}});
  const int samples = config.value("samples", 200);
  const int word_length = config.value("word_length", 10);
  const double bound = elementwise_bound(descriptor);

  PropertyRecorder commutes("restriction-commutes-with-evaluation");
  PropertyRecorder composite("composite-refinement-functorial");
  PropertyRecorder section("section-restricts-back");

  for (int i = 0; i < samples; ++i) {
    const std::size_t edge_index = rng.uniform_below(graph->edges().size());
    const std::string edge_id = graph->edges()[edge_index].id;
    SubdivisionSpec spec;
    spec.new_vertex_id = "m" + std::to_string(i);
    const auto [fine, refinement] = subdivide_edge(graph, edge_id, spec);
    const GeneralizedConnection fine_conn =
        random_connection(fine, descriptor, rng);
    std::vector<PathWord> coarse_paths;
    for (int k = 0; k < 4; ++k) {
      coarse_paths.push_back(random_path(rng, graph, word_length));
    }
    const ConsistencyReport consistency =
        check_consistency(refinement, fine_conn, coarse_paths);
    commutes.observe(consistency.max_deviation, consistency.bound);

    // Second subdivision of one of the fresh halves; the composite bond must
    // equal the two-step restriction.
    SubdivisionSpec spec2;
    spec2.new_vertex_id = "mm" + std::to_string(i);
    const auto [finest, refinement2] =
        subdivide_edge(fine, edge_id + "_a", spec2);
    const Refinement composed = compose_refinements(refinement, refinement2);
    const GeneralizedConnection finest_conn =
        random_connection(finest, descriptor, rng);
    composite.observe(
        connection_distance(
            restrict_connection(composed, finest_conn),
            restrict_connection(refinement,
                                restrict_connection(refinement2, finest_conn))),
        bound);
    composite.observe_equal(
        composed.expansion.at(edge_id).letters().size() == 3);

    const GeneralizedConnection coarse_conn =
        random_connection(graph, descriptor, rng);
    section.observe(
        connection_distance(
            restrict_connection(refinement,
                                random_section(refinement, coarse_conn, rng)),
            coarse_conn),
        bound);
  }

  report.properties = {commutes.finish(), composite.finish(), section.finish()};

  if (descriptor.is_finite()) {
    // Fiber count over one subdivision: every coarse connection has exactly
    // |G| preimages.
    const long long order = descriptor.order();
    double fine_total = static_cast<double>(order);
    for (std::size_t i = 0; i < graph->edges().size(); ++i) {
      fine_total *= static_cast<double>(order);
    }
    if (fine_total <= 1e5) {
      PropertyRecorder fibers("subdivision-fiber-count");
      SubdivisionSpec spec;
      spec.new_vertex_id = "mf";
      const auto [fine, refinement] =
          subdivide_edge(graph, graph->edges().front().id, spec);
      std::map<std::string, long long> fiber_sizes;
      enumerate_connections(fine, descriptor,
                            [&](const GeneralizedConnection& conn) {
                              const GeneralizedConnection coarse_conn =
                                  restrict_connection(refinement, conn);
                              std::string key;
                              for (const GroupElement& v : coarse_conn.values()) {
                                key += to_string(v) + "|";
                              }
                              ++fiber_sizes[key];
                            });
      long long expected_count = 1;
      for (std::size_t i = 0; i < graph->edges().size(); ++i) {
        expected_count *= order;
      }
      fibers.observe_equal(static_cast<long long>(fiber_sizes.size()) ==
                           expected_count);
      for (const auto& [key, size] : fiber_sizes) {
        fibers.observe(std::fabs(static_cast<double>(size - order)), 0.0);
      }
      report.properties.push_back(fibers.finish());
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// measure

SuiteReport measure_suite(const json& config, std::uint64_t seed,
                          const std::filesystem::path& base_dir) {
  RandomStream rng(seed);
  const GroupDescriptor descriptor = config_descriptor(config, "cyclic:3");
  const GraphPtr graph =
      config_graph(config, rng, base_dir, json{{"kind", "cycle"}, {"n", 2}});
  const long long mc_samples = config.value("mc_samples", 20000);
  const int corpus = config.value("corpus", 20);
  const long long corpus_samples = config.value("corpus_samples", 10000);
  const int workers = config.value("workers", 1);

  SuiteReport report{"measure", seed, {}};

  // Normalization holds in both modes for any group.
  {
    PropertyRecorder normalization("normalization");
    const CylindricalFunction one = make_constant(graph, descriptor, 1.0);
    if (descriptor.is_finite()) {
      const IntegralResult exact =
          integrate(one, Budget::exact(), rng, workers);
      normalization.observe(std::fabs(exact.value - 1.0), 0.0);
      normalization.observe_equal(exact.exact_fraction.has_value() &&
                                  *exact.exact_fraction == "1");
    }
    const IntegralResult mc =
        integrate(one, Budget::monte_carlo(mc_samples), rng, workers);
    normalization.observe(std::fabs(mc.value - 1.0) + mc.std_error, 0.0);
    report.properties.push_back(normalization.finish());
  }

  const PathWord loop = [&] {
    RandomStream loop_rng = rng.spawn(7);
    for (int attempt = 0; attempt < 64; ++attempt) {
      PathWord candidate = random_closed_path(loop_rng, graph, 6);
      if (!candidate.is_identity()) return candidate;
    }
    fail(ErrorCode::invalid_argument,
         "graph admits no non-trivial closed path for the measure suite");
  }();

  if (descriptor.is_finite()) {
    {
      PropertyRecorder indicator("indicator-identity-integral");
      const PathWord single =
          reduce(graph, {SignedEdge{graph->edges().front().id,
                                    EdgeSign::forward}});
      const IntegralResult exact = integrate(
          make_indicator_identity(graph, descriptor, single), Budget::exact(),
          rng, workers);
      indicator.observe(
          std::fabs(exact.value - 1.0 / static_cast<double>(descriptor.order())),
          0.0);
      indicator.observe_equal(
          exact.exact_fraction.has_value() &&
          *exact.exact_fraction ==
              "1/" + std::to_string(descriptor.order()));
      report.properties.push_back(indicator.finish());
    }
    {
      PropertyRecorder agreement("mc-matches-exact");
      RandomStream corpus_rng = rng.spawn(11);
      for (int i = 0; i < corpus; ++i) {
        const CylindricalFunction f =
            random_cylindrical(corpus_rng, graph, descriptor, 2, 3);
        const IntegralResult exact =
            integrate(f, Budget::exact(), corpus_rng, workers);
        const IntegralResult mc = integrate(
            f, Budget::monte_carlo(corpus_samples), corpus_rng, workers);
        const double allowance = 3.0 * mc.std_error + 1e-12;
        agreement.observe(
            std::fabs(mc.value - exact.value) / std::max(allowance, 1e-300),
            1.0);
      }
      report.properties.push_back(agreement.finish());
    }
  } else {
    PropertyRecorder moments("trace-moments");
    const IntegralResult first = integrate(
        make_wilson(graph, descriptor, loop), Budget::monte_carlo(mc_samples),
        rng, workers);
    moments.observe(std::fabs(first.value - 0.0),
                    3.0 * first.std_error + 1e-12);
    const IntegralResult second = integrate(
        make_wilson_squared(graph, descriptor, loop),
        Budget::monte_carlo(mc_samples), rng, workers);
    moments.observe(std::fabs(second.value - 1.0),
                    3.0 * second.std_error + 1e-12);
    report.properties.push_back(moments.finish());
  }

  const Budget push_budget = descriptor.is_finite()
                                 ? Budget::exact()
                                 : Budget::monte_carlo(mc_samples);
  {
    PropertyRecorder gauge_push("gauge-pushforward-invariant");
    const CylindricalFunction f = make_wilson(graph, descriptor, loop);
    const GaugeTransformation g = random_gauge(rng, graph, descriptor);
    const InvarianceReport r =
        verify_gauge_invariance(f, g, push_budget, rng, workers);
    gauge_push.observe(std::fabs(r.delta), r.threshold);
    report.properties.push_back(gauge_push.finish());
  }
  {
    PropertyRecorder auto_push("automorphism-pushforward-invariant");
    const CylindricalFunction f = make_wilson(graph, descriptor, loop);
    const GroupoidAutomorphism F = random_family_automorphism(rng, graph);
    const InvarianceReport r =
        verify_automorphism_invariance(f, F, push_budget, rng, workers);
    auto_push.observe(std::fabs(r.delta), r.threshold);
    report.properties.push_back(auto_push.finish());
  }
  {
    PropertyRecorder refine_push("refinement-pushforward-invariant");
    SubdivisionSpec spec;
    spec.new_vertex_id = "m0";
    const auto [fine, refinement] =
        subdivide_edge(graph, graph->edges().front().id, spec);
    const CylindricalFunction f = make_wilson(graph, descriptor, loop);
    const InvarianceReport r = verify_refinement_consistency(
        f, refinement, push_budget, rng, workers);
    refine_push.observe(std::fabs(r.delta), r.threshold);
    report.properties.push_back(refine_push.finish());
  }
  return report;
}

}  // namespace

bool SuiteReport::pass() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.pass; });
}

json SuiteReport::to_json() const {
  json props = json::array();
  for (const PropertyResult& p : properties) {
    json pj = {{"name", p.name},
               {"samples", p.samples},
               {"max_deviation", p.max_deviation},
               {"pass", p.pass}};
    if (!p.note.empty()) pj["note"] = p.note;
    props.push_back(std::move(pj));
  }
  return {{"suite", suite},
          {"seed", seed},
          {"properties", props},
          {"pass", pass()}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "groupoid-axioms", "functoriality", "gauge",
      "automorphism",    "projective",    "measure"};
  return names;
}

SuiteReport run_suite(const std::string& name, const json& config,
                      std::uint64_t seed,
                      const std::filesystem::path& base_dir) {
  try {
    if (name == "groupoid-axioms") {
      return groupoid_axioms_suite(config, seed, base_dir);
    }
    if (name == "functoriality") {
      return functoriality_suite(config, seed, base_dir);
    }
    if (name == "gauge") return gauge_suite(config, seed, base_dir);
    if (name == "automorphism") return automorphism_suite(config, seed, base_dir);
    if (name == "projective") return projective_suite(config, seed, base_dir);
    if (name == "measure") return measure_suite(config, seed, base_dir);
  } catch (const json::exception& e) {
    fail(ErrorCode::invalid_argument,
         std::string("suite config error: ") + e.what());
  }
  fail(ErrorCode::invalid_argument, "unknown suite '" + name + "'");
}

}  // namespace genconn
