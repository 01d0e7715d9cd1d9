// Batch front end: holonomy evaluation, property suites, Haar-measure
// integration. Every run emits a manifest with input digests so reruns are
// byte-reproducible.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "genconn/generators.hpp"
#include "genconn/io.hpp"
#include "genconn/measure.hpp"
#include "genconn/suites.hpp"
#include "genconn/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string join_command(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    if (i) out += ' ';
    out += argv[i];
  }
  return out;
}

void write_manifest(const fs::path& out_dir, const std::string& command,
                    const std::vector<std::string>& inputs,
                    const std::vector<std::string>& outputs,
                    std::uint64_t seed) {
  json digest = json::object();
  for (const std::string& file : inputs) {
    digest[file] = genconn::file_digest(file);
  }
  const json manifest = {{"command", command},
                         {"inputs", digest},
                         {"outputs", outputs},
                         {"seed", seed},
                         {"version", genconn::kVersion}};
  genconn::write_json_file(out_dir / "manifest.json", manifest);
}

genconn::CylindricalFunction build_integrand(
    const std::string& name, const genconn::GraphPtr& graph,
    const genconn::GroupDescriptor& descriptor,
    const std::vector<std::string>& path_literals) {
  auto parse_paths = [&] {
    std::vector<genconn::PathWord> paths;
    for (const std::string& literal : path_literals) {
      paths.push_back(genconn::parse_path(graph, literal));
    }
    return paths;
  };
  auto single_path = [&]() -> genconn::PathWord {
    if (path_literals.size() != 1) {
      genconn::fail(genconn::ErrorCode::invalid_argument,
                    "integrand '" + name + "' needs exactly one --path");
    }
    return genconn::parse_path(graph, path_literals.front());
  };
  if (name == "wilson") {
    return genconn::make_wilson(graph, descriptor, single_path());
  }
  if (name == "wilson2") {
    return genconn::make_wilson_squared(graph, descriptor, single_path());
  }
  if (name == "indicator-identity") {
    return genconn::make_indicator_identity(graph, descriptor, single_path());
  }
  if (name == "character-product") {
    if (path_literals.empty()) {
      genconn::fail(genconn::ErrorCode::invalid_argument,
                    "character-product needs at least one --path");
    }
    return genconn::make_character_product(graph, descriptor, parse_paths());
  }
  if (name.rfind("constant:", 0) == 0) {
    return genconn::make_constant(graph, descriptor,
                                  std::stod(name.substr(9)));
  }
  genconn::fail(genconn::ErrorCode::invalid_argument,
                "unknown integrand '" + name +
                    "' (expected wilson, wilson2, indicator-identity, "
                    "character-product, constant:<v>)");
}

int run_holonomy(const std::string& command, const std::string& graph_file,
                 const std::string& connection_file,
                 const std::string& path_literal, const fs::path& out_dir,
                 std::uint64_t seed) {
  const genconn::GraphPtr graph = genconn::load_graph(graph_file);
  const genconn::GeneralizedConnection conn =
      genconn::load_connection(connection_file, graph);
  const genconn::PathWord path = genconn::parse_path(graph, path_literal);
  const genconn::GroupElement element = genconn::holonomy(conn, path);

  std::cout << "path: " << path_literal << "\n";
  std::cout << "reduced: " << genconn::to_literal(path) << "\n";
  std::cout << "element: " << genconn::to_string(element) << "\n";

  const json result = {{"command", "holonomy"},
                       {"path", path_literal},
                       {"reduced", genconn::to_literal(path)},
                       {"descriptor", genconn::to_string(conn.descriptor())},
                       {"element", genconn::to_string(element)}};
  genconn::write_json_file(out_dir / "holonomy.json", result);
  write_manifest(out_dir, command, {graph_file, connection_file},
                 {"holonomy.json"}, seed);
  return 0;
}

int run_suite_cmd(const std::string& command, const std::string& suite_name,
                  const std::string& config_file, const fs::path& out_dir,
                  std::uint64_t seed) {
  const json config = genconn::load_json_file(config_file);
  const fs::path base_dir = fs::path(config_file).parent_path();
  const genconn::SuiteReport report =
      genconn::run_suite(suite_name, config, seed, base_dir);

  for (const genconn::PropertyResult& p : report.properties) {
    std::cout << (p.pass ? "PASS " : "FAIL ") << p.name
              << " samples=" << p.samples
              << " max_deviation=" << p.max_deviation;
    if (!p.note.empty()) std::cout << " (" << p.note << ")";
    std::cout << "\n";
  }
  std::cout << "suite " << report.suite << ": "
            << (report.pass() ? "PASS" : "FAIL") << "\n";

  genconn::write_json_file(out_dir / "report.json", report.to_json());
  write_manifest(out_dir, command, {config_file}, {"report.json"}, seed);
  return report.pass() ? 0 : 1;
}

int run_integrate(const std::string& command, const std::string& graph_file,
                  const std::string& descriptor_text,
                  const std::string& integrand,
                  const std::vector<std::string>& path_literals,
                  const std::string& mode, long long samples,
                  std::uint64_t seed, int workers, const fs::path& out_dir) {
  const genconn::GraphPtr graph = genconn::load_graph(graph_file);
  const genconn::GroupDescriptor descriptor =
      genconn::parse_descriptor(descriptor_text);
  const genconn::CylindricalFunction f =
      build_integrand(integrand, graph, descriptor, path_literals);

  genconn::Budget budget;
  if (mode == "exact") {
    budget = genconn::Budget::exact();
  } else if (mode == "mc") {
    budget = genconn::Budget::monte_carlo(samples);
  } else {
    genconn::fail(genconn::ErrorCode::invalid_argument,
                  "mode must be 'exact' or 'mc'");
  }
  genconn::RandomStream rng(seed);
  const genconn::IntegralResult result =
      genconn::integrate(f, budget, rng, workers);

  if (result.mode == genconn::Budget::Mode::exact) {
    std::cout << "value = ";
    if (result.exact_fraction) {
      std::cout << *result.exact_fraction << " = ";
    }
    std::cout << result.value << " (exact enumeration)\n";
  } else {
    std::cout << "value = " << result.value << " +/- " << result.std_error
              << " (" << result.samples << " samples)\n";
  }

  json record = {{"command", "integrate"},
                 {"graph", graph->name()},
                 {"descriptor", genconn::to_string(descriptor)},
                 {"integrand", integrand},
                 {"paths", path_literals},
                 {"mode", mode},
                 {"value", result.value},
                 {"samples", result.samples},
                 {"std_error", result.std_error},
                 {"seed", seed},
                 {"workers", workers}};
  if (result.exact_fraction) record["exact_fraction"] = *result.exact_fraction;
  genconn::write_json_file(out_dir / "result.json", record);
  write_manifest(out_dir, command, {graph_file}, {"result.json"}, seed);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized connections over graph-generated path groupoids"};
  app.set_version_flag("--version", genconn::kVersion);
  app.require_subcommand(1);

  std::string graph_file, connection_file, path_literal, out_dir = ".";
  std::uint64_t seed = 0;

  CLI::App* holonomy = app.add_subcommand(
      "holonomy", "evaluate a connection on a path");
  holonomy->add_option("--graph", graph_file, "graph file")->required();
  holonomy->add_option("--connection", connection_file, "connection file")
      ->required();
  holonomy->add_option("--path", path_literal,
                       "path literal, e.g. e1,e2^-1 or @x")
      ->required();
  holonomy->add_option("--out", out_dir, "output directory");
  holonomy->add_option("--seed", seed, "random seed (recorded)");

  std::string suite_name, config_file;
  CLI::App* suite = app.add_subcommand("suite", "run a property suite");
  suite->add_option("--suite", suite_name, "suite name")
      ->required()
      ->check(CLI::IsMember(genconn::suite_names()));
  suite->add_option("--config", config_file, "suite config file")->required();
  suite->add_option("--out", out_dir, "output directory");
  suite->add_option("--seed", seed, "random seed");

  std::string descriptor_text, integrand, mode = "mc";
  std::vector<std::string> path_literals;
  long long samples = 10000;
  int workers = 1;
  CLI::App* integrate = app.add_subcommand(
      "integrate", "integrate a cylindrical function against the product "
                   "Haar measure");
  integrate->add_option("--graph", graph_file, "graph file")->required();
  integrate->add_option("--descriptor", descriptor_text,
                        "group descriptor, e.g. cyclic:3 or su2")
      ->required();
  integrate->add_option("--integrand", integrand, "integrand name")->required();
  integrate->add_option("--path", path_literals,
                        "path literal (repeatable)");
  integrate->add_option("--mode", mode, "exact or mc");
  integrate->add_option("--samples", samples, "monte carlo sample count");
  integrate->add_option("--seed", seed, "random seed");
  integrate->add_option("--workers", workers, "monte carlo worker count");
  integrate->add_option("--out", out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = join_command(argc, argv);
  std::cout.precision(17);
  try {
    std::filesystem::create_directories(out_dir);
    if (holonomy->parsed()) {
      return run_holonomy(command, graph_file, connection_file, path_literal,
                          out_dir, seed);
    }
    if (suite->parsed()) {
      return run_suite_cmd(command, suite_name, config_file, out_dir, seed);
    }
    if (integrate->parsed()) {
      return run_integrate(command, graph_file, descriptor_text, integrand,
                           path_literals, mode, samples, seed, workers,
                           out_dir);
    }
  } catch (const genconn::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
