#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "genconn/connection.hpp"
#include "genconn/projective.hpp"
#include "genconn/symmetry.hpp"

namespace genconn {

// Parses a JSON file; syntax errors surface as parse-error with line:column.
nlohmann::json load_json_file(const std::filesystem::path& path);

// Canonical serialization used for every emitted report: sorted keys,
// two-space indent, trailing newline. Byte-stable for identical content.
std::string dump_json(const nlohmann::json& j);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

// Content hash of a file, as "fnv1a:<16 hex digits>".
std::string file_digest(const std::filesystem::path& path);

GraphPtr graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const EmbeddedGraph& graph);
GraphPtr load_graph(const std::filesystem::path& path);

GeneralizedConnection connection_from_json(const nlohmann::json& j,
                                           const GraphPtr& graph);
nlohmann::json connection_to_json(const GeneralizedConnection& conn);
GeneralizedConnection load_connection(const std::filesystem::path& path,
                                      const GraphPtr& graph);

GaugeTransformation gauge_from_json(const nlohmann::json& j,
                                    const GraphPtr& graph);
nlohmann::json gauge_to_json(const GaugeTransformation& gauge);
GaugeTransformation load_gauge(const std::filesystem::path& path,
                               const GraphPtr& graph);

GroupoidAutomorphism automorphism_from_json(const nlohmann::json& j,
                                            const GraphPtr& graph);
nlohmann::json automorphism_to_json(const GroupoidAutomorphism& F);
GroupoidAutomorphism load_automorphism(const std::filesystem::path& path,
                                       const GraphPtr& graph);

Refinement refinement_from_json(const nlohmann::json& j, const GraphPtr& coarse,
                                const GraphPtr& fine);
nlohmann::json refinement_to_json(const Refinement& refinement);
Refinement load_refinement(const std::filesystem::path& path,
                           const GraphPtr& coarse, const GraphPtr& fine);

SmoothConnectionSpec smooth_spec_from_json(const nlohmann::json& j);
nlohmann::json smooth_spec_to_json(const SmoothConnectionSpec& spec);
SmoothConnectionSpec load_smooth_spec(const std::filesystem::path& path);

}  // namespace genconn
