#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace genconn {

struct PropertyResult {
  std::string name;
  long long samples = 0;
  double max_deviation = 0.0;
  bool pass = false;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<PropertyResult> properties;

  bool pass() const;
  nlohmann::json to_json() const;
};

const std::vector<std::string>& suite_names();

// Runs one named property suite. config keys are suite specific (descriptor,
// graph spec, sample counts); file references resolve against base_dir.
// Config problems throw; property failures are recorded in the report.
SuiteReport run_suite(const std::string& name, const nlohmann::json& config,
                      std::uint64_t seed,
                      const std::filesystem::path& base_dir = ".");

}  // namespace genconn
