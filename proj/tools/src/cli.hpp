#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "cfmix/builder.hpp"
#include "cfmix/group.hpp"

namespace cfmix::cli {

enum ExitCode : int { kSuccess = 0, kConditionFailure = 1, kConfigError = 2 };

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Command line values that take precedence over the config file.
struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> samples;
  std::optional<int> horizon;
  std::optional<int> max_level;
};

struct ExperimentConfig {
  GroupDescriptor group = GroupDescriptor::integer_lattice(1);
  int depth = 1;
  std::vector<int> growth_profile;
  int horizon = 1;
  std::uint64_t seed = 1;
  BuildOptions build;
  // Subcommand sections, resolved against the sequence when the command runs.
  nlohmann::json mix = nlohmann::json::object();
  nlohmann::json entropy = nlohmann::json::object();
  nlohmann::json sample = nlohmann::json::object();
};

// Throws ConfigError on any invalid or missing field.
ExperimentConfig parse_config(const nlohmann::json& j, const Overrides& overrides = {});
ExperimentConfig load_config(const std::filesystem::path& path, const Overrides& overrides = {});

// Each command writes into `out` (created if needed) and returns an ExitCode.
//   build    sequence.json, conditions.json
//   verify   conditions.json
//   mix      mixing.csv, envelope.csv
//   entropy  entropy.csv
//   sample   configuration.json
int cmd_build(const ExperimentConfig& config, const std::filesystem::path& out, std::ostream& log);
int cmd_verify(const std::filesystem::path& sequence, const std::filesystem::path& out,
               std::ostream& log);
int cmd_mix(const ExperimentConfig& config, const std::filesystem::path& sequence,
            const std::filesystem::path& out, std::ostream& log);
int cmd_entropy(const ExperimentConfig& config, const std::filesystem::path& sequence,
                const std::filesystem::path& out, std::ostream& log);
int cmd_sample(const ExperimentConfig& config, const std::filesystem::path& sequence,
               const std::filesystem::path& out, std::ostream& log);

// Entry point used by main(); parses argv with CLI11.
int run(int argc, char** argv);

}  // namespace cfmix::cli
