#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "fraclap/harness.hpp"

namespace fraclap::cli {

/// Raised for anything the user can fix by changing flags or the config file.
class InvalidConfig : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownExperiment : public InvalidConfig {
 public:
  using InvalidConfig::InvalidConfig;
};

enum class Format { Json, Csv, Both };

[[nodiscard]] Format parse_format(const std::string& text);

struct RunConfig {
  std::string experiment;
  std::optional<double> s;
  std::optional<int> n;
  std::optional<int> N;
  ToleranceOverrides tolerances;
  std::filesystem::path output_dir = "fraclap_out";
  Format format = Format::Both;
  bool timestamp = true;

  [[nodiscard]] ExperimentConfig experiment_config() const { return {s, n, N, tolerances}; }
};

/// Reads flat `key = value` lines into `cfg`. Blank lines and `#` comments
/// are skipped; values may be double-quoted. Recognised keys: experiment, s,
/// n, N, out, format, timestamp and tol.<name>.
void merge_config_text(RunConfig& cfg, const std::string& text, const std::string& origin = "<config>");
void merge_config_file(RunConfig& cfg, const std::filesystem::path& path);

/// Throws InvalidConfig (or UnknownExperiment) with a message naming the
/// offending field.
void validate(const RunConfig& cfg);

}  // namespace fraclap::cli
