#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fraclap/report.hpp"
#include "fraclap_cli/run_config.hpp"

namespace fraclap::cli {

/// Serialised report; keys appear in a fixed order so equal reports give
/// equal bytes. `series_files` are paths relative to the report directory.
[[nodiscard]] std::string report_json(const ExperimentReport& report, const std::vector<std::string>& series_files,
                                      const std::optional<std::string>& timestamp);

/// Header row `x_name,y_name`, then one row per sample at 17 significant digits.
[[nodiscard]] std::string series_csv(const Series& series);

/// Writes report.json and/or one CSV per series into `dir` (created if
/// missing). Returns the paths written, relative to `dir`.
std::vector<std::string> write_report(const ExperimentReport& report, const std::filesystem::path& dir, Format format,
                                      bool with_timestamp);

[[nodiscard]] std::string utc_timestamp();

}  // namespace fraclap::cli
