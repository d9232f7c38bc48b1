#pragma once

#include <filesystem>
#include <iosfwd>

#include "fraclap_cli/run_config.hpp"

namespace fraclap::cli {

enum ExitCode : int { kExitOk = 0, kExitFail = 1, kExitConfig = 2 };

/// Runs one experiment and writes its artifacts. 0 on PASS or WARN, 1 on
/// FAIL, 2 on a configuration error.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// One line per registered experiment: name, summary and default parameters.
void list_experiments(std::ostream& out);

/// Runs every experiment with its defaults into `<out_dir>/<name>/`, prints a
/// summary table and writes summary.csv. 0 iff no experiment failed.
int suite(const std::filesystem::path& out_dir, bool with_timestamp, std::ostream& out, std::ostream& err);

}  // namespace fraclap::cli
