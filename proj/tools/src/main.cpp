#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fraclap_cli/commands.hpp"

using namespace fraclap::cli;

int main(int argc, char** argv) {
  CLI::App app{"fraclap: fractional Laplacian experiments"};
  app.require_subcommand(1);

  auto* run_cmd = app.add_subcommand("run", "run one experiment");
  std::string experiment;
  std::string config_path;
  std::optional<double> s;
  std::optional<int> n;
  std::optional<int> N;
  std::string out_dir;
  std::string format;
  std::vector<std::string> tol_flags;
  bool no_timestamp = false;
  run_cmd->add_option("experiment", experiment, "experiment name (see `fraclap list`)");
  run_cmd->add_option("--s", s, "fractional order in (0,1)");
  run_cmd->add_option("--n", n, "dimension, 1 or 2");
  run_cmd->add_option("--N", N, "grid size, a power of two in [32, 4096]");
  run_cmd->add_option("--config", config_path, "key=value config file");
  run_cmd->add_option("--out", out_dir, "output directory");
  run_cmd->add_option("--format", format, "json, csv or both");
  run_cmd->add_option("--tol", tol_flags, "tolerance override NAME=VALUE (repeatable)");
  run_cmd->add_flag("--no-timestamp", no_timestamp, "omit the timestamp from report.json");

  auto* list_cmd = app.add_subcommand("list", "list registered experiments");

  auto* suite_cmd = app.add_subcommand("suite", "run every experiment with default parameters");
  std::string suite_out = "fraclap_suite";
  bool suite_no_timestamp = false;
  suite_cmd->add_option("--out", suite_out, "output directory");
  suite_cmd->add_flag("--no-timestamp", suite_no_timestamp, "omit timestamps from the reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  if (list_cmd->parsed()) {
    list_experiments(std::cout);
    return kExitOk;
  }
  if (suite_cmd->parsed()) {
    return suite(suite_out, !suite_no_timestamp, std::cout, std::cerr);
  }

  RunConfig cfg;
  try {
    if (!config_path.empty()) {
      merge_config_file(cfg, config_path);
    }
    std::string overrides;
    if (!experiment.empty()) overrides += "experiment = " + experiment + "\n";
    if (!out_dir.empty()) overrides += "out = " + out_dir + "\n";
    if (!format.empty()) overrides += "format = " + format + "\n";
    for (const std::string& t : tol_flags) overrides += "tol." + t + "\n";
    merge_config_text(cfg, overrides, "command line");
  } catch (const InvalidConfig& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  if (s) cfg.s = s;
  if (n) cfg.n = n;
  if (N) cfg.N = N;
  if (no_timestamp) cfg.timestamp = false;
  return run(cfg, std::cout, std::cerr);
}
