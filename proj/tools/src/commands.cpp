#include "fraclap_cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "fraclap/error.hpp"
#include "fraclap_cli/report_writer.hpp"

namespace fraclap::cli {

namespace {

void print_report(const ExperimentReport& r, std::ostream& out) {
  out << r.name << ": " << to_string(r.verdict()) << "\n";
  for (const auto& [k, v] : r.metrics) {
    out << "  " << std::left << std::setw(32) << k << std::setprecision(6) << v << "\n";
  }
  for (const Tolerance& t : r.tolerances) {
    if (!t.passed) {
      out << "  failed " << t.name << ": " << t.measured << " " << t.comparator << " " << t.value << "\n";
    }
  }
  for (const std::string& w : r.warnings) {
    out << "  warning: " << w << "\n";
  }
}

std::string defaults_text(const ExperimentDefaults& d) {
  std::ostringstream os;
  os << "s=" << d.s << " n=" << d.n;
  if (d.N) {
    os << " N=" << *d.N;
  }
  return os.str();
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
  } catch (const InvalidConfig& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  const ExperimentInfo* info = find_experiment(cfg.experiment);
  ExperimentReport report;
  try {
    report = info->run(cfg.experiment_config());
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    err << cfg.experiment << " aborted: " << e.what() << "\n";
    return kExitFail;
  }
  const auto files = write_report(report, cfg.output_dir, cfg.format, cfg.timestamp);
  print_report(report, out);
  for (const std::string& f : files) {
    out << "  wrote " << (cfg.output_dir / f).string() << "\n";
  }
  return report.verdict() == Verdict::Fail ? kExitFail : kExitOk;
}

void list_experiments(std::ostream& out) {
  for (const ExperimentInfo& e : experiments()) {
    out << std::left << std::setw(28) << e.name << std::setw(20) << defaults_text(e.defaults) << e.summary << "\n";
  }
}

int suite(const std::filesystem::path& out_dir, bool with_timestamp, std::ostream& out, std::ostream& err) {
  std::filesystem::create_directories(out_dir);
  std::ostringstream summary;
  summary << "experiment,verdict,failed_tolerances\n";
  out << std::left << std::setw(28) << "experiment" << std::setw(9) << "verdict" << std::setw(10) << "seconds"
      << "failed\n";
  bool any_fail = false;
  for (const ExperimentInfo& e : experiments()) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string verdict;
    std::string failed;
    try {
      const ExperimentReport r = e.run({});
      write_report(r, out_dir / e.name, Format::Both, with_timestamp);
      verdict = to_string(r.verdict());
      for (const Tolerance& t : r.tolerances) {
        if (!t.passed) {
          failed += (failed.empty() ? "" : ";") + t.name;
        }
      }
    } catch (const Error& ex) {
      verdict = "FAIL";
      failed = "aborted";
      err << e.name << " aborted: " << ex.what() << "\n";
    }
    any_fail = any_fail || verdict == "FAIL";
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out << std::left << std::setw(28) << e.name << std::setw(9) << verdict << std::setw(10) << std::fixed
        << std::setprecision(2) << secs << failed << "\n";
    summary << e.name << "," << verdict << "," << failed << "\n";
  }
  std::ofstream(out_dir / "summary.csv", std::ios::binary) << summary.str();
  return any_fail ? kExitFail : kExitOk;
}

}  // namespace fraclap::cli
