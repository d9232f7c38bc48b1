#include "fraclap_cli/report_writer.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <ctime>

#include "json.hpp"

namespace fraclap::cli {

namespace {

using nlohmann::ordered_json;

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out << text;
}

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string report_json(const ExperimentReport& report, const std::vector<std::string>& series_files,
                        const std::optional<std::string>& timestamp) {
  ordered_json j;
  j["name"] = report.name;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : report.params) {
    std::visit([&, &key = k](const auto& x) { params[key] = x; }, v);
  }
  j["params"] = params;
  ordered_json metrics = ordered_json::object();
  for (const auto& [k, v] : report.metrics) {
    metrics[k] = v;
  }
  j["metrics"] = metrics;
  j["verdict"] = to_string(report.verdict());
  j["series_files"] = series_files;
  ordered_json tols = ordered_json::array();
  for (const Tolerance& t : report.tolerances) {
    tols.push_back({{"name", t.name},
                    {"value", t.value},
                    {"comparator", t.comparator},
                    {"measured", t.measured},
                    {"passed", t.passed},
                    {"source", t.source}});
  }
  j["tolerances"] = tols;
  j["warnings"] = report.warnings;
  if (timestamp) {
    j["timestamp"] = *timestamp;
  }
  return j.dump(2) + "\n";
}

std::string series_csv(const Series& series) {
  std::string out = series.x_name + "," + series.y_name + "\n";
  for (std::size_t i = 0; i < series.x.size(); ++i) {
    out += fmt17(series.x[i]) + "," + fmt17(series.y[i]) + "\n";
  }
  return out;
}

std::vector<std::string> write_report(const ExperimentReport& report, const std::filesystem::path& dir, Format format,
                                      bool with_timestamp) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> written;
  std::vector<std::string> csvs;
  if (format != Format::Json) {
    for (const Series& s : report.series) {
      const std::string file = report.name + "__" + s.label + ".csv";
      write_file(dir / file, series_csv(s));
      csvs.push_back(file);
    }
  }
  written = csvs;
  if (format != Format::Csv) {
    const std::optional<std::string> ts = with_timestamp ? std::optional(utc_timestamp()) : std::nullopt;
    write_file(dir / "report.json", report_json(report, csvs, ts));
    written.insert(written.begin(), "report.json");
  }
  return written;
}

}  // namespace fraclap::cli
