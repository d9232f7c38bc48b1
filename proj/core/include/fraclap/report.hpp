#pragma once

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fraclap {

enum class Verdict { Pass, Warn, Fail };

[[nodiscard]] const char* to_string(Verdict v);

/// A declared threshold together with the value it was compared against.
struct Tolerance {
  std::string name;
  double value = 0.0;
  std::string comparator;  ///< one of "<=", "<", ">=", ">"
  double measured = 0.0;
  bool passed = false;
  std::string source;  ///< "default" or "config"
};

/// Labelled (x, y) data; written to CSV with the column names as header.
struct Series {
  std::string label;
  std::string x_name;
  std::string y_name;
  std::vector<double> x;
  std::vector<double> y;
};

using ParamValue = std::variant<long long, double, std::string>;

struct ExperimentReport {
  std::string name;
  std::vector<std::pair<std::string, ParamValue>> params;
  std::vector<std::pair<std::string, double>> metrics;
  std::vector<Tolerance> tolerances;
  std::vector<Series> series;
  std::vector<std::string> warnings;

  void param(std::string key, ParamValue v) { params.emplace_back(std::move(key), std::move(v)); }
  void metric(std::string key, double v) { metrics.emplace_back(std::move(key), v); }
  void warn(std::string message) { warnings.push_back(std::move(message)); }

  /// Fail if any tolerance failed, Warn if any warning was raised, else Pass.
  [[nodiscard]] Verdict verdict() const;
  [[nodiscard]] const Tolerance* find_tolerance(const std::string& name) const;
  [[nodiscard]] double find_metric(const std::string& name) const;
};

/// Per-run overrides of declared thresholds, keyed by tolerance name.
using ToleranceOverrides = std::map<std::string, double>;

/// Compares `measured` against the threshold `name` (default or overridden)
/// and records the outcome in the report. Returns whether it passed.
bool check(ExperimentReport& report, const ToleranceOverrides& overrides, const std::string& name,
           double default_value, const std::string& comparator, double measured);

}  // namespace fraclap
