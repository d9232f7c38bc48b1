#include "fraclap/report.hpp"

#include <cmath>
#include <limits>

#include "fraclap/error.hpp"

namespace fraclap {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Warn:
      return "WARN";
    case Verdict::Fail:
      return "FAIL";
  }
  return "FAIL";
}

Verdict ExperimentReport::verdict() const {
  for (const auto& t : tolerances) {
    if (!t.passed) {
      return Verdict::Fail;
    }
  }
  return warnings.empty() ? Verdict::Pass : Verdict::Warn;
}

const Tolerance* ExperimentReport::find_tolerance(const std::string& key) const {
  for (const auto& t : tolerances) {
    if (t.name == key) {
      return &t;
    }
  }
  return nullptr;
}

double ExperimentReport::find_metric(const std::string& key) const {
  for (const auto& [k, v] : metrics) {
    if (k == key) {
      return v;
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

bool check(ExperimentReport& report, const ToleranceOverrides& overrides, const std::string& name,
           double default_value, const std::string& comparator, double measured) {
  Tolerance t;
  t.name = name;
  t.comparator = comparator;
  t.measured = measured;
  t.value = default_value;
  t.source = "default";
  if (auto it = overrides.find(name); it != overrides.end()) {
    t.value = it->second;
    t.source = "config";
  }
  // NaN measurements fail every comparison.
  if (comparator == "<=") {
    t.passed = measured <= t.value;
  } else if (comparator == "<") {
    t.passed = measured < t.value;
  } else if (comparator == ">=") {
    t.passed = measured >= t.value;
  } else if (comparator == ">") {
    t.passed = measured > t.value;
  } else {
    throw InvalidArgument("unknown comparator " + comparator);
  }
  report.tolerances.push_back(t);
  return t.passed;
}

}  // namespace fraclap
