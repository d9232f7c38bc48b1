#include "fraclap_cli/run_config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace fraclap::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string unquote(const std::string& s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
    return s.substr(1, s.size() - 2);
  }
  return s;
}

template <class T>
T parse_number(const std::string& key, const std::string& value, const std::string& where) {
  T out{};
  const char* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw InvalidConfig(where + ": '" + key + "' expects a number, got '" + value + "'");
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& value, const std::string& where) {
  if (value == "true" || value == "1") {
    return true;
  }
  if (value == "false" || value == "0") {
    return false;
  }
  throw InvalidConfig(where + ": '" + key + "' expects true or false, got '" + value + "'");
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "json") {
    return Format::Json;
  }
  if (text == "csv") {
    return Format::Csv;
  }
  if (text == "both") {
    return Format::Both;
  }
  throw InvalidConfig("format must be json, csv or both, got '" + text + "'");
}

void merge_config_text(RunConfig& cfg, const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const std::string where = origin + ":" + std::to_string(lineno);
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InvalidConfig(where + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = unquote(trim(line.substr(eq + 1)));
    if (key.empty() || value.empty()) {
      throw InvalidConfig(where + ": empty key or value");
    }
    if (key == "experiment") {
      cfg.experiment = value;
    } else if (key == "s") {
      cfg.s = parse_number<double>(key, value, where);
    } else if (key == "n") {
      cfg.n = parse_number<int>(key, value, where);
    } else if (key == "N") {
      cfg.N = parse_number<int>(key, value, where);
    } else if (key == "out") {
      cfg.output_dir = value;
    } else if (key == "format") {
      cfg.format = parse_format(value);
    } else if (key == "timestamp") {
      cfg.timestamp = parse_bool(key, value, where);
    } else if (key.rfind("tol.", 0) == 0 && key.size() > 4) {
      cfg.tolerances[key.substr(4)] = parse_number<double>(key, value, where);
    } else {
      throw InvalidConfig(where + ": unknown key '" + key + "'");
    }
  }
}

void merge_config_file(RunConfig& cfg, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidConfig("cannot read config file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  merge_config_text(cfg, buf.str(), path.string());
}

void validate(const RunConfig& cfg) {
  if (cfg.experiment.empty()) {
    throw InvalidConfig("no experiment given; run `fraclap list` for the registered names");
  }
  if (find_experiment(cfg.experiment) == nullptr) {
    throw UnknownExperiment("unknown experiment '" + cfg.experiment +
                            "'; run `fraclap list` for the registered names");
  }
  if (cfg.s && !(*cfg.s > 0.0 && *cfg.s < 1.0)) {
    throw InvalidConfig("s must be in (0,1)");
  }
  if (cfg.n && *cfg.n != 1 && *cfg.n != 2) {
    throw InvalidConfig("n must be 1 or 2");
  }
  if (cfg.N) {
    const int N = *cfg.N;
    if (N < 32 || N > 4096 || (N & (N - 1)) != 0) {
      throw InvalidConfig("N must be a power of two in [32, 4096]");
    }
  }
}

}  // namespace fraclap::cli
