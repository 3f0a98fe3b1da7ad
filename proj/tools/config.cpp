#include "config.hpp"

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <stdexcept>

namespace permq::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_bool(const std::string& text) {
  if (text == "true" || text == "1" || text == "yes" || text == "on") {
    return true;
  }
  if (text == "false" || text == "0" || text == "no" || text == "off") {
    return false;
  }
  throw std::invalid_argument("expected a boolean, got '" + text + "'");
}

int parse_positive(const std::string& text) {
  std::size_t used = 0;
  const int value = std::stoi(text, &used);
  if (used != text.size() || value < 0) {
    throw std::invalid_argument("expected a non-negative integer, got '" + text + "'");
  }
  return value;
}

} // namespace

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") {
    return OutputFormat::Csv;
  }
  if (text == "json") {
    return OutputFormat::Json;
  }
  if (text == "svg") {
    return OutputFormat::Svg;
  }
  throw std::invalid_argument("unknown format '" + text + "' (expected csv, json or svg)");
}

std::string to_string(OutputFormat format) {
  switch (format) {
  case OutputFormat::Csv:
    return "csv";
  case OutputFormat::Json:
    return "json";
  case OutputFormat::Svg:
    return "svg";
  }
  return "?";
}

void apply_config_text(RunConfig& config, const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "family") {
        config.family = parse_family(value);
      } else if (key == "n") {
        config.n = parse_positive(value);
      } else if (key == "grid") {
        config.grid_points = parse_positive(value);
      } else if (key == "format") {
        config.format = parse_format(value);
      } else if (key == "out") {
        config.output_path = value;
      } else if (key == "force") {
        config.force = parse_bool(value);
      } else if (key == "oeis") {
        config.oeis_enabled = parse_bool(value);
      } else if (key == "threads") {
        config.threads = static_cast<unsigned>(parse_positive(value));
      } else if (key == "oeis_url") {
        config.oeis.base_url = value;
      } else if (key == "oeis_timeout") {
        config.oeis.timeout = std::chrono::milliseconds(static_cast<long>(std::stod(value) * 1000));
      } else {
        throw std::invalid_argument("unknown key '" + key + "'");
      }
    } catch (const std::exception& e) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

std::string default_config_path() {
  if (const char* path = std::getenv("PERMQ_CONFIG"); path && *path) {
    return path;
  }
  if (std::filesystem::exists("permq.conf")) {
    return "permq.conf";
  }
  return {};
}

} // namespace permq::cli
