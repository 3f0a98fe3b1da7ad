#pragma once

#include <optional>
#include <string>

#include "permq/family.hpp"
#include "permq/oeis.hpp"

namespace permq::cli {

enum class OutputFormat { Csv, Json, Svg };

OutputFormat parse_format(const std::string& text);
std::string to_string(OutputFormat format);

/// Settings for one invocation. Defaults are valid on their own; a config
/// file may replace them and command-line flags replace both.
struct RunConfig {
  std::optional<Family> family;
  int n = 3;
  int grid_points = 101;
  OutputFormat format = OutputFormat::Csv;
  /// Empty means standard output.
  std::string output_path;
  bool force = false;
  bool oeis_enabled = false;
  unsigned threads = 0;
  /// Table file to check (validate) or reference data file (seq/validate).
  std::string input_path;
  std::string refs_path;
  OeisConfig oeis;
};

/// Applies `key = value` lines ('#' starts a comment). Unknown keys and bad
/// values throw std::invalid_argument naming the line.
void apply_config_text(RunConfig& config, const std::string& text);

/// $PERMQ_CONFIG when set, else ./permq.conf when it exists, else empty.
std::string default_config_path();

} // namespace permq::cli
