#pragma once

#include <chrono>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "permq/bigint.hpp"

namespace permq {

class MalformedResponse : public std::runtime_error {
public:
  explicit MalformedResponse(const std::string& what) : std::runtime_error(what) {}
};

struct OeisConfig {
  std::string base_url = "https://oeis.org";
  std::chrono::milliseconds timeout{10000};

  /// Applies PERMQ_OEIS_URL and PERMQ_OEIS_TIMEOUT (seconds) on top of `base`.
  static OeisConfig from_environment(OeisConfig base);
  static OeisConfig from_environment();
};

enum class LookupStatus { Ok, Skipped, Malformed };

std::string_view to_string(LookupStatus status) noexcept;

struct LookupResult {
  LookupStatus status = LookupStatus::Skipped;
  std::vector<std::string> ids;
  std::string message;
  /// UTC time of the request, ISO 8601.
  std::string timestamp;
};

/// Ids of the "%I" records in an OEIS text-format search response.
///
/// An explicit "No results." yields an empty list; a body that is not OEIS
/// text format throws MalformedResponse.
std::vector<std::string> parse_oeis_text(std::string_view body);

/// Searches OEIS for sequences containing `prefix` (at least 4 terms, else
/// std::invalid_argument). Network failures come back as Skipped, never as
/// exceptions.
LookupResult oeis_lookup(std::span<const BigInt> prefix, const OeisConfig& config = {});

} // namespace permq
