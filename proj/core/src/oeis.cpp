#include "permq/oeis.hpp"

#include <cstdlib>
#include <ctime>
#include <regex>
#include <sstream>

#include <httplib.h>

namespace permq {

namespace {

std::string utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

} // namespace

OeisConfig OeisConfig::from_environment(OeisConfig base) {
  if (const char* url = std::getenv("PERMQ_OEIS_URL"); url && *url) {
    base.base_url = url;
  }
  if (const char* timeout = std::getenv("PERMQ_OEIS_TIMEOUT"); timeout && *timeout) {
    try {
      base.timeout = std::chrono::milliseconds(static_cast<long>(std::stod(timeout) * 1000));
    } catch (const std::exception&) {
      // keep the previous value
    }
  }
  return base;
}

OeisConfig OeisConfig::from_environment() { return from_environment(OeisConfig{}); }

std::string_view to_string(LookupStatus status) noexcept {
  switch (status) {
  case LookupStatus::Ok:
    return "ok";
  case LookupStatus::Skipped:
    return "skipped";
  case LookupStatus::Malformed:
    return "malformed";
  }
  return "unknown";
}

std::vector<std::string> parse_oeis_text(std::string_view body) {
  std::vector<std::string> ids;
  bool saw_header = false;
  bool no_results = false;
  std::istringstream lines{std::string(body)};
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.starts_with("Search:") || line.starts_with("# Greetings")) {
      saw_header = true;
    } else if (line.starts_with("No results")) {
      no_results = true;
    } else if (line.starts_with("%I ")) {
      std::istringstream fields(line.substr(3));
      std::string id;
      fields >> id;
      if (id.size() != 7 || id[0] != 'A') {
        throw MalformedResponse("bad sequence id in line: " + line);
      }
      ids.push_back(id);
    }
  }
  if (!saw_header && ids.empty()) {
    throw MalformedResponse("response is not OEIS text format");
  }
  if (no_results && !ids.empty()) {
    throw MalformedResponse("response claims no results but lists sequences");
  }
  return ids;
}

LookupResult oeis_lookup(std::span<const BigInt> prefix, const OeisConfig& config) {
  if (prefix.size() < 4) {
    throw std::invalid_argument("oeis_lookup: prefix needs at least 4 terms");
  }
  LookupResult result;
  result.timestamp = utc_now();

  static const std::regex url_re(R"(^(https?://[^/]+)(/.*)?$)");
  std::smatch match;
  if (!std::regex_match(config.base_url, match, url_re)) {
    result.status = LookupStatus::Skipped;
    result.message = "invalid OEIS base URL '" + config.base_url + "'";
    return result;
  }
  std::string path_prefix = match[2].matched ? match[2].str() : "";
  while (!path_prefix.empty() && path_prefix.back() == '/') {
    path_prefix.pop_back();
  }

  std::string query;
  for (const auto& term : prefix) {
    query += (query.empty() ? "" : ",") + to_string(term);
  }

  try {
    httplib::Client client(match[1].str());
    const auto seconds = std::chrono::duration_cast<std::chrono::seconds>(config.timeout);
    const auto micros =
        std::chrono::duration_cast<std::chrono::microseconds>(config.timeout - seconds);
    client.set_connection_timeout(seconds.count(), micros.count());
    client.set_read_timeout(seconds.count(), micros.count());
    client.set_follow_location(true);

    auto response = client.Get(path_prefix + "/search?fmt=text&q=" + query);
    if (!response) {
      result.status = LookupStatus::Skipped;
      result.message = "lookup skipped: " + httplib::to_string(response.error());
      return result;
    }
    if (response->status != 200) {
      result.status = LookupStatus::Malformed;
      result.message = "unexpected HTTP status " + std::to_string(response->status);
      return result;
    }
    result.ids = parse_oeis_text(response->body);
    result.status = LookupStatus::Ok;
    result.message = result.ids.empty() ? "no matching sequences" : "";
  } catch (const MalformedResponse& e) {
    result.status = LookupStatus::Malformed;
    result.message = e.what();
  } catch (const std::exception& e) {
    result.status = LookupStatus::Skipped;
    result.message = std::string("lookup skipped: ") + e.what();
  }
  return result;
}

} // namespace permq
