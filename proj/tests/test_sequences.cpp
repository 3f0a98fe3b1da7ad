#include <doctest.h>

#include <chrono>
#include <thread>

#include <httplib.h>

#include "permq/oeis.hpp"
#include "permq/sequences.hpp"

using namespace permq;

namespace {

std::vector<BigInt> terms(std::initializer_list<long long> values) {
  return {values.begin(), values.end()};
}

const SequenceCheck& find(const std::vector<SequenceCheck>& checks, const std::string& id) {
  for (const auto& c : checks) {
    if (c.ref.oeis_id == id) {
      return c;
    }
  }
  FAIL("missing " << id);
  throw std::logic_error("unreachable");
}

// Serves canned OEIS responses on 127.0.0.1 for the lifetime of the object.
class FakeOeis {
public:
  FakeOeis() {
    server_.Get("/search", [this](const httplib::Request& req, httplib::Response& res) {
      last_query_ = req.get_param_value("q");
      const auto& q = last_query_;
      if (q.starts_with("0,1,2,9")) {
        res.set_content("# Greetings from The On-Line Encyclopedia of Integer Sequences! "
                        "http://oeis.org/\n\nSearch: seq:" + q + "\nShowing 1-2 of 2\n\n"
                        "%I A000166 M1937 N0767 #300\n%S A000166 1,0,1,2,9,44,265\n"
                        "%N A000166 Subfactorial or rencontres numbers, or derangements\n\n"
                        "%I A053871 #50\n%S A053871 1,0,1,2,9,44\n",
                        "text/plain");
      } else if (q.starts_with("11,44")) {
        res.set_content("# Greetings from The On-Line Encyclopedia of Integer Sequences!\n\n"
                        "Search: seq:" + q + "\nNo results.\n",
                        "text/plain");
      } else if (q.starts_with("1,2,3,4")) {
        res.set_content("<html>not the text format</html>", "text/html");
      } else {
        res.status = 500;
      }
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~FakeOeis() {
    server_.stop();
    thread_.join();
  }
  OeisConfig config() const {
    OeisConfig c;
    c.base_url = "http://127.0.0.1:" + std::to_string(port_);
    c.timeout = std::chrono::milliseconds(3000);
    return c;
  }
  const std::string& last_query() const { return last_query_; }

private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
  std::string last_query_;
};

} // namespace

TEST_CASE("builtin reference data parses and every check passes offline") {
  const auto& refs = builtin_sequence_refs();
  REQUIRE(refs.size() == 7);
  for (const auto& ref : refs) {
    CHECK(ref.terms.size() >= 8);
  }
  const auto checks = builtin_checks();
  for (const auto& c : checks) {
    CAPTURE(c.ref.oeis_id);
    CHECK(c.passed);
    CHECK_FALSE(c.mismatch_n.has_value());
  }
}

TEST_CASE("builtin slices match the published tables") {
  const auto checks = builtin_checks();
  const auto& d = find(checks, "A000166");
  CHECK(d.ref.selector.to_string() == "W:diag");
  CHECK(std::vector<BigInt>(d.generated.begin(), d.generated.begin() + 6) ==
        terms({0, 1, 2, 9, 44, 265}));
  const auto& v = find(checks, "A000255");
  CHECK(std::vector<BigInt>(v.generated.begin(), v.generated.begin() + 8) ==
        terms({1, 1, 3, 11, 53, 309, 2119, 16687}));
  const auto& t = find(checks, "A000217");
  CHECK(std::vector<BigInt>(t.generated.begin(), t.generated.begin() + 5) ==
        terms({1, 3, 6, 10, 15}));
  CHECK(find(checks, "A060008").ref.self_referential());
  CHECK_FALSE(find(checks, "A045943").ref.self_referential());
}

TEST_CASE("selector parsing") {
  CHECK(Selector::parse("W:diag").to_string() == "W:diag");
  const auto s = Selector::parse("V:col=3");
  CHECK(s.table == Selector::Table::V);
  CHECK(s.column == 3);
  CHECK_THROWS_AS(Selector::parse("X:diag"), std::invalid_argument);
  CHECK_THROWS_AS(Selector::parse("W:col=x"), std::invalid_argument);
  CHECK_THROWS_AS(Selector::parse("W"), std::invalid_argument);
}

TEST_CASE("generate_slice") {
  CHECK(generate_slice(Selector::parse("V:col=3"), 3, 6) == terms({3, 9, 18, 30, 45, 63}));
  CHECK(generate_slice(Selector::parse("W:col=2"), 1, 3) == terms({0, 1, 3}));
}

TEST_CASE("tampered reference terms are reported with the failing n") {
  const auto refs = parse_sequence_refs(
      "# comment\n"
      "A000166 W:diag 1 6 transcribed 0,1,2,9,44,265,1855,14833\n"
      "A000255 V:diag 1 8 transcribed 1,1,3,11,53,309,2119,16687\n");
  const auto checks = check_sequences(refs);
  REQUIRE(checks.size() == 2);
  CHECK_FALSE(checks[0].passed);
  CHECK(checks[0].mismatch_n == 7);
  CHECK(checks[1].passed);
}

TEST_CASE("malformed reference data") {
  CHECK_THROWS_AS(parse_sequence_refs("A000166 W:diag 1 6 transcribed\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sequence_refs("A000166 W:diag 1 6 guessed 1,2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sequence_refs("A000166 W:diag 1 6 transcribed 1,x\n"),
                  std::invalid_argument);
  CHECK(parse_sequence_refs("\n   \n# only comments\n").empty());
}

TEST_CASE("parse_oeis_text") {
  CHECK(parse_oeis_text("# Greetings\n\nSearch: seq:1,2\n%I A000166 M1937\n%S A000166 1\n"
                        "%I A000255 #9\n") == std::vector<std::string>{"A000166", "A000255"});
  CHECK(parse_oeis_text("Search: seq:11,44,110\r\nNo results.\r\n").empty());
  CHECK_THROWS_AS(parse_oeis_text("<html></html>"), MalformedResponse);
  CHECK_THROWS_AS(parse_oeis_text("Search: x\n%I B12 x\n"), MalformedResponse);
  CHECK_THROWS_AS(parse_oeis_text("Search: x\nNo results.\n%I A000001\n"), MalformedResponse);
}

TEST_CASE("oeis_lookup against a local endpoint") {
  FakeOeis fake;
  const auto config = fake.config();

  const auto found = oeis_lookup(terms({0, 1, 2, 9, 44, 265}), config);
  CHECK(found.status == LookupStatus::Ok);
  CHECK(found.ids == std::vector<std::string>{"A000166", "A053871"});
  CHECK(fake.last_query() == "0,1,2,9,44,265");
  CHECK(found.timestamp.size() == 20);

  const auto absent = oeis_lookup(terms({11, 44, 110, 220, 385}), config);
  CHECK(absent.status == LookupStatus::Ok);
  CHECK(absent.ids.empty());

  CHECK(oeis_lookup(terms({1, 2, 3, 4}), config).status == LookupStatus::Malformed);
  CHECK(oeis_lookup(terms({5, 5, 5, 5}), config).status == LookupStatus::Malformed);
}

TEST_CASE("oeis_lookup degrades to skipped without a network") {
  OeisConfig config;
  config.base_url = "http://127.0.0.1:9"; // discard port, nothing listens
  config.timeout = std::chrono::milliseconds(1000);
  const auto result = oeis_lookup(terms({0, 1, 2, 9, 44, 265}), config);
  CHECK(result.status == LookupStatus::Skipped);
  CHECK(result.message.find("skipped") != std::string::npos);

  config.base_url = "not a url";
  CHECK(oeis_lookup(terms({0, 1, 2, 9}), config).status == LookupStatus::Skipped);
  CHECK_THROWS_AS(oeis_lookup(terms({0, 1, 2}), config), std::invalid_argument);
}

TEST_CASE("oeis config from environment") {
  setenv("PERMQ_OEIS_URL", "http://example.invalid", 1);
  setenv("PERMQ_OEIS_TIMEOUT", "2.5", 1);
  const auto config = OeisConfig::from_environment();
  CHECK(config.base_url == "http://example.invalid");
  CHECK(config.timeout == std::chrono::milliseconds(2500));
  unsetenv("PERMQ_OEIS_URL");
  unsetenv("PERMQ_OEIS_TIMEOUT");
  CHECK(OeisConfig::from_environment().base_url == "https://oeis.org");
}
