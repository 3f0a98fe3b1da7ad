#include "permq/sequences.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "permq/term_dist.hpp"
#include "sequence_data.hpp"

namespace permq {

namespace {

int parse_int(std::string_view text, const char* what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument(std::string("bad ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

std::vector<BigInt> parse_terms(const std::string& text) {
  std::vector<BigInt> terms;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    terms.push_back(parse_bigint(item));
  }
  return terms;
}

} // namespace

Selector Selector::parse(std::string_view text) {
  Selector selector;
  if (text.size() < 3 || text[1] != ':') {
    throw std::invalid_argument("bad selector '" + std::string(text) + "'");
  }
  if (text[0] == 'W') {
    selector.table = Table::W;
  } else if (text[0] == 'V') {
    selector.table = Table::V;
  } else {
    throw std::invalid_argument("bad selector table in '" + std::string(text) + "'");
  }
  const auto rest = text.substr(2);
  if (rest == "diag") {
    return selector;
  }
  if (rest.starts_with("col=")) {
    selector.column = parse_int(rest.substr(4), "selector column");
    if (*selector.column < 0) {
      throw std::invalid_argument("negative selector column");
    }
    return selector;
  }
  throw std::invalid_argument("bad selector '" + std::string(text) + "'");
}

std::string Selector::to_string() const {
  std::string text = table == Table::W ? "W:" : "V:";
  return column ? text + "col=" + std::to_string(*column) : text + "diag";
}

std::string SequenceRef::description() const {
  const char* name = selector.table == Selector::Table::W ? "W" : "V";
  if (selector.column) {
    return std::string("{") + name + "_n(" + std::to_string(*selector.column) + ")}";
  }
  return std::string("{") + name + "_n(n)}";
}

std::vector<SequenceRef> parse_sequence_refs(std::string_view text) {
  std::vector<SequenceRef> refs;
  std::istringstream input{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(input, line)) {
    ++line_no;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos ||
        line[line.find_first_not_of(" \t")] == '#') {
      continue;
    }
    std::istringstream fields(line);
    std::string id, selector, first_n, tabled, source, terms, extra;
    if (!(fields >> id >> selector >> first_n >> tabled >> source >> terms) || (fields >> extra)) {
      throw std::invalid_argument("sequence data line " + std::to_string(line_no) +
                                  ": expected 6 fields");
    }
    try {
      SequenceRef ref;
      ref.oeis_id = id;
      ref.selector = Selector::parse(selector);
      ref.first_n = parse_int(first_n, "first_n");
      ref.tabled_terms = parse_int(tabled, "tabled count");
      ref.source = source;
      ref.terms = parse_terms(terms);
      if (ref.source != "transcribed" && ref.source != "self-referential") {
        throw std::invalid_argument("unknown source '" + ref.source + "'");
      }
      if (ref.first_n < 1 || ref.terms.empty()) {
        throw std::invalid_argument("empty or mis-indexed sequence");
      }
      refs.push_back(std::move(ref));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("sequence data line " + std::to_string(line_no) + ": " +
                                  e.what());
    }
  }
  return refs;
}

const std::vector<SequenceRef>& builtin_sequence_refs() {
  static const std::vector<SequenceRef> refs = parse_sequence_refs(detail::kSequenceData);
  return refs;
}

std::vector<BigInt> generate_slice(const Selector& selector, int first_n, int count) {
  std::vector<BigInt> values;
  values.reserve(count);
  for (int n = first_n; n < first_n + count; ++n) {
    const int m = selector.column.value_or(n);
    if (m > n) {
      values.emplace_back(0);
      continue;
    }
    values.push_back(selector.table == Selector::Table::W ? w_closed_form(n, m)
                                                          : v_closed_form(n, m));
  }
  return values;
}

std::vector<SequenceCheck> check_sequences(const std::vector<SequenceRef>& refs) {
  std::vector<SequenceCheck> checks;
  for (const auto& ref : refs) {
    SequenceCheck check;
    check.ref = ref;
    check.generated =
        generate_slice(ref.selector, ref.first_n, static_cast<int>(ref.terms.size()));
    check.passed = true;
    for (std::size_t i = 0; i < ref.terms.size(); ++i) {
      if (check.generated[i] != ref.terms[i]) {
        check.passed = false;
        check.mismatch_n = ref.first_n + static_cast<int>(i);
        break;
      }
    }
    checks.push_back(std::move(check));
  }
  return checks;
}

std::vector<SequenceCheck> builtin_checks() { return check_sequences(builtin_sequence_refs()); }

} // namespace permq
