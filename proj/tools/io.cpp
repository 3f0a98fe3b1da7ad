#include "io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "permq/term_dist.hpp"

namespace permq::cli {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream stream(line);
  std::string field;
  while (std::getline(stream, field, ',')) {
    fields.push_back(field);
  }
  if (!line.empty() && line.back() == ',') {
    fields.emplace_back();
  }
  return fields;
}

void expect_header(std::istream& in, const std::string& expected) {
  std::string line;
  if (!std::getline(in, line) || line != expected) {
    throw std::invalid_argument("expected CSV header '" + expected + "', got '" + line + "'");
  }
}

int to_int(const std::string& text) {
  std::size_t used = 0;
  const int value = std::stoi(text, &used);
  if (used != text.size()) {
    throw std::invalid_argument("bad integer field '" + text + "'");
  }
  return value;
}

double to_real(const std::string& text) {
  std::size_t used = 0;
  const double value = std::stod(text, &used);
  if (used != text.size()) {
    throw std::invalid_argument("bad numeric field '" + text + "'");
  }
  return value;
}

std::string series_name(char prefix, Family family) {
  return std::string(1, prefix) + "_" + to_char(family);
}

} // namespace

std::string format_real(double value) {
  if (value == 0.0) {
    value = 0.0;
  }
  return fmt::format("{:.12g}", value);
}

std::vector<DistRow> dist_rows(Family family, int n_max) {
  std::vector<DistRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    const auto dist = e_table(family, n);
    for (int m = 0; m <= n; ++m) {
      rows.push_back({n, m, dist.counts[m]});
    }
  }
  return rows;
}

void write_dist_csv(std::ostream& out, std::span<const DistRow> rows) {
  out << "n,m,count\n";
  for (const auto& row : rows) {
    out << row.n << ',' << row.m << ',' << to_string(row.count) << '\n';
  }
}

std::vector<DistRow> read_dist_csv(std::istream& in) {
  expect_header(in, "n,m,count");
  std::vector<DistRow> rows;
  std::string line;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) {
      continue;
    }
    const auto fields = split_csv_line(line);
    if (fields.size() != 3) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 3 fields");
    }
    rows.push_back({to_int(fields[0]), to_int(fields[1]), parse_bigint(fields[2])});
  }
  return rows;
}

nlohmann::json dist_json(Family family, std::span<const DistRow> rows) {
  nlohmann::json doc;
  doc["family"] = std::string(1, to_char(family));
  doc["rows"] = nlohmann::json::array();
  for (const auto& row : rows) {
    // Counts outgrow 64 bits quickly, so they travel as decimal strings.
    doc["rows"].push_back({{"n", row.n}, {"m", row.m}, {"count", to_string(row.count)}});
  }
  return doc;
}

RealTable compare_table(std::span<const Series> series) {
  RealTable table;
  if (series.empty()) {
    return table;
  }
  table.header.push_back("r");
  for (const auto& s : series) {
    table.header.push_back(series_name('Q', s.family));
    table.header.push_back(series_name('P', s.family));
  }
  const std::size_t points = series.front().rows.size();
  for (std::size_t k = 0; k < points; ++k) {
    std::vector<double> row{series.front().rows[k].r};
    for (const auto& s : series) {
      if (s.rows.size() != points || s.rows[k].r != row.front()) {
        throw std::invalid_argument("compare_table: series are on different grids");
      }
      row.push_back(s.rows[k].q);
      row.push_back(s.rows[k].p);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_real_csv(std::ostream& out, const RealTable& table) {
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    out << (i ? "," : "") << table.header[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << format_real(row[i]);
    }
    out << '\n';
  }
}

RealTable read_real_csv(std::istream& in) {
  RealTable table;
  std::string line;
  if (!std::getline(in, line) || line.empty()) {
    throw std::invalid_argument("missing CSV header");
  }
  table.header = split_csv_line(line);
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) {
      continue;
    }
    const auto fields = split_csv_line(line);
    if (fields.size() != table.header.size()) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": field count mismatch");
    }
    std::vector<double> row;
    for (const auto& f : fields) {
      row.push_back(to_real(f));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

nlohmann::json compare_json(int n, std::span<const Series> series) {
  nlohmann::json doc;
  doc["n"] = n;
  doc["series"] = nlohmann::json::object();
  for (const auto& s : series) {
    nlohmann::json r = nlohmann::json::array();
    nlohmann::json q = nlohmann::json::array();
    nlohmann::json p = nlohmann::json::array();
    for (const auto& row : s.rows) {
      r.push_back(row.r);
      q.push_back(row.q);
      p.push_back(row.p);
    }
    doc["series"][std::string(1, to_char(s.family))] = {{"r", r}, {"Q", q}, {"P", p}};
  }
  return doc;
}

void write_exact_csv(std::ostream& out, const ExactCounts& counts) {
  out << "i,N_i\n";
  for (std::size_t i = 0; i < counts.counts.size(); ++i) {
    out << i << ',' << to_string(counts.counts[i]) << '\n';
  }
}

ExactCounts read_exact_csv(std::istream& in, Family family, int n) {
  expect_header(in, "i,N_i");
  ExactCounts counts{family, n, variable_count(family, n), {}};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    const auto fields = split_csv_line(line);
    if (fields.size() != 2 || to_int(fields[0]) != static_cast<int>(counts.counts.size())) {
      throw std::invalid_argument("exact counts CSV rows must be 'i,N_i' with i = 0, 1, ...");
    }
    counts.counts.push_back(parse_bigint(fields[1]));
  }
  if (static_cast<int>(counts.counts.size()) != counts.variables + 1) {
    throw std::invalid_argument("exact counts CSV has the wrong number of rows for this family");
  }
  return counts;
}

nlohmann::json exact_json(const ExactCounts& counts) {
  nlohmann::json doc;
  doc["family"] = std::string(1, to_char(counts.family));
  doc["n"] = counts.n;
  doc["variables"] = counts.variables;
  doc["target"] = target_value(counts.family);
  nlohmann::json values = nlohmann::json::array();
  for (const auto& c : counts.counts) {
    values.push_back(to_string(c));
  }
  doc["counts"] = values;
  doc["polynomial"] = render_bernstein(counts);
  return doc;
}

} // namespace permq::cli
