#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "permq/bigint.hpp"
#include "permq/family.hpp"
#include "permq/prob_poly.hpp"

namespace permq::cli {

// CSV dialect: comma separated, header row, LF endings, numeric fields only.

/// Reals are written with 12 significant digits; -0 is written as 0.
std::string format_real(double value);

struct DistRow {
  int n;
  int m;
  BigInt count;
  friend bool operator==(const DistRow&, const DistRow&) = default;
};

/// E_n(m) for every n in 1..n_max and m in 0..n.
std::vector<DistRow> dist_rows(Family family, int n_max);

void write_dist_csv(std::ostream& out, std::span<const DistRow> rows);
std::vector<DistRow> read_dist_csv(std::istream& in);
nlohmann::json dist_json(Family family, std::span<const DistRow> rows);

/// A header plus rows of reals, as emitted by the compare command.
struct RealTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

struct Series {
  Family family;
  std::vector<GridRow> rows;
};

/// Columns r, Q_X, P_X for each series in order. All series share the grid.
RealTable compare_table(std::span<const Series> series);

void write_real_csv(std::ostream& out, const RealTable& table);
RealTable read_real_csv(std::istream& in);
nlohmann::json compare_json(int n, std::span<const Series> series);

void write_exact_csv(std::ostream& out, const ExactCounts& counts);
/// Reads (i, N_i) rows; family and n are not part of the file.
ExactCounts read_exact_csv(std::istream& in, Family family, int n);
nlohmann::json exact_json(const ExactCounts& counts);

} // namespace permq::cli
