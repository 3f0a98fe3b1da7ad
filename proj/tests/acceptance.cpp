// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "permq/permanent.hpp"
#include "permq/prob_poly.hpp"
#include "permq/sequences.hpp"
#include "permq/term_dist.hpp"

using namespace permq;

namespace {

using Outcome = std::optional<std::string>; // nullopt = pass, otherwise failure detail

constexpr double kCurveTolerance = 1e-12;

const std::vector<std::vector<int>> kTableW = {
    {1, 0},
    {1, 0, 1},
    {1, 0, 3, 2},
    {1, 0, 6, 8, 9},
    {1, 0, 10, 20, 45, 44},
    {1, 0, 15, 40, 135, 264, 265},
};

const std::vector<std::vector<int>> kTableV = {
    {0, 1},
    {0, 1, 1},
    {0, 1, 2, 3},
    {0, 1, 3, 9, 11},
    {0, 1, 4, 18, 44, 53},
    {0, 1, 5, 30, 110, 265, 309},
    {0, 1, 6, 45, 220, 795, 1854, 2119},
    {0, 1, 7, 63, 385, 1855, 6489, 14833, 16687},
};

std::string at(const char* what, int n, int m) {
  return std::string(what) + "(n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")";
}

Outcome table_reproduction() {
  for (std::size_t i = 0; i < kTableW.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    const auto dist = e_table(Family::C, n);
    for (int m = 0; m <= n; ++m) {
      if (dist.counts[m] != kTableW[i][m]) {
        return at("W", n, m) + " = " + to_string(dist.counts[m]);
      }
    }
  }
  for (std::size_t i = 0; i < kTableV.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    const auto dist = e_table(Family::B, n);
    for (int m = 0; m <= n; ++m) {
      if (dist.counts[m] != kTableV[i][m]) {
        return at("V", n, m) + " = " + to_string(dist.counts[m]);
      }
    }
  }
  return std::nullopt;
}

Outcome four_routes() {
  constexpr int kMaxN = 10;
  const auto recurrence = w_recurrence_table(kMaxN);
  for (int n = 1; n <= kMaxN; ++n) {
    const auto brute_c = e_table_bruteforce(Family::C, n);
    const auto brute_b = e_table_bruteforce(Family::B, n);
    for (int m = 0; m <= n; ++m) {
      const auto w = w_closed_form(n, m);
      if (w != recurrence[n][m] || w != w_via_cycles(n, m) || w != brute_c.counts[m]) {
        return at("W routes disagree at ", n, m);
      }
      const auto v = v_closed_form(n, m);
      if ((m >= 1 && v != v_via_w(n, m)) || v != brute_b.counts[m]) {
        return at("V routes disagree at ", n, m);
      }
    }
    if (e_table(Family::A, n) != e_table_bruteforce(Family::A, n)) {
      return "family A disagrees at n=" + std::to_string(n);
    }
  }
  return std::nullopt;
}

Outcome exact_polynomials() {
  struct Expected {
    Family family;
    int variables;
    std::vector<int> counts;
  };
  const Expected expected[] = {
      {Family::A, 9, {1, 9, 36, 78, 90, 45, 6}},
      {Family::B, 7, {1, 6, 13, 10, 2}},
      {Family::C, 6, {1, 6, 12, 6}},
  };
  for (const auto& e : expected) {
    const auto counts = exact_counts(e.family, 3);
    if (counts.variables != e.variables) {
      return std::string("wrong K for family ") + to_char(e.family);
    }
    for (int i = 0; i <= counts.variables; ++i) {
      const int want = i < static_cast<int>(e.counts.size()) ? e.counts[i] : 0;
      if (counts.counts[i] != want) {
        return std::string("family ") + to_char(e.family) + " N_" + std::to_string(i) + " = " +
               to_string(counts.counts[i]) + ", expected " + std::to_string(want);
      }
    }
  }
  return std::nullopt;
}

Outcome figure_data(int n) {
  for (Family family : kAllFamilies) {
    const auto grid = compare_grid(family, n, 101);
    if (grid.size() != 101 || grid.front().r != 0.0 || grid.back().r != 1.0) {
      return "grid is not 101 uniform points on [0, 1]";
    }
    const std::string tag = std::string(1, to_char(family)) + std::to_string(n);
    if (std::abs(grid.front().q - 1.0) > kCurveTolerance ||
        std::abs(grid.front().p - 1.0) > kCurveTolerance) {
      return tag + ": Q(0) or P(0) differs from 1";
    }
    if (family != Family::C &&
        (std::abs(grid.back().q) > kCurveTolerance || std::abs(grid.back().p) > kCurveTolerance)) {
      return tag + ": Q(1) or P(1) differs from 0";
    }
    for (const auto& row : grid) {
      if (!std::isfinite(row.q) || !std::isfinite(row.p)) {
        return tag + ": non-finite value";
      }
    }
  }
  return std::nullopt;
}

Outcome figure_regeneration() {
  if (auto failure = figure_data(3)) {
    return failure;
  }
  return figure_data(5);
}

Outcome n2_exactness() {
  for (Family family : kAllFamilies) {
    double worst = 0.0;
    for (const auto& row : compare_grid(family, 2, 101)) {
      worst = std::max(worst, std::abs(row.q - row.p));
    }
    if (worst > kCurveTolerance) {
      return std::string("family ") + to_char(family) + ": max |Q - P| = " + std::to_string(worst);
    }
  }
  return std::nullopt;
}

Outcome permanent_identities() {
  for (int n = 1; n <= 12; ++n) {
    const auto j_minus_i = BinaryMatrix::ones_minus_identity(n);
    if (permanent_ryser(j_minus_i) != w_closed_form(n, n)) {
      return "per(J - I) != W_n(n) at n=" + std::to_string(n);
    }
    if (permanent_ryser(j_minus_i.with_entry(0, 0, 1)) != v_closed_form(n, n)) {
      return "B-variant permanent != V_n(n) at n=" + std::to_string(n);
    }
  }
  if (permanent_ryser(BinaryMatrix::ones_minus_identity(6)) != 265 ||
      permanent_ryser(BinaryMatrix::ones_minus_identity(7).with_entry(0, 0, 1)) != 2119) {
    return "spot values 265 / 2119 not reproduced";
  }
  return std::nullopt;
}

Outcome sum_identity() {
  for (Family family : kAllFamilies) {
    for (int n = 1; n <= 12; ++n) {
      if (e_table(family, n).total() != factorial(n)) {
        return std::string("family ") + to_char(family) + " at n=" + std::to_string(n);
      }
    }
  }
  return std::nullopt;
}

Outcome sequence_checks() {
  const auto checks = builtin_checks();
  for (const char* id : {"A000166", "A000255", "A000217"}) {
    bool found = false;
    for (const auto& c : checks) {
      if (c.ref.oeis_id != id) {
        continue;
      }
      found = true;
      if (!c.passed) {
        return std::string(id) + " mismatch at n=" + std::to_string(c.mismatch_n.value_or(-1));
      }
      if (c.ref.terms.size() < 8) {
        return std::string(id) + " window shorter than 8 terms";
      }
    }
    if (!found) {
      return std::string(id) + " missing from the reference set";
    }
  }
  for (const auto& c : checks) {
    if (!c.passed) {
      return c.ref.oeis_id + " failed";
    }
  }
  return std::nullopt;
}

struct Criterion {
  int id;
  const char* name;
  double time_limit_seconds; // 0 = none
  std::function<Outcome()> run;
};

} // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "table reproduction (W n<=6, V n<=8)", 1.0, table_reproduction},
      {2, "four-route agreement for W and V (n<=10)", 30.0, four_routes},
      {3, "exact n=3 polynomials", 1.0, exact_polynomials},
      {4, "figure data n=3 and n=5, 101 points, endpoints within 1e-12", 300.0,
       figure_regeneration},
      {5, "n=2 exactness, max |Q-P| <= 1e-12", 0.0, n2_exactness},
      {6, "permanent identities W_n(n), V_n(n) (n<=12)", 0.0, permanent_identities},
      {7, "sum identity E_n(m) over m = n! (n<=12)", 0.0, sum_identity},
      {8, "offline sequence checks (>= 8 terms)", 0.0, sequence_checks},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!outcome && c.time_limit_seconds > 0 && seconds > c.time_limit_seconds) {
      outcome = "took " + std::to_string(seconds) + " s, limit " +
                std::to_string(c.time_limit_seconds) + " s";
    }
    std::printf("[%s] AC%d %s (%.3f s)%s%s\n", outcome ? "FAIL" : "PASS", c.id, c.name, seconds,
                outcome ? ": " : "", outcome ? outcome->c_str() : "");
    failures += outcome ? 1 : 0;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
