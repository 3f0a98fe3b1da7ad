#include "permq/term_dist.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "permq/cycle_type.hpp"

namespace permq {

namespace {

void check_index(int n, int m, const char* what) {
  if (n < 0 || m < 0 || m > n) {
    throw std::out_of_range(std::string(what) + ": index (n=" + std::to_string(n) +
                            ", m=" + std::to_string(m) + ") out of range");
  }
}

int sign(int k) { return k % 2 == 0 ? 1 : -1; }

} // namespace

BigInt TermDistribution::total() const {
  BigInt sum = 0;
  for (const auto& c : counts) {
    sum += c;
  }
  return sum;
}

BigInt derangements(int m) {
  if (m < 0) {
    throw std::out_of_range("derangements: negative size");
  }
  BigInt sum = 0;
  for (int l = 0; l <= m; ++l) {
    // m!/l! = mP(m-l)
    BigInt term = falling_factorial(m, m - l);
    sum += sign(l) * term;
  }
  return sum;
}

BigInt w_closed_form(int n, int m) {
  check_index(n, m, "w_closed_form");
  return binomial(n, m) * derangements(m);
}

std::vector<std::vector<BigInt>> w_recurrence_table(int n_max) {
  if (n_max < 1) {
    throw std::out_of_range("w_recurrence_table: n_max must be >= 1");
  }
  std::vector<std::vector<BigInt>> table(n_max + 1);
  table[0] = {1};
  table[1] = {1, 0};
  for (int n = 2; n <= n_max; ++n) {
    auto& row = table[n];
    row.assign(n + 1, 0);
    const BigInt& prev_diag = table[n - 1][n - 1];
    row[0] = 1;
    row[n] = n * prev_diag + sign(n);
    row[n - 1] = n * prev_diag;
    for (int m = 1; m <= n - 2; ++m) {
      row[m] = falling_factorial(n, m) / factorial(m) * table[m][m];
    }
  }
  return table;
}

BigInt w_via_cycles(int n, int m) {
  check_index(n, m, "w_via_cycles");
  BigInt total = 0;
  for (const auto& type : cycle_types(n)) {
    if (type.fixed_points() == n - m) {
      total += type.class_size();
    }
  }
  return total;
}

BigInt v_closed_form(int n, int m) {
  if (n < 1) {
    throw std::out_of_range("v_closed_form: n must be >= 1");
  }
  check_index(n, m, "v_closed_form");
  if (m == 0) {
    return 0;
  }
  const BigInt numerator = binomial(n, m) * ((m + 1) * derangements(m) - sign(m));
  BigInt quotient;
  BigInt remainder;
  boost::multiprecision::divide_qr(numerator, BigInt(n), quotient, remainder);
  if (remainder != 0) {
    throw std::logic_error("v_closed_form: inexact division");
  }
  return quotient;
}

BigInt v_via_w(int n, int m) {
  if (n < 1) {
    throw std::out_of_range("v_via_w: n must be >= 1");
  }
  check_index(n, m, "v_via_w");
  auto w = [](int nn, int mm) -> BigInt {
    if (mm < 0 || mm > nn) {
      return 0;
    }
    return w_closed_form(nn, mm);
  };
  return w(n, m) - w(n - 1, m) + w(n - 1, m - 1);
}

TermDistribution e_table(Family family, int n) {
  if (n < 1) {
    throw std::out_of_range("e_table: n must be >= 1");
  }
  TermDistribution dist{n, family, std::vector<BigInt>(n + 1, 0)};
  for (int m = 0; m <= n; ++m) {
    switch (family) {
    case Family::A:
      dist.counts[m] = (m == n) ? factorial(n) : BigInt(0);
      break;
    case Family::B:
      dist.counts[m] = v_closed_form(n, m);
      break;
    case Family::C:
      dist.counts[m] = w_closed_form(n, m);
      break;
    }
  }
  return dist;
}

TermDistribution e_table_bruteforce(Family family, int n, const Limits& limits) {
  constexpr int kHardMax = 13;
  if (n < 1) {
    throw std::out_of_range("e_table_bruteforce: n must be >= 1");
  }
  if (n > kHardMax || (!limits.force && n > limits.naive_max_n)) {
    throw GuardError("e_table_bruteforce: dimension " + std::to_string(n) +
                     " exceeds the n! enumeration limit");
  }
  std::vector<std::uint64_t> tally(n + 1, 0);
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    int variable = 0;
    for (int j = 0; j < n; ++j) {
      variable += is_variable(family, sigma[j], j) ? 1 : 0;
    }
    ++tally[variable];
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  TermDistribution dist{n, family, {}};
  for (auto count : tally) {
    dist.counts.emplace_back(count);
  }
  return dist;
}

} // namespace permq
