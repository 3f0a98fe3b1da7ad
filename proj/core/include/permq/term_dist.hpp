#pragma once

#include <vector>

#include "permq/bigint.hpp"
#include "permq/errors.hpp"
#include "permq/family.hpp"

namespace permq {

/// E_n(m): how many of the n! permanent-expansion terms contain exactly m
/// variable elements, for m = 0..n.
struct TermDistribution {
  int n = 0;
  Family family = Family::A;
  std::vector<BigInt> counts;

  BigInt total() const;
  const BigInt& operator[](int m) const { return counts.at(m); }

  friend bool operator==(const TermDistribution&, const TermDistribution&) = default;
};

/// Number of derangements of m items, from the explicit alternating sum
/// D_m = sum_l (-1)^l m!/l!.
BigInt derangements(int m);

/// W_n(m) = nPm * sum_{l=0..m} (-1)^l / l!, evaluated as C(n, m) * D_m.
/// Throws std::out_of_range unless 0 <= m <= n.
BigInt w_closed_form(int n, int m);

/// Triangle of W built only from the recurrences
///   W_n(0) = 1, W_1(1) = 0,
///   W_n(n)   = n W_{n-1}(n-1) + (-1)^n,
///   W_n(n-1) = n W_{n-1}(n-1),
///   W_n(m)   = nPm / m! * W_m(m)  for 1 <= m <= n-2.
/// Row n has n + 1 entries; row 0 is {1}.
std::vector<std::vector<BigInt>> w_recurrence_table(int n_max);

/// W_n(m) summed over the cycle types of S_n with exactly n - m fixed points.
BigInt w_via_cycles(int n, int m);

/// V_n(m) = nPm / n * [(m+1) sum_{l<=m} (-1)^l/l! - (-1)^m/m!], with V_n(0) = 0.
/// Evaluated exactly as C(n, m) * ((m+1) D_m - (-1)^m) / n.
BigInt v_closed_form(int n, int m);

/// V_n(m) = W_n(m) - W_{n-1}(m) + W_{n-1}(m-1); out-of-range W terms are 0.
BigInt v_via_w(int n, int m);

/// Distribution from the closed forms: A is a point mass n! at m = n, B is
/// the V row and C the W row.
TermDistribution e_table(Family family, int n);

/// Oracle: walks all n! permutations and classifies each term by how many of
/// its entries (sigma(j), j) are variable for the family.
TermDistribution e_table_bruteforce(Family family, int n, const Limits& limits = {});

} // namespace permq
