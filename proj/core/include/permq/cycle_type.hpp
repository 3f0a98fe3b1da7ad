#pragma once

#include <string>
#include <vector>

#include "permq/bigint.hpp"

namespace permq {

/// Cycle type of a permutation of n items: cycle length j occurs a_j times.
struct CycleType {
  struct Part {
    int length;
    int multiplicity;
    friend bool operator==(const Part&, const Part&) = default;
  };

  /// Parts sorted by decreasing length, multiplicities >= 1.
  std::vector<Part> parts;

  int degree() const;
  int fixed_points() const;
  /// Non-fixed points, i.e. the number of variable elements of the matching
  /// family-C term.
  int moved_points() const { return degree() - fixed_points(); }

  /// n! / prod_j (j^{a_j} a_j!).
  BigInt class_size() const;

  /// Exponent notation such as "4^1 1^1".
  std::string to_string() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;
};

/// All cycle types of S_n, i.e. integer partitions of n.
///
/// Order: decreasing largest part, then lexicographically decreasing on the
/// remaining parts. n = 0 yields the single empty type.
std::vector<CycleType> cycle_types(int n);

} // namespace permq
