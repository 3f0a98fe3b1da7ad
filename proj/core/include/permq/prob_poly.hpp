#pragma once

#include <string>
#include <vector>

#include "permq/bigint.hpp"
#include "permq/errors.hpp"
#include "permq/family.hpp"
#include "permq/term_dist.hpp"

namespace permq {

/// Independent-terms approximation Q(r) = prod_{m>=1} (1 - r^m)^{E_n(m)}.
struct ApproxModel {
  Family family;
  int n;
  TermDistribution dist;
};

ApproxModel make_approx_model(Family family, int n);

/// Q(r) evaluated in log space. Q(0) = 1; Q(1) = 0 whenever some E_n(m) with
/// m >= 1 is positive. Throws std::domain_error for r outside [0, 1].
double q_eval(const ApproxModel& model, double r);

/// Monomial coefficients c_0..c_d of Q, where d = sum_m m E_n(m).
///
/// Hard limit n <= 12; the degree is guarded by `limits.expand_max_degree`.
std::vector<BigInt> q_expand(const ApproxModel& model, const Limits& limits = {});

/// Exact probability that per = u, in the Bernstein basis over the K
/// variable elements: P(r) = sum_i counts[i] r^i (1-r)^{K-i}.
///
/// counts[i] is the number of assignments with i ones whose matrix has
/// permanent u.
struct ExactCounts {
  Family family;
  int n;
  int variables;
  std::vector<BigInt> counts;

  friend bool operator==(const ExactCounts&, const ExactCounts&) = default;
};

struct EnumerationOptions {
  Limits limits{};
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Walks all 2^K assignments of the family's variable elements, computing
/// each permanent with the Ryser kernel. The assignment range is split into
/// contiguous blocks, one per worker, and the per-worker tallies are summed,
/// so the result does not depend on the worker count.
///
/// Guarded at K <= `limits.exact_max_variables` (default 26); hard limit 40.
ExactCounts exact_counts(Family family, int n, const EnumerationOptions& options = {});

/// Bernstein-form evaluation with compensated summation.
/// Throws std::domain_error for r outside [0, 1].
double p_eval(const ExactCounts& counts, double r);

/// Renders P in the form "(1-r)^6+6r(1-r)^5+12r^2(1-r)^4+6r^3(1-r)^3".
std::string render_bernstein(const ExactCounts& counts);

struct GridRow {
  double r;
  double q;
  double p;
  double diff;
};

/// Uniform grid of `points` values on [0, 1] including both ends.
/// Throws std::invalid_argument when points < 2.
std::vector<GridRow> compare_grid(const ApproxModel& model, const ExactCounts& counts, int points);

std::vector<GridRow> compare_grid(Family family, int n, int points,
                                  const EnumerationOptions& options = {});

} // namespace permq
