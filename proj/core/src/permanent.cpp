#include "permq/permanent.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "ryser_kernel.hpp"

namespace permq {

namespace {

constexpr int kNaiveHardMax = 20;
constexpr int kRyserHardMax = 62;
constexpr int kInt64MaxN = 13;
constexpr int kInt128MaxN = 22;

void check_guard(int n, int soft, int hard, bool force, const char* what) {
  if (n > hard || (!force && n > soft)) {
    throw GuardError(std::string(what) + ": dimension " + std::to_string(n) +
                     " exceeds the limit of " + std::to_string(force ? hard : soft) +
                     (force || n > hard ? "" : " (use force to override)"));
  }
}

BigInt from_int128(__int128 value) {
  const bool negative = value < 0;
  unsigned __int128 magnitude = negative ? -static_cast<unsigned __int128>(value)
                                         : static_cast<unsigned __int128>(value);
  BigInt result = static_cast<std::uint64_t>(magnitude >> 64);
  result <<= 64;
  result += static_cast<std::uint64_t>(magnitude);
  return negative ? BigInt(-result) : result;
}

} // namespace

std::uint64_t permanent_naive(const BinaryMatrix& m, const Limits& limits) {
  const int n = m.size();
  check_guard(n, limits.naive_max_n, kNaiveHardMax, limits.force, "permanent_naive");
  const auto rows = m.rows();
  // sigma[j] is the row paired with column j.
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::uint64_t total = 0;
  do {
    bool all_one = true;
    for (int j = 0; j < n && all_one; ++j) {
      all_one = (rows[sigma[j]] >> j) & 1U;
    }
    total += all_one ? 1 : 0;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

BigInt permanent_ryser(const BinaryMatrix& m, const Limits& limits) {
  const int n = m.size();
  check_guard(n, limits.ryser_max_n, kRyserHardMax, limits.force, "permanent_ryser");
  const auto rows = m.rows();
  if (n <= kInt64MaxN) {
    return detail::ryser_kernel<std::int64_t>(rows.data(), n);
  }
  if (n <= kInt128MaxN) {
    return from_int128(detail::ryser_kernel<__int128>(rows.data(), n));
  }
  return detail::ryser_kernel<BigInt>(rows.data(), n);
}

} // namespace permq
