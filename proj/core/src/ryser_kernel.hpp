#pragma once

#include <bit>
#include <cstdint>

namespace permq::detail {

inline constexpr int kMaxKernelDimension = 64;

/// Ryser sum for a 0/1 matrix given as row words, accumulated in Acc.
///
/// Caller guarantees Acc cannot overflow: |sum| <= 2^n * n^n.
template <typename Acc>
Acc ryser_kernel(const std::uint64_t* rows, int n) {
  int row_sum[kMaxKernelDimension] = {};
  Acc total = 0;
  bool odd_subset = false;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const int col = std::countr_zero(k);
    gray ^= std::uint64_t{1} << col;
    const bool added = (gray >> col) & 1U;
    const int delta = added ? 1 : -1;
    for (int i = 0; i < n; ++i) {
      row_sum[i] += delta * static_cast<int>((rows[i] >> col) & 1U);
    }
    odd_subset = !odd_subset;
    Acc product = 1;
    for (int i = 0; i < n && product != 0; ++i) {
      product *= row_sum[i];
    }
    if (odd_subset) {
      total -= product;
    } else {
      total += product;
    }
  }
  // Sign of the full sum is (-1)^n.
  return (n % 2 == 1) ? Acc(-total) : total;
}

/// Same sum with the dimension fixed at compile time, for the enumeration
/// hot loop. N <= 13 keeps the 64-bit accumulator exact.
template <int N>
std::int64_t ryser_kernel_fixed(const std::uint64_t* rows) {
  static_assert(N >= 1 && N <= 13);
  int row_sum[N] = {};
  std::int64_t total = 0;
  bool odd_subset = false;
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < (std::uint64_t{1} << N); ++k) {
    const int col = std::countr_zero(k);
    gray ^= std::uint64_t{1} << col;
    const int delta = ((gray >> col) & 1U) ? 1 : -1;
    std::int64_t product = 1;
    for (int i = 0; i < N; ++i) {
      row_sum[i] += delta * static_cast<int>((rows[i] >> col) & 1U);
      product *= row_sum[i];
    }
    odd_subset = !odd_subset;
    total += odd_subset ? -product : product;
  }
  return (N % 2 == 1) ? -total : total;
}

} // namespace permq::detail
