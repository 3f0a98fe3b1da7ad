#pragma once

#include <cstdint>

#include "permq/bigint.hpp"
#include "permq/binary_matrix.hpp"
#include "permq/errors.hpp"

namespace permq {

/// Permanent by direct expansion over all n! permutations.
///
/// This is the reference oracle, O(n! * n). Guarded at `limits.naive_max_n`
/// (default 10); the hard ceiling is 20, where n! still fits 64 bits.
std::uint64_t permanent_naive(const BinaryMatrix& m, const Limits& limits = {});

/// Permanent by Ryser inclusion-exclusion over column subsets, walked in
/// Gray-code order so each step adjusts the row sums by a single column.
///
/// O(2^n * n). Guarded at `limits.ryser_max_n` (default 30); hard ceiling 62.
/// Uses 64-bit accumulation up to n = 13, 128-bit up to n = 22 and BigInt
/// beyond.
BigInt permanent_ryser(const BinaryMatrix& m, const Limits& limits = {});

} // namespace permq
