#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace permq {

/// Square 0/1 matrix of dimension 1..64, one 64-bit word per row.
///
/// Bit j of row i holds entry (i, j). Indices are zero-based; the special
/// diagonal element of family B is (0, 0). Instances are immutable values.
class BinaryMatrix {
public:
  static constexpr int kMaxDimension = 64;

  /// Builds from row words; bits at or above column n must be clear.
  explicit BinaryMatrix(std::vector<std::uint64_t> rows);

  /// Builds from nested 0/1 literals, e.g. `{{0, 1}, {1, 1}}`.
  BinaryMatrix(std::initializer_list<std::initializer_list<int>> entries);

  static BinaryMatrix zeros(int n);
  static BinaryMatrix ones(int n);
  static BinaryMatrix identity(int n);
  /// All ones except a zero diagonal.
  static BinaryMatrix ones_minus_identity(int n);

  int size() const noexcept { return static_cast<int>(rows_.size()); }
  int entry(int row, int col) const;
  std::uint64_t row_bits(int row) const;
  std::span<const std::uint64_t> rows() const noexcept { return rows_; }
  int count_ones() const noexcept;

  BinaryMatrix transposed() const;
  BinaryMatrix with_entry(int row, int col, int value) const;
  /// Returns Q with Q(perm[i], perm[j]) = M(i, j).
  BinaryMatrix permuted(std::span<const int> perm) const;

  std::string to_string() const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

private:
  std::vector<std::uint64_t> rows_;
};

inline std::uint64_t low_bits(int n) noexcept {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

} // namespace permq
