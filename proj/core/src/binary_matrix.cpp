#include "permq/binary_matrix.hpp"

#include <bit>
#include <stdexcept>

namespace permq {

namespace {

void check_dimension(int n) {
  if (n < 1 || n > BinaryMatrix::kMaxDimension) {
    throw std::invalid_argument("matrix dimension must be in [1, 64], got " + std::to_string(n));
  }
}

} // namespace

BinaryMatrix::BinaryMatrix(std::vector<std::uint64_t> rows) : rows_(std::move(rows)) {
  const int n = size();
  check_dimension(n);
  for (auto row : rows_) {
    if (row & ~low_bits(n)) {
      throw std::invalid_argument("row has bits outside the matrix");
    }
  }
}

BinaryMatrix::BinaryMatrix(std::initializer_list<std::initializer_list<int>> entries) {
  const int n = static_cast<int>(entries.size());
  check_dimension(n);
  rows_.reserve(n);
  for (const auto& row : entries) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("matrix literal is not square");
    }
    std::uint64_t bits = 0;
    int j = 0;
    for (int value : row) {
      if (value != 0 && value != 1) {
        throw std::invalid_argument("matrix entries must be 0 or 1");
      }
      bits |= std::uint64_t(value) << j++;
    }
    rows_.push_back(bits);
  }
}

BinaryMatrix BinaryMatrix::zeros(int n) {
  check_dimension(n);
  return BinaryMatrix(std::vector<std::uint64_t>(n, 0));
}

BinaryMatrix BinaryMatrix::ones(int n) {
  check_dimension(n);
  return BinaryMatrix(std::vector<std::uint64_t>(n, low_bits(n)));
}

BinaryMatrix BinaryMatrix::identity(int n) {
  check_dimension(n);
  std::vector<std::uint64_t> rows(n);
  for (int i = 0; i < n; ++i) {
    rows[i] = std::uint64_t{1} << i;
  }
  return BinaryMatrix(std::move(rows));
}

BinaryMatrix BinaryMatrix::ones_minus_identity(int n) {
  check_dimension(n);
  std::vector<std::uint64_t> rows(n);
  for (int i = 0; i < n; ++i) {
    rows[i] = low_bits(n) & ~(std::uint64_t{1} << i);
  }
  return BinaryMatrix(std::move(rows));
}

int BinaryMatrix::entry(int row, int col) const {
  if (row < 0 || row >= size() || col < 0 || col >= size()) {
    throw std::out_of_range("matrix index out of range");
  }
  return static_cast<int>((rows_[row] >> col) & 1U);
}

std::uint64_t BinaryMatrix::row_bits(int row) const {
  if (row < 0 || row >= size()) {
    throw std::out_of_range("matrix row out of range");
  }
  return rows_[row];
}

int BinaryMatrix::count_ones() const noexcept {
  int total = 0;
  for (auto row : rows_) {
    total += std::popcount(row);
  }
  return total;
}

BinaryMatrix BinaryMatrix::transposed() const {
  const int n = size();
  std::vector<std::uint64_t> out(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out[j] |= ((rows_[i] >> j) & 1U) << i;
    }
  }
  return BinaryMatrix(std::move(out));
}

BinaryMatrix BinaryMatrix::with_entry(int row, int col, int value) const {
  entry(row, col);
  if (value != 0 && value != 1) {
    throw std::invalid_argument("matrix entries must be 0 or 1");
  }
  auto out = rows_;
  const auto bit = std::uint64_t{1} << col;
  out[row] = value ? (out[row] | bit) : (out[row] & ~bit);
  return BinaryMatrix(std::move(out));
}

BinaryMatrix BinaryMatrix::permuted(std::span<const int> perm) const {
  const int n = size();
  if (static_cast<int>(perm.size()) != n) {
    throw std::invalid_argument("permutation length does not match matrix dimension");
  }
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[p] = true;
  }
  std::vector<std::uint64_t> out(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out[perm[i]] |= ((rows_[i] >> j) & 1U) << perm[j];
    }
  }
  return BinaryMatrix(std::move(out));
}

std::string BinaryMatrix::to_string() const {
  std::string text;
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      text += ((rows_[i] >> j) & 1U) ? '1' : '0';
    }
    text += '\n';
  }
  return text;
}

} // namespace permq
