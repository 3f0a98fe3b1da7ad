#include "permq/family.hpp"

#include <stdexcept>

namespace permq {

int target_value(Family family) noexcept { return family == Family::C ? 1 : 0; }

std::optional<int> special_diagonal(Family family) noexcept {
  if (family == Family::B) {
    return 0;
  }
  return std::nullopt;
}

bool is_variable(Family family, int row, int col) noexcept {
  switch (family) {
  case Family::A:
    return true;
  case Family::B:
    return row != col || row == 0;
  case Family::C:
    return row != col;
  }
  return false;
}

char to_char(Family family) noexcept {
  switch (family) {
  case Family::A:
    return 'A';
  case Family::B:
    return 'B';
  case Family::C:
    return 'C';
  }
  return '?';
}

Family parse_family(const std::string& text) {
  if (text == "A" || text == "a") {
    return Family::A;
  }
  if (text == "B" || text == "b") {
    return Family::B;
  }
  if (text == "C" || text == "c") {
    return Family::C;
  }
  throw std::invalid_argument("unknown matrix family '" + text + "' (expected A, B or C)");
}

VariableMask::VariableMask(Family family, int n) : family_(family), n_(n) {
  if (n < 1 || n > BinaryMatrix::kMaxDimension) {
    throw std::invalid_argument("matrix dimension must be in [1, 64]");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (is_variable(family, i, j)) {
        positions_.push_back({i, j});
      }
    }
  }
}

int variable_count(Family family, int n) {
  switch (family) {
  case Family::A:
    return n * n;
  case Family::B:
    return n * n - n + 1;
  case Family::C:
    return n * n - n;
  }
  return 0;
}

namespace {

std::vector<std::uint64_t> fixed_rows(Family family, int n) {
  std::vector<std::uint64_t> rows(n, 0);
  for (int i = 0; i < n; ++i) {
    if (!is_variable(family, i, i)) {
      rows[i] |= std::uint64_t{1} << i;
    }
  }
  return rows;
}

} // namespace

BinaryMatrix build_family_matrix(Family family, int n, std::span<const std::uint8_t> bits) {
  const VariableMask mask(family, n);
  if (static_cast<int>(bits.size()) != mask.count()) {
    throw std::invalid_argument("assignment length " + std::to_string(bits.size()) +
                                " does not match variable count " +
                                std::to_string(mask.count()));
  }
  auto rows = fixed_rows(family, n);
  for (int k = 0; k < mask.count(); ++k) {
    if (bits[k] > 1) {
      throw std::invalid_argument("assignment bits must be 0 or 1");
    }
    const auto [i, j] = mask.positions()[k];
    rows[i] |= std::uint64_t(bits[k]) << j;
  }
  return BinaryMatrix(std::move(rows));
}

BinaryMatrix build_family_matrix_from_index(Family family, int n, std::uint64_t assignment) {
  const VariableMask mask(family, n);
  const int k_total = mask.count();
  if (k_total > 64) {
    throw std::invalid_argument("assignment index form requires at most 64 variable elements");
  }
  if (assignment & ~low_bits(k_total)) {
    throw std::invalid_argument("assignment index has bits beyond the variable count");
  }
  auto rows = fixed_rows(family, n);
  for (int k = 0; k < k_total; ++k) {
    const auto [i, j] = mask.positions()[k];
    rows[i] |= ((assignment >> k) & 1U) << j;
  }
  return BinaryMatrix(std::move(rows));
}

} // namespace permq
