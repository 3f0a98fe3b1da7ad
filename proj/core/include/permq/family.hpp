#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "permq/binary_matrix.hpp"

namespace permq {

/// The three random-matrix families.
///
///  A: every entry is variable; target permanent 0.
///  B: diagonal fixed at 1 except the variable entry (0, 0); target 0.
///  C: diagonal fixed at 1; target 1 (only the diagonal term survives).
enum class Family { A, B, C };

inline constexpr Family kAllFamilies[] = {Family::A, Family::B, Family::C};

/// Permanent value u whose probability is studied.
int target_value(Family family) noexcept;

/// Index of the variable diagonal entry, present only for family B.
std::optional<int> special_diagonal(Family family) noexcept;

bool is_variable(Family family, int row, int col) noexcept;

char to_char(Family family) noexcept;

/// Accepts "A"/"B"/"C" (case-insensitive). Throws std::invalid_argument.
Family parse_family(const std::string& text);

struct Position {
  int row;
  int col;
  friend bool operator==(const Position&, const Position&) = default;
};

/// Variable positions of a family at dimension n in row-major order.
///
/// Position k of the mask is driven by bit k of an assignment.
class VariableMask {
public:
  VariableMask(Family family, int n);

  Family family() const noexcept { return family_; }
  int dimension() const noexcept { return n_; }
  int count() const noexcept { return static_cast<int>(positions_.size()); }
  std::span<const Position> positions() const noexcept { return positions_; }

private:
  Family family_;
  int n_;
  std::vector<Position> positions_;
};

/// K = n^2 (A), n^2 - n + 1 (B), n^2 - n (C).
int variable_count(Family family, int n);

/// Fixed entries are 1; variable entries take the assignment bits in mask order.
///
/// Throws std::invalid_argument when `bits.size()` differs from the mask count
/// or a bit is not 0/1.
BinaryMatrix build_family_matrix(Family family, int n, std::span<const std::uint8_t> bits);

/// Same, with bit k of `assignment` driving mask position k. Requires K <= 64;
/// bits at or above K must be clear.
BinaryMatrix build_family_matrix_from_index(Family family, int n, std::uint64_t assignment);

} // namespace permq
