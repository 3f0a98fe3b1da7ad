#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permq/bigint.hpp"

namespace permq {

/// Which slice of the W (family C) or V (family B) triangle a sequence covers.
struct Selector {
  enum class Table { W, V };
  Table table = Table::W;
  /// Empty for the diagonal {E_n(n)}, otherwise the fixed column m.
  std::optional<int> column;

  /// Parses "W:diag", "V:col=3", ...; throws std::invalid_argument.
  static Selector parse(std::string_view text);
  std::string to_string() const;
};

struct SequenceRef {
  std::string oeis_id;
  Selector selector;
  int first_n = 1;
  /// Leading terms that also appear in the published tables.
  int tabled_terms = 0;
  /// "transcribed" or "self-referential"; applies to terms past the tabled prefix.
  std::string source;
  std::vector<BigInt> terms;

  bool self_referential() const { return source == "self-referential"; }
  std::string description() const;
};

/// Parses the plain-text reference format (see core/data/sequences.txt).
/// Throws std::invalid_argument with the offending line number.
std::vector<SequenceRef> parse_sequence_refs(std::string_view text);

/// The reference set compiled into the library.
const std::vector<SequenceRef>& builtin_sequence_refs();

/// Slice values for n = first_n .. first_n + count - 1.
std::vector<BigInt> generate_slice(const Selector& selector, int first_n, int count);

struct SequenceCheck {
  SequenceRef ref;
  bool passed = false;
  /// Dimension n of the first disagreeing term, when any.
  std::optional<int> mismatch_n;
  std::vector<BigInt> generated;
};

/// Compares generated slices against reference terms. Entirely offline.
std::vector<SequenceCheck> check_sequences(const std::vector<SequenceRef>& refs);

std::vector<SequenceCheck> builtin_checks();

} // namespace permq
