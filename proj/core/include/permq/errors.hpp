#pragma once

#include <stdexcept>
#include <string>

namespace permq {

/// A size guard was exceeded (dimension too large, enumeration too big).
///
/// Soft guards can be lifted with `Limits::forced()`; hard limits cannot.
class GuardError : public std::runtime_error {
public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

/// Size guards shared by the expensive operations.
struct Limits {
  int naive_max_n = 10;
  int ryser_max_n = 30;
  int exact_max_variables = 26;
  int expand_max_degree = 5000;
  bool force = false;

  static Limits forced() {
    Limits l;
    l.force = true;
    return l;
  }
};

} // namespace permq
