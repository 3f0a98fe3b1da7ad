#include "permq/bigint.hpp"

#include <cctype>
#include <stdexcept>

namespace permq {

BigInt factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned i = 2; i <= n; ++i) {
    result *= i;
  }
  return result;
}

BigInt falling_factorial(unsigned n, unsigned k) {
  if (k > n) {
    return 0;
  }
  BigInt result = 1;
  for (unsigned i = 0; i < k; ++i) {
    result *= n - i;
  }
  return result;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) {
    return 0;
  }
  if (k > n - k) {
    k = n - k;
  }
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    // Exact at every step: result holds C(n-k+i-1, i-1) before the multiply.
    result *= n - k + i;
    result /= i;
  }
  return result;
}

double to_double(const BigInt& value) { return value.convert_to<double>(); }

std::string to_string(const BigInt& value) { return value.str(); }

BigInt parse_bigint(const std::string& text) {
  std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (start == text.size()) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("not an integer: '" + text + "'");
    }
  }
  return BigInt(text);
}

} // namespace permq
