#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace permq {

/// Arbitrary-precision signed integer used for every exact count.
using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(unsigned n);

/// nPk = n! / (n-k)!; zero when k > n.
BigInt falling_factorial(unsigned n, unsigned k);

/// nCk; zero when k > n.
BigInt binomial(unsigned n, unsigned k);

double to_double(const BigInt& value);

std::string to_string(const BigInt& value);

/// Parses a base-10 integer with an optional leading '-'. Throws std::invalid_argument.
BigInt parse_bigint(const std::string& text);

} // namespace permq
