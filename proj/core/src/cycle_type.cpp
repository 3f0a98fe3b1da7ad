#include "permq/cycle_type.hpp"

#include <stdexcept>

namespace permq {

int CycleType::degree() const {
  int total = 0;
  for (const auto& part : parts) {
    total += part.length * part.multiplicity;
  }
  return total;
}

int CycleType::fixed_points() const {
  for (const auto& part : parts) {
    if (part.length == 1) {
      return part.multiplicity;
    }
  }
  return 0;
}

BigInt CycleType::class_size() const {
  BigInt denominator = 1;
  for (const auto& part : parts) {
    denominator *= boost::multiprecision::pow(BigInt(part.length), part.multiplicity);
    denominator *= factorial(part.multiplicity);
  }
  return factorial(degree()) / denominator;
}

std::string CycleType::to_string() const {
  std::string text;
  for (const auto& part : parts) {
    if (!text.empty()) {
      text += ' ';
    }
    text += std::to_string(part.length) + '^' + std::to_string(part.multiplicity);
  }
  return text.empty() ? "e" : text;
}

namespace {

void partitions(int remaining, int max_part, std::vector<int>& current,
                std::vector<CycleType>& out) {
  if (remaining == 0) {
    CycleType type;
    for (int length : current) {
      if (!type.parts.empty() && type.parts.back().length == length) {
        ++type.parts.back().multiplicity;
      } else {
        type.parts.push_back({length, 1});
      }
    }
    out.push_back(std::move(type));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

} // namespace

std::vector<CycleType> cycle_types(int n) {
  if (n < 0) {
    throw std::out_of_range("cycle_types: negative degree");
  }
  std::vector<CycleType> out;
  std::vector<int> current;
  partitions(n, n, current, out);
  return out;
}

} // namespace permq
