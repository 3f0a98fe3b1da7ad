#include "permq/prob_poly.hpp"

#include <cmath>
#include <stdexcept>

namespace permq {

namespace {

void check_probability(double r) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw std::domain_error("probability r must lie in [0, 1]");
  }
}

// ln(1 - r^m) for 0 < r < 1 without cancellation near r = 1.
double log_one_minus_power(double r, int m) {
  const double rm = std::pow(r, m);
  if (rm < 0.5) {
    return std::log1p(-rm);
  }
  return std::log(-std::expm1(m * std::log(r)));
}

// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

} // namespace

ApproxModel make_approx_model(Family family, int n) {
  return ApproxModel{family, n, e_table(family, n)};
}

double q_eval(const ApproxModel& model, double r) {
  check_probability(r);
  if (r == 0.0) {
    return 1.0;
  }
  const auto& counts = model.dist.counts;
  double log_q = 0.0;
  for (int m = 1; m < static_cast<int>(counts.size()); ++m) {
    if (counts[m] == 0) {
      continue;
    }
    if (r == 1.0) {
      return 0.0;
    }
    log_q += to_double(counts[m]) * log_one_minus_power(r, m);
  }
  return std::exp(log_q);
}

std::vector<BigInt> q_expand(const ApproxModel& model, const Limits& limits) {
  constexpr int kHardMax = 12;
  const auto& counts = model.dist.counts;
  if (model.n > kHardMax) {
    throw GuardError("q_expand: dimension " + std::to_string(model.n) + " exceeds 12");
  }
  BigInt degree = 0;
  for (int m = 1; m < static_cast<int>(counts.size()); ++m) {
    degree += m * counts[m];
  }
  if (!limits.force && degree > limits.expand_max_degree) {
    throw GuardError("q_expand: polynomial degree " + to_string(degree) + " exceeds the limit of " +
                     std::to_string(limits.expand_max_degree) + " (use force to override)");
  }

  std::vector<BigInt> poly{1};
  for (int m = 1; m < static_cast<int>(counts.size()); ++m) {
    if (counts[m] == 0) {
      continue;
    }
    const auto exponent = counts[m].convert_to<std::size_t>();
    std::vector<BigInt> next(poly.size() + exponent * m, 0);
    // (1 - r^m)^E = sum_k (-1)^k C(E, k) r^{km}
    BigInt coeff = 1;
    for (std::size_t k = 0; k <= exponent; ++k) {
      const BigInt signed_coeff = (k % 2 == 0) ? coeff : BigInt(-coeff);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        if (poly[i] != 0) {
          next[i + k * m] += poly[i] * signed_coeff;
        }
      }
      coeff = coeff * (exponent - k) / (k + 1);
    }
    poly = std::move(next);
  }
  return poly;
}

double p_eval(const ExactCounts& counts, double r) {
  check_probability(r);
  const int k_total = counts.variables;
  CompensatedSum sum;
  for (int i = 0; i <= k_total && i < static_cast<int>(counts.counts.size()); ++i) {
    if (counts.counts[i] == 0) {
      continue;
    }
    sum.add(to_double(counts.counts[i]) * std::pow(r, i) * std::pow(1.0 - r, k_total - i));
  }
  return sum.value();
}

std::string render_bernstein(const ExactCounts& counts) {
  const int k_total = counts.variables;
  std::string text;
  for (int i = 0; i <= k_total && i < static_cast<int>(counts.counts.size()); ++i) {
    const BigInt& c = counts.counts[i];
    if (c == 0) {
      continue;
    }
    if (!text.empty()) {
      text += '+';
    }
    std::string factors;
    if (i == 1) {
      factors += "r";
    } else if (i > 1) {
      factors += "r^" + std::to_string(i);
    }
    const int rest = k_total - i;
    if (rest == 1) {
      factors += "(1-r)";
    } else if (rest > 1) {
      factors += "(1-r)^" + std::to_string(rest);
    }
    if (c != 1 || factors.empty()) {
      text += to_string(c);
    }
    text += factors;
  }
  return text.empty() ? "0" : text;
}

std::vector<GridRow> compare_grid(const ApproxModel& model, const ExactCounts& counts,
                                  int points) {
  if (points < 2) {
    throw std::invalid_argument("compare_grid: need at least 2 grid points");
  }
  if (model.family != counts.family || model.n != counts.n) {
    throw std::invalid_argument("compare_grid: model and exact counts describe different matrices");
  }
  std::vector<GridRow> rows;
  rows.reserve(points);
  for (int k = 0; k < points; ++k) {
    const double r = static_cast<double>(k) / (points - 1);
    const double q = q_eval(model, r);
    const double p = p_eval(counts, r);
    rows.push_back({r, q, p, q - p});
  }
  return rows;
}

std::vector<GridRow> compare_grid(Family family, int n, int points,
                                  const EnumerationOptions& options) {
  if (points < 2) {
    throw std::invalid_argument("compare_grid: need at least 2 grid points");
  }
  return compare_grid(make_approx_model(family, n), exact_counts(family, n, options), points);
}

} // namespace permq
