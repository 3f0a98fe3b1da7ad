#include <algorithm>
#include <bit>
#include <string>
#include <thread>
#include <vector>

#include "permq/prob_poly.hpp"
#include "ryser_kernel.hpp"

namespace permq {

namespace {

constexpr int kHardMaxVariables = 40;

// Maps an assignment index to row words without going through BinaryMatrix.
// Row-major mask order makes each row's variable bits a contiguous slice of
// the assignment, so a row is one shift, one mask and one table lookup.
class RowScatter {
public:
  RowScatter(Family family, int n) : n_(n), offset_(n), width_(n), table_(n) {
    const VariableMask mask(family, n);
    int offset = 0;
    for (int i = 0; i < n; ++i) {
      std::vector<int> cols;
      std::uint64_t fixed = 0;
      for (int j = 0; j < n; ++j) {
        if (is_variable(family, i, j)) {
          cols.push_back(j);
        } else {
          fixed |= std::uint64_t{1} << j;
        }
      }
      offset_[i] = offset;
      width_[i] = static_cast<int>(cols.size());
      offset += width_[i];
      table_[i].resize(std::size_t{1} << width_[i]);
      for (std::uint64_t v = 0; v < table_[i].size(); ++v) {
        std::uint64_t row = fixed;
        for (int b = 0; b < width_[i]; ++b) {
          row |= ((v >> b) & 1U) << cols[b];
        }
        table_[i][v] = row;
      }
    }
  }

  void scatter(std::uint64_t assignment, std::uint64_t* rows) const {
    for (int i = 0; i < n_; ++i) {
      rows[i] = table_[i][(assignment >> offset_[i]) & low_bits(width_[i])];
    }
  }

private:
  int n_;
  std::vector<int> offset_;
  std::vector<int> width_;
  std::vector<std::vector<std::uint64_t>> table_;
};

} // namespace

ExactCounts exact_counts(Family family, int n, const EnumerationOptions& options) {
  if (n < 1) {
    throw std::out_of_range("exact_counts: n must be >= 1");
  }
  const int k_total = variable_count(family, n);
  const auto& limits = options.limits;
  if (k_total > kHardMaxVariables || (!limits.force && k_total > limits.exact_max_variables)) {
    throw GuardError("exact_counts: " + std::to_string(k_total) +
                     " variable elements means 2^" + std::to_string(k_total) +
                     " matrices, above the limit of 2^" +
                     std::to_string(limits.force ? kHardMaxVariables : limits.exact_max_variables) +
                     (limits.force ? "" : " (use force to override)"));
  }

  const RowScatter scatter(family, n);
  const std::int64_t target = target_value(family);
  const std::uint64_t total = std::uint64_t{1} << k_total;

  unsigned workers = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, 256);
  if (total < workers) {
    workers = 1;
  }

  std::vector<std::vector<std::uint64_t>> tallies(workers,
                                                  std::vector<std::uint64_t>(k_total + 1, 0));
  auto run = [&](unsigned w) {
    const std::uint64_t begin = total / workers * w;
    const std::uint64_t end = (w + 1 == workers) ? total : total / workers * (w + 1);
    auto& tally = tallies[w];
    auto sweep = [&](auto permanent) {
      std::uint64_t rows[detail::kMaxKernelDimension];
      for (std::uint64_t a = begin; a < end; ++a) {
        scatter.scatter(a, rows);
        if (permanent(rows) == target) {
          ++tally[std::popcount(a)];
        }
      }
    };
    switch (n) {
    case 1: sweep(detail::ryser_kernel_fixed<1>); break;
    case 2: sweep(detail::ryser_kernel_fixed<2>); break;
    case 3: sweep(detail::ryser_kernel_fixed<3>); break;
    case 4: sweep(detail::ryser_kernel_fixed<4>); break;
    case 5: sweep(detail::ryser_kernel_fixed<5>); break;
    case 6: sweep(detail::ryser_kernel_fixed<6>); break;
    default:
      sweep([n](const std::uint64_t* rows) { return detail::ryser_kernel<std::int64_t>(rows, n); });
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back(run, w);
    }
    for (auto& t : pool) {
      t.join();
    }
  }

  ExactCounts result{family, n, k_total, std::vector<BigInt>(k_total + 1, 0)};
  for (const auto& tally : tallies) {
    for (int i = 0; i <= k_total; ++i) {
      result.counts[i] += tally[i];
    }
  }
  return result;
}

} // namespace permq
