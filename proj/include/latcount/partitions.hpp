#pragma once

// P^k_n: partitions of n into exactly k positive parts.

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace latcount {

/// Exact, unbounded counts; every census number flows through this type.
using Count = boost::multiprecision::cpp_int;

/// Memo for P^k_n via P^k_n = P^{k-1}_{n-1} + P^k_{n-k}, P^0_0 = 1.
/// Rows grow on demand. After `warm(n_max)` the const `at` is safe to call
/// from several threads at once for n <= n_max.
class PartitionTable {
 public:
  PartitionTable() : rows_{{Count(1)}} {}

  void warm(int n_max) {
    for (int n = static_cast<int>(rows_.size()); n <= n_max; ++n) {
      std::vector<Count> row(n + 1);
      for (int k = 1; k <= n; ++k) row[k] = rows_[n - 1][k - 1] + (n - k >= k ? rows_[n - k][k] : Count(0));
      rows_.push_back(std::move(row));
    }
  }

  int warmed_to() const noexcept { return static_cast<int>(rows_.size()) - 1; }

  /// Zero for every (n, k) outside 0 <= k <= n, except P^0_0 = 1.
  const Count& at(int n, int k) const {
    if (n < 0 || k < 0 || k > n || n >= static_cast<int>(rows_.size())) return zero();
    return rows_[n][k];
  }

  const Count& operator()(int n, int k) {
    if (n >= static_cast<int>(rows_.size()) && k >= 0 && k <= n) warm(n);
    return at(n, k);
  }

 private:
  static const Count& zero() {
    static const Count z(0);
    return z;
  }

  std::vector<std::vector<Count>> rows_;
};

namespace detail {
inline PartitionTable& thread_partition_table() {
  thread_local PartitionTable table;
  return table;
}
}  // namespace detail

/// P^k_n from a per-thread memo table.
inline const Count& partition_count(int n, int k) { return detail::thread_partition_table()(n, k); }

/// Every non-decreasing k-tuple of positive integers summing to n, in
/// lexicographic order.
inline std::vector<std::vector<int>> enumerate_partitions(int n, int k) {
  std::vector<std::vector<int>> out;
  if (n < 0 || k < 0) return out;
  std::vector<int> parts;
  auto fill = [&](auto&& self, int remaining, int slots, int min_part) -> void {
    if (slots == 0) {
      if (remaining == 0) out.push_back(parts);
      return;
    }
    for (int part = min_part; part * slots <= remaining; ++part) {
      parts.push_back(part);
      self(self, remaining - part, slots - 1, part);
      parts.pop_back();
    }
  };
  fill(fill, n, k, 1);
  return out;
}

}  // namespace latcount
