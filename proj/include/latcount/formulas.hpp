#pragma once

// Closed-form counts of lattices with exactly two and exactly three reducible
// elements, and of the maximal blocks they are built from. Every sum keeps the
// index bounds of its original form; simplified variants live beside them
// under their own names. Arguments outside a formula's range give 0.
//
// Each sum is written once, generic in its integer type. It is evaluated in
// overflow-checked 128-bit arithmetic first and redone in Count on overflow.
// Innermost loops stop early once their leading partition factor hits zero;
// that factor stays zero for the rest of the loop, so no term is dropped.

#include <string_view>
#include <type_traits>
#include <vector>

#include "latcount/partitions.hpp"

namespace latcount {

namespace detail {

struct WideOverflow {};

/// Signed 128-bit integer that throws WideOverflow instead of wrapping.
class Wide {
 public:
  constexpr Wide(long long v = 0) : v_(v) {}

  static Wide from_count(const Count& c) {
    if (c < 0 || boost::multiprecision::msb(c + 1) >= 126) throw WideOverflow{};
    const auto lo = static_cast<unsigned long long>(c & 0xFFFFFFFFFFFFFFFFull);
    const auto hi = static_cast<unsigned long long>(c >> 64);
    Wide w;
    w.v_ = (static_cast<__int128>(hi) << 64) | lo;
    return w;
  }

  Count to_count() const {
    const auto hi = static_cast<unsigned long long>(v_ >> 64);
    const auto lo = static_cast<unsigned long long>(v_ & 0xFFFFFFFFFFFFFFFFull);
    return (Count(hi) << 64) | Count(lo);
  }

  friend Wide operator+(Wide a, Wide b) {
    Wide r;
    if (__builtin_add_overflow(a.v_, b.v_, &r.v_)) throw WideOverflow{};
    return r;
  }
  friend Wide operator*(Wide a, Wide b) {
    Wide r;
    if (((a.v_ | b.v_) >> 62) == 0) {
      r.v_ = a.v_ * b.v_;  // both below 2^62: no overflow possible
      return r;
    }
    if (__builtin_mul_overflow(a.v_, b.v_, &r.v_)) throw WideOverflow{};
    return r;
  }
  Wide& operator+=(Wide b) { return *this = *this + b; }
  friend bool operator==(Wide a, Wide b) { return a.v_ == b.v_; }

 private:
  __int128 v_ = 0;  // only ever non-negative here
};

inline Count to_count(const Count& c) { return c; }
inline Count to_count(Wide w) { return w.to_count(); }

/// Read-only snapshot of P^k_n for n <= n_max in integer type Int.
template <class Int>
class PTable {
 public:
  explicit PTable(int n_max) : rows_(n_max < 0 ? 0 : n_max + 1) {
    for (int n = 0; n <= n_max; ++n) {
      rows_[n].reserve(n + 1);
      for (int k = 0; k <= n; ++k) {
        const Count& c = partition_count(n, k);
        if constexpr (std::is_same_v<Int, Count>) rows_[n].push_back(c);
        else rows_[n].push_back(Int::from_count(c));
      }
    }
  }

  const Int& operator()(int n, int k) const {
    if (n < 0 || k < 0 || k > n || n >= static_cast<int>(rows_.size())) return zero_;
    return rows_[n][k];
  }

 private:
  std::vector<std::vector<Int>> rows_;
  Int zero_{0};
};

/// Runs `f(PTable)` in Wide, falling back to Count when a value overflows.
template <class F>
Count exact(int n_max, F&& f) {
  try {
    return to_count(f(PTable<Wide>(n_max)));
  } catch (const WideOverflow&) {
    return to_count(f(PTable<Count>(n_max)));
  }
}

}  // namespace detail

enum class TwoReducibleForm { Thakare, BlockFirst };

constexpr std::string_view to_string(TwoReducibleForm form) {
  return form == TwoReducibleForm::Thakare ? "thakare" : "block_first";
}

/// Two-reducible maximal blocks on m elements with m + k covers: P^{k+2}_{m-2}
/// for m >= 4 and 0 <= k <= m - 4.
inline Count two_reducible_blocks(int m, int k) {
  if (m < 4 || k < 0 || k > m - 4) return 0;
  return partition_count(m - 2, k + 2);
}

/// Two-reducible maximal blocks on m elements, all edge counts.
inline Count two_reducible_blocks(int m) {
  Count total = 0;
  for (int k = 0; k <= m - 4; ++k) total += two_reducible_blocks(m, k);
  return total;
}

/// Lattices on n elements with exactly two reducible elements.
///   Thakare:     sum_{k=2}^{n-2} sum_{j=1}^{n-k-1} j P^k_{n-j-1}
///   BlockFirst:  sum_{i=0}^{n-4} sum_{k=0}^{n-i-4} (i+1) P^{k+2}_{n-i-2}
inline Count two_reducible_lattices(int n, TwoReducibleForm form = TwoReducibleForm::BlockFirst) {
  if (n < 4) return 0;
  return detail::exact(n, [&](const auto& P) {
    using Int = std::decay_t<decltype(P(0, 0))>;
    Int total = 0;
    if (form == TwoReducibleForm::Thakare) {
      for (int k = 2; k <= n - 2; ++k)
        for (int j = 1; j <= n - k - 1; ++j) total += j * P(n - j - 1, k);
    } else {
      for (int i = 0; i <= n - 4; ++i)
        for (int k = 0; k <= n - i - 4; ++k) total += (i + 1) * P(n - i - 2, k + 2);
    }
    return total;
  });
}

/// Maximal blocks with fundamental basic block F1 (equally F2), m elements,
/// m + k covers; valid for m >= 6, 1 <= k <= m - 5.
inline Count b1_blocks(int m, int k) {
  if (m < 6 || k < 1 || k > m - 5) return 0;
  return detail::exact(m, [&](const auto& P) {
    using Int = std::decay_t<decltype(P(0, 0))>;
    Int total = 0;
    for (int l = 1; l <= m - 5; ++l)
      for (int i = 1; i <= m - l - 4; ++i) total += P(m - l - i - 2, k + 1);
    for (int r = 5; r <= m - 2; ++r)
      for (int s = 1; s <= k - 1; ++s)
        for (int i = 1; i <= r - 4; ++i) total += P(r - i - 2, s + 1) * P(m - r, k - s + 1);
    return total;
  });
}

/// F3 blocks: m >= 7, 1 <= k <= m - 6.
inline Count b3_blocks(int m, int k) {
  if (m < 7 || k < 1 || k > m - 6) return 0;
  return detail::exact(m, [&](const auto& P) {
    using Int = std::decay_t<decltype(P(0, 0))>;
    Int total = 0;
    for (int l = 4; l <= m - 3; ++l)
      for (int t = 1; t <= k; ++t) total += P(l - 2, t + 1) * P(m - l - 1, k - t + 2);
    return total;
  });
}

/// F4 blocks: m >= 8, 2 <= k <= m - 6.
inline Count b4_blocks(int m, int k) {
  if (m < 8 || k < 2 || k > m - 6) return 0;
  return detail::exact(m, [&](const auto& P) {
    using Int = std::decay_t<decltype(P(0, 0))>;
    Int total = 0;
    for (int r = 1; r <= m - 7; ++r)
      for (int l = 4; l <= m - r - 3; ++l)
        for (int t = 1; t <= k - 1; ++t) total += P(l - 2, t + 1) * P(m - r - l - 1, k - t + 1);
    for (int r = 2; r <= m - 7; ++r)
      for (int s = 2; s <= k - 1; ++s)
        for (int l = 4; l <= m - r - 3; ++l)
          for (int t = 1; t <= k - s; ++t) {
            const auto& a = P(l - 2, t + 1);
            if (a == 0) break;
            total += a * P(m - r - l - 1, k - s - t + 2) * P(r, s);
          }
    return total;
  });
}

/// |B1(m)| = |B2(m)| summed over edge counts, as one double sum.
inline Count b1_family(int m) {
  if (m < 6) return 0;
  return detail::exact(m, [&](const auto& P) {
    using Int = std::decay_t<decltype(P(0, 0))>;
    Int total = 0;
    for (int k = 1; k <= m - 5; ++k)
      for (int l = 1; l <= m - 5; ++l)
        for (int i = 1; i <= m - l - 4; ++i) total += P(m - l - i - 2, k + 1);
    for (int k = 2; k <= m - 5; ++k)
      for (int r = 5; r <= m - 2; ++r)
        for (int s = 1; s <= k - 1; ++s)
          for (int i = 1; i <= r - 4; ++i) total += P(r - i - 2, s + 1) * P(m - r, k - s + 1);
    return total;
  });
}

inline Count b3_family(int m) {
  if (m < 7) return 0;
  return detail::exact(m, [&](const auto& P) {
    using Int = std::decay_t<decltype(P(0, 0))>;
    Int total = 0;
    for (int k = 1; k <= m - 6; ++k)
      for (int l = 4; l <= m - 3; ++l)
        for (int t = 1; t <= k; ++t) total += P(l - 2, t + 1) * P(m - l - 1, k - t + 2);
    return total;
  });
}

inline Count b4_family(int m) {
  if (m < 8) return 0;
  return detail::exact(m, [&](const auto& P) {
    using Int = std::decay_t<decltype(P(0, 0))>;
    Int total = 0;
    for (int k = 2; k <= m - 6; ++k)
      for (int r = 1; r <= m - 7; ++r)
        for (int l = 4; l <= m - r - 3; ++l)
          for (int t = 1; t <= k - 1; ++t) total += P(l - 2, t + 1) * P(m - r - l - 1, k - t + 1);
    for (int k = 3; k <= m - 6; ++k)
      for (int r = 2; r <= m - 7; ++r)
        for (int s = 2; s <= k - 1; ++s)
          for (int l = 4; l <= m - r - 3; ++l)
            for (int t = 1; t <= k - s; ++t) {
              const auto& a = P(l - 2, t + 1);
              if (a == 0) break;
              total += a * P(m - r - l - 1, k - s - t + 2) * P(r, s);
            }
    return total;
  });
}

/// Lattices on n elements whose fundamental basic block is F1 (equally F2).
inline Count l1_lattices(int n) {
  if (n < 6) return 0;
  return detail::exact(n, [&](const auto& P) {
    using Int = std::decay_t<decltype(P(0, 0))>;
    Int total = 0;
    for (int j = 0; j <= n - 6; ++j)
      for (int k = 1; k <= n - j - 5; ++k)
        for (int l = 1; l <= n - j - 5; ++l)
          for (int i = 1; i <= n - j - l - 4; ++i) total += (j + 1) * P(n - j - l - i - 2, k + 1);
    for (int j = 0; j <= n - 6; ++j)
      for (int k = 2; k <= n - j - 5; ++k)
        for (int r = 5; r <= n - j - 2; ++r)
          for (int s = 1; s <= k - 1; ++s)
            for (int i = 1; i <= r - 4; ++i) {
              const auto& a = P(r - i - 2, s + 1);
              if (a == 0) break;
              total += (j + 1) * a * P(n - j - r, k - s + 1);
            }
    return total;
  });
}

inline Count l2_lattices(int n) { return l1_lattices(n); }

/// Lattices on n elements whose fundamental basic block is F3.
inline Count l3_lattices(int n) {
  if (n < 7) return 0;
  return detail::exact(n, [&](const auto& P) {
    using Int = std::decay_t<decltype(P(0, 0))>;
    Int total = 0;
    for (int j = 0; j <= n - 7; ++j)
      for (int k = 1; k <= n - j - 6; ++k)
        for (int l = 4; l <= n - j - 3; ++l)
          for (int t = 1; t <= k; ++t) {
            const auto& a = P(l - 2, t + 1);
            if (a == 0) break;
            total += (j + 1) * a * P(n - j - l - 1, k - t + 2);
          }
    return total;
  });
}

/// Lattices on n elements whose fundamental basic block is F4.
inline Count l4_lattices(int n) {
  if (n < 8) return 0;
  return detail::exact(n, [&](const auto& P) {
    using Int = std::decay_t<decltype(P(0, 0))>;
    Int total = 0;
    for (int j = 0; j <= n - 8; ++j)
      for (int k = 2; k <= n - j - 6; ++k)
        for (int r = 1; r <= n - j - 7; ++r)
          for (int l = 4; l <= n - j - r - 3; ++l)
            for (int t = 1; t <= k - 1; ++t) {
              const auto& a = P(l - 2, t + 1);
              if (a == 0) break;
              total += (j + 1) * a * P(n - j - r - l - 1, k - t + 1);
            }
    for (int j = 0; j <= n - 8; ++j)
      for (int k = 3; k <= n - j - 6; ++k)
        for (int r = 2; r <= n - j - 7; ++r)
          for (int s = 2; s <= k - 1; ++s)
            for (int l = 4; l <= n - j - r - 3; ++l)
              for (int t = 1; t <= k - s; ++t) {
                const auto& a = P(l - 2, t + 1);
                if (a == 0) break;
                const auto& b = P(n - j - r - l - 1, k - s - t + 2);
                if (b == 0) continue;
                total += (j + 1) * a * b * P(r, s);
              }
    return total;
  });
}

/// Lattices on n elements with exactly three reducible elements, as the
/// five-sum over all four fundamental basic block classes.
inline Count three_reducible_lattices(int n) {
  if (n < 6) return 0;
  return detail::exact(n, [&](const auto& P) {
    using Int = std::decay_t<decltype(P(0, 0))>;
    Int total = 0;
    for (int j = 0; j <= n - 6; ++j)
      for (int k = 1; k <= n - j - 5; ++k)
        for (int l = 1; l <= n - j - 5; ++l)
          for (int i = 1; i <= n - j - l - 4; ++i) total += 2 * (j + 1) * P(n - j - l - i - 2, k + 1);
    for (int j = 0; j <= n - 6; ++j)
      for (int k = 2; k <= n - j - 5; ++k)
        for (int r = 5; r <= n - j - 2; ++r)
          for (int s = 1; s <= k - 1; ++s)
            for (int i = 1; i <= r - 4; ++i) {
              const auto& a = P(r - i - 2, s + 1);
              if (a == 0) break;
              total += 2 * (j + 1) * a * P(n - j - r, k - s + 1);
            }
    for (int j = 0; j <= n - 7; ++j)
      for (int k = 1; k <= n - j - 6; ++k)
        for (int l = 4; l <= n - j - 3; ++l)
          for (int t = 1; t <= k; ++t) {
            const auto& a = P(l - 2, t + 1);
            if (a == 0) break;
            total += (j + 1) * a * P(n - j - l - 1, k - t + 2);
          }
    for (int j = 0; j <= n - 8; ++j)
      for (int k = 2; k <= n - j - 6; ++k)
        for (int r = 1; r <= n - j - 7; ++r)
          for (int l = 4; l <= n - j - r - 3; ++l)
            for (int t = 1; t <= k - 1; ++t) {
              const auto& a = P(l - 2, t + 1);
              if (a == 0) break;
              total += (j + 1) * a * P(n - j - r - l - 1, k - t + 1);
            }
    for (int j = 0; j <= n - 8; ++j)
      for (int k = 3; k <= n - j - 6; ++k)
        for (int r = 2; r <= n - j - 7; ++r)
          for (int s = 2; s <= k - 1; ++s)
            for (int l = 4; l <= n - j - r - 3; ++l)
              for (int t = 1; t <= k - s; ++t) {
                const auto& a = P(l - 2, t + 1);
                if (a == 0) break;
                const auto& b = P(n - j - r - l - 1, k - s - t + 2);
                if (b == 0) continue;
                total += (j + 1) * a * b * P(r, s);
              }
    return total;
  });
}

/// 2 l1(n) + l3(n) + l4(n): the class-by-class total.
inline Count three_reducible_by_class(int n) {
  return 2 * l1_lattices(n) + l3_lattices(n) + l4_lattices(n);
}

}  // namespace latcount
