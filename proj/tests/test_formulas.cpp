#include <gtest/gtest.h>

#include "latcount/formulas.hpp"

using namespace latcount;

TEST(TwoReducible, BlockExamples) {
  EXPECT_EQ(two_reducible_blocks(4, 0), 1);
  EXPECT_EQ(two_reducible_blocks(6, 2), 1);
  EXPECT_EQ(two_reducible_blocks(5, 2), 0);
  EXPECT_EQ(two_reducible_blocks(3, 0), 0);
}

TEST(TwoReducible, LatticeExamples) {
  for (auto form : {TwoReducibleForm::Thakare, TwoReducibleForm::BlockFirst}) {
    EXPECT_EQ(two_reducible_lattices(4, form), 1);
    EXPECT_EQ(two_reducible_lattices(5, form), 4);
    EXPECT_EQ(two_reducible_lattices(6, form), 11);
    EXPECT_EQ(two_reducible_lattices(3, form), 0);
  }
}

TEST(TwoReducible, FormsAgreeUpToSixty) {
  for (int n = 4; n <= 60; ++n)
    EXPECT_EQ(two_reducible_lattices(n, TwoReducibleForm::Thakare), two_reducible_lattices(n, TwoReducibleForm::BlockFirst)) << n;
}

TEST(TwoReducible, FormNames) {
  EXPECT_EQ(to_string(TwoReducibleForm::Thakare), "thakare");
  EXPECT_EQ(to_string(TwoReducibleForm::BlockFirst), "block_first");
}

TEST(Blocks, Examples) {
  EXPECT_EQ(b1_blocks(6, 1), 1);
  EXPECT_EQ(b1_blocks(7, 1), 3);
  EXPECT_EQ(b1_blocks(7, 2), 2);
  EXPECT_EQ(b3_blocks(7, 1), 1);
  EXPECT_EQ(b3_blocks(7, 2), 0);
  EXPECT_EQ(b4_blocks(8, 2), 1);
  EXPECT_EQ(b4_blocks(8, 1), 0);
}

TEST(Blocks, ZeroBelowThreshold) {
  for (int m = 0; m <= 5; ++m)
    for (int k = 0; k <= 4; ++k) EXPECT_EQ(b1_blocks(m, k), 0);
  for (int k = 0; k <= 4; ++k) {
    EXPECT_EQ(b3_blocks(6, k), 0);
    EXPECT_EQ(b4_blocks(7, k), 0);
  }
  EXPECT_EQ(b1_family(5), 0);
  EXPECT_EQ(b3_family(6), 0);
  EXPECT_EQ(b4_family(7), 0);
}

TEST(Blocks, FamiliesAreSumsOverEdgeCounts) {
  for (int m = 4; m <= 30; ++m) {
    Count b = 0, b1 = 0, b3 = 0, b4 = 0;
    for (int k = 0; k <= m; ++k) {
      b += two_reducible_blocks(m, k);
      b1 += b1_blocks(m, k);
      b3 += b3_blocks(m, k);
      b4 += b4_blocks(m, k);
    }
    EXPECT_EQ(two_reducible_blocks(m), b) << m;
    EXPECT_EQ(b1_family(m), b1) << m;
    EXPECT_EQ(b3_family(m), b3) << m;
    EXPECT_EQ(b4_family(m), b4) << m;
  }
}

TEST(Lattices, Examples) {
  EXPECT_EQ(l1_lattices(5), 0);
  EXPECT_EQ(l1_lattices(6), 1);
  EXPECT_EQ(l1_lattices(7), 7);
  EXPECT_EQ(l2_lattices(7), 7);
  EXPECT_EQ(l3_lattices(6), 0);
  EXPECT_EQ(l3_lattices(7), 1);
  EXPECT_EQ(l4_lattices(7), 0);
  EXPECT_EQ(l4_lattices(8), 1);
  EXPECT_EQ(three_reducible_lattices(5), 0);
  EXPECT_EQ(three_reducible_lattices(6), 2);
  EXPECT_EQ(three_reducible_lattices(7), 15);
}

TEST(Lattices, PaddingABlockWithChains) {
  // A lattice is its maximal block with a chain of j elements split between
  // bottom and top in j + 1 ways.
  for (int n = 4; n <= 30; ++n) {
    Count two = 0, one = 0, three = 0, four = 0;
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k <= n; ++k) {
        two += (j + 1) * two_reducible_blocks(n - j, k);
        one += (j + 1) * b1_blocks(n - j, k);
        three += (j + 1) * b3_blocks(n - j, k);
        four += (j + 1) * b4_blocks(n - j, k);
      }
    EXPECT_EQ(two_reducible_lattices(n), two) << n;
    EXPECT_EQ(l1_lattices(n), one) << n;
    EXPECT_EQ(l3_lattices(n), three) << n;
    EXPECT_EQ(l4_lattices(n), four) << n;
  }
}

TEST(Lattices, FiveSumEqualsClassTotal) {
  for (int n = 0; n <= 60; ++n) EXPECT_EQ(three_reducible_lattices(n), three_reducible_by_class(n)) << n;
}

TEST(Lattices, KnownLargeValue) {
  EXPECT_EQ(three_reducible_lattices(60).str(), "1115579483100");
}

TEST(Lattices, MonotoneFromThreshold) {
  for (int n = 7; n <= 40; ++n) {
    EXPECT_GT(three_reducible_lattices(n), three_reducible_lattices(n - 1));
    EXPECT_GT(two_reducible_lattices(n), two_reducible_lattices(n - 1));
  }
}

TEST(Wide, RoundTripsAndOverflows) {
  using detail::Wide;
  const Count big = Count(1) << 120;
  EXPECT_EQ(Wide::from_count(big).to_count(), big);
  EXPECT_EQ((Wide::from_count(big) + Wide(5)).to_count(), big + 5);
  EXPECT_THROW(Wide::from_count(Count(1) << 127), detail::WideOverflow);
  EXPECT_THROW(Wide::from_count(big) * Wide::from_count(big), detail::WideOverflow);
  EXPECT_EQ((Wide(1LL << 40) * Wide(1LL << 40)).to_count(), Count(1) << 80);
}

TEST(Wide, FallbackAgreesWithExactArithmetic) {
  // A sum that overflows 128 bits must come back exact.
  auto f = [](const auto& P) {
    using Int = std::decay_t<decltype(P(0, 0))>;
    Int total = 1;
    for (int i = 0; i < 5; ++i) total = total * P(200, 10);
    return total;
  };
  Count expected = 1;
  for (int i = 0; i < 5; ++i) expected *= partition_count(200, 10);
  EXPECT_EQ(detail::exact(200, f), expected);
  EXPECT_GT(boost::multiprecision::msb(expected), 128u);
}
