#include <gtest/gtest.h>

#include "latcount/enumeration.hpp"
#include "oracles.hpp"

using namespace latcount;

namespace {

std::map<int, int> class_sizes(const OracleCensus& c) {
  std::map<int, int> out;
  for (const auto& [r, certs] : c.classes) out[r] = static_cast<int>(certs.size());
  return out;
}

std::vector<Certificate> duals(const std::vector<Certificate>& certs) {
  std::vector<Certificate> out;
  for (const auto& c : certs) out.push_back(canonical_certificate(dual(decode_certificate(c))));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(EnumerateAll, CountsUpToEight) {
  const std::size_t expected[] = {1, 1, 1, 2, 5, 15, 53, 222};
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(enumerate_all_lattices(n).size(), expected[n - 1]) << n;
}

TEST(EnumerateAll, EveryResultIsALattice) {
  for (const auto& c : enumerate_all_lattices(6)) {
    const auto p = decode_certificate(c);
    const auto le = oracle::closure(p);
    for (int a = 0; a < p.size(); ++a)
      for (int b = 0; b < p.size(); ++b) {
        EXPECT_TRUE(oracle::glb(le, a, b));
        EXPECT_TRUE(oracle::lub(le, a, b));
      }
  }
}

TEST(EnumerateAll, RefusesLargeN) {
  EXPECT_THROW(enumerate_all_lattices(kFullCensusLimit + 1), Error);
}

TEST(EnumerateByReducible, Examples) {
  EXPECT_EQ(enumerate_by_reducible(4, 2).size(), 1u);
  EXPECT_EQ(enumerate_by_reducible(6, 3).size(), 2u);
  EXPECT_TRUE(enumerate_by_reducible(5, 3).empty());
  EXPECT_TRUE(enumerate_by_reducible(3, 2).empty());
}

TEST(EnumerateByReducible, RejectsOtherClassesAndLargeN) {
  EXPECT_THROW(enumerate_by_reducible(6, 4), std::invalid_argument);
  try {
    enumerate_by_reducible(kReducibleCensusLimit + 1, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeLimitExceeded);
  }
}

TEST(EnumerateByReducible, MatchesFullSearch) {
  for (int n = 1; n <= 8; ++n) {
    const auto full = census(n, 1);
    for (int r : {2, 3}) {
      auto it = full.classes.find(r);
      const auto expected = it == full.classes.end() ? std::vector<Certificate>{} : it->second;
      EXPECT_EQ(enumerate_by_reducible(n, r, 1), expected) << n << " r=" << r;
    }
  }
}

TEST(EnumerateByReducible, ReducibleCountsHold) {
  for (int n = 4; n <= 9; ++n)
    for (int r : {2, 3})
      for (const auto& c : enumerate_by_reducible(n, r, 1))
        EXPECT_EQ(oracle::reducible_by_definition(decode_certificate(c)).size(), static_cast<std::size_t>(r));
}

TEST(EnumerateByReducible, ThreadCountDoesNotMatter) {
  for (int r : {2, 3}) EXPECT_EQ(enumerate_by_reducible(9, r, 1), enumerate_by_reducible(9, r, 4));
}

TEST(EnumerateByReducible, ClosedUnderDuality) {
  for (int n = 4; n <= 9; ++n)
    for (int r : {2, 3}) {
      const auto certs = enumerate_by_reducible(n, r, 1);
      EXPECT_EQ(duals(certs), certs) << n;
    }
}

TEST(EnumerateByReducible, TwoReducibleBlocksByEdgeCount) {
  for (int m = 4; m <= 10; ++m) {
    std::map<int, Count> strata;
    for (const auto& c : enumerate_by_reducible(m, 2, 1)) {
      const auto l = lattice_of(c);
      if (is_block(l)) strata[static_cast<int>(l.digraph().edge_count()) - m] += 1;
    }
    for (int k = 0; k <= m - 4; ++k) EXPECT_EQ(strata[k], partition_count(m - 2, k + 2)) << m << "," << k;
  }
}

TEST(Census, ClassSizes) {
  EXPECT_EQ(class_sizes(census(5)), (std::map<int, int>{{0, 1}, {2, 4}}));
  EXPECT_EQ(class_sizes(census(6)), (std::map<int, int>{{0, 1}, {2, 11}, {3, 2}, {4, 1}}));
  EXPECT_EQ(class_sizes(census(7)), (std::map<int, int>{{0, 1}, {2, 24}, {3, 15}, {4, 11}, {5, 2}}));
}

TEST(Census, FbbFibers) {
  const auto c = census(7);
  EXPECT_TRUE(c.complete);
  EXPECT_EQ(c.fbb_fibers.at(FbbClass::F1).size(), 7u);
  EXPECT_EQ(c.fbb_fibers.at(FbbClass::F2).size(), 7u);
  EXPECT_EQ(c.fbb_fibers.at(FbbClass::F3).size(), 1u);
  EXPECT_EQ(c.fbb_fibers.at(FbbClass::F4).size(), 0u);
  const auto big = census(9);
  EXPECT_FALSE(big.complete);
  EXPECT_EQ(big.classes.at(3).size(), 215u);
}

TEST(Verify, AllCellsAgree) {
  const auto reports = verify(7, default_formulas(), 1);
  ASSERT_EQ(reports.size(), 7u);
  for (const auto& r : reports) {
    EXPECT_TRUE(r.all_agree()) << r.n;
    for (const auto& cell : r.cells) EXPECT_FALSE(cell.witness) << cell.family;
  }
}

TEST(Verify, ReportsPerturbedFormula) {
  auto formulas = default_formulas();
  formulas.b3 = [](int m, int k) { return b3_blocks(m, k) + ((m == 8 && k == 1) ? 1 : 0); };
  const auto reports = verify(8, formulas, 1);
  int bad = 0;
  for (const auto& r : reports)
    for (const auto& cell : r.cells)
      if (!cell.agree) {
        ++bad;
        EXPECT_EQ(cell.family, "B3");
        EXPECT_EQ(cell.n, 8);
        EXPECT_EQ(cell.k, 1);
        EXPECT_EQ(cell.expected, cell.observed + 1);
      }
  EXPECT_EQ(bad, 1);
}

TEST(Verify, CensusMismatchCarriesWitness) {
  // Feed a class-total formula that is off; the count cell disagrees but the
  // set cells still agree.
  auto formulas = default_formulas();
  formulas.three_reducible = [](int n) { return three_reducible_lattices(n) + (n == 7 ? 1 : 0); };
  const auto reports = verify(7, formulas, 1);
  EXPECT_FALSE(reports.back().all_agree());
  for (const auto& cell : reports.back().cells)
    if (cell.family.rfind("census_", 0) == 0) EXPECT_TRUE(cell.agree);
}
