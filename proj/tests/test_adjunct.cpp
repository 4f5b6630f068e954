#include <gtest/gtest.h>

#include "latcount/adjunct.hpp"
#include "latcount/canonical.hpp"
#include "latcount/enumeration.hpp"
#include "latcount/reduction.hpp"
#include "oracles.hpp"

using namespace latcount;

namespace {

Certificate cert(const Lattice& l) { return canonical_certificate(l); }
Certificate cert(const CoverDigraph& p) { return canonical_certificate(p); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected latcount::Error";
  return ErrorKind::NotALattice;
}

}  // namespace

TEST(AdjunctSum, ThreeChainPlusPointIsDiamond) {
  auto l = adjunct_sum(as_lattice(chain(3)), as_lattice(chain(1)), 0, 2);
  EXPECT_EQ(cert(l), cert(shapes::m2()));
}

TEST(AdjunctSum, AddsTwoCovers) {
  auto l1 = as_lattice(shapes::f3());
  auto l2 = as_lattice(shapes::m2());
  auto l = adjunct_sum(l1, l2, 0, 6);
  EXPECT_EQ(l.digraph().edge_count(), l1.digraph().edge_count() + l2.digraph().edge_count() + 2);
  EXPECT_TRUE(l.digraph().has_cover(0, 7));
  EXPECT_TRUE(l.digraph().has_cover(10, 6));
}

TEST(AdjunctSum, RejectsCoverPair) {
  EXPECT_EQ(kind_of([] { adjunct_sum(as_lattice(chain(3)), as_lattice(chain(1)), 0, 1); }), ErrorKind::PairIsCover);
}

TEST(AdjunctSum, RejectsIncomparablePair) {
  auto m2 = as_lattice(shapes::m2());
  EXPECT_EQ(kind_of([&] { adjunct_sum(m2, as_lattice(chain(1)), 1, 2); }), ErrorKind::PairNotComparable);
  EXPECT_EQ(kind_of([&] { adjunct_sum(m2, as_lattice(chain(1)), 3, 0); }), ErrorKind::PairNotComparable);
}

TEST(DirectSum, Chains) { EXPECT_EQ(direct_sum(chain(2), chain(2)), chain(4)); }

TEST(DirectSum, DiamondOnPoint) {
  auto l = direct_sum(as_lattice(shapes::m2()), as_lattice(chain(1)));
  EXPECT_EQ(l.size(), 5);
  EXPECT_EQ(classify_elements(l).red, (std::vector<Element>{0, 3}));
  EXPECT_EQ(oracle::reducible_by_definition(l.digraph()), (std::vector<int>{0, 3}));
}

TEST(DirectSum, EdgeLaw) {
  for (auto [m, n] : {std::pair{shapes::f1(), shapes::m2()}, std::pair{chain(3), shapes::f4()}}) {
    auto s = direct_sum(m, n);
    EXPECT_EQ(s.edge_count(), m.edge_count() + n.edge_count() + 1);
  }
}

TEST(Realize, F1FromSpine) {
  // spine 0 < a < a1 < 1; a2 hung on (a, 1); b hung on (0, 1).
  auto l = realize({4, {{1, 3, 1}, {0, 3, 1}}});
  EXPECT_EQ(cert(l), cert(shapes::f1()));
}

TEST(Realize, SpineOnly) { EXPECT_EQ(realize({5, {}}).digraph(), chain(5)); }

TEST(Realize, RepeatedPairGivesNullity) {
  for (int r = 1; r <= 5; ++r) {
    AdjunctRep rep{3, std::vector<Attachment>(r, Attachment{0, 2, 1})};
    auto l = realize(rep);
    EXPECT_EQ(oracle::nullity(l.digraph()), r);
    EXPECT_EQ(l.size(), 3 + r);
  }
}

TEST(Realize, ReportsFailingAttachment) {
  try {
    realize({3, {{0, 2, 1}, {0, 1, 1}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PairIsCover);
    EXPECT_NE(std::string(e.what()).find("attachment 1"), std::string::npos);
  }
  EXPECT_EQ(kind_of([] { realize({3, {{0, 9, 1}}}); }), ErrorKind::LabelOutOfRange);
}

TEST(PairMultiplicity, Examples) {
  EXPECT_EQ(pair_multiplicity(as_lattice(shapes::m2()), 0, 3), 1);
  auto c = as_lattice(chain(5));
  EXPECT_EQ(pair_multiplicity(c, 0, 4), 0);
  EXPECT_EQ(pair_multiplicity(c, 1, 3), 0);
  auto f3 = as_lattice(shapes::f3());  // 0, b1, b2, a, a1, a2, 1
  EXPECT_EQ(pair_multiplicity(f3, 0, 3), 1);
  EXPECT_EQ(pair_multiplicity(f3, 3, 6), 1);
  EXPECT_EQ(pair_multiplicity(f3, 0, 6), 0);
}

TEST(PairMultiplicity, RejectsIncomparable) {
  EXPECT_EQ(kind_of([] { pair_multiplicity(as_lattice(shapes::m2()), 1, 2); }), ErrorKind::NotComparable);
}

TEST(Decompose, Chain) {
  auto rep = decompose(as_lattice(chain(4)));
  EXPECT_EQ(rep.spine, 4);
  EXPECT_TRUE(rep.attachments.empty());
}

TEST(Decompose, Diamond) {
  auto rep = decompose(as_lattice(shapes::m2()));
  EXPECT_EQ(rep, (AdjunctRep{3, {{0, 2, 1}}}));
}

TEST(Decompose, F4HasAllThreePairs) {
  auto rep = decompose(as_lattice(shapes::f4()));
  // Spine 0 < b1 < a < a1 < 1, heights 0..4, a at height 2.
  EXPECT_EQ(rep.spine, 5);
  EXPECT_EQ(rep.attachments, (std::vector<Attachment>{{0, 2, 1}, {0, 4, 1}, {2, 4, 1}}));
}

TEST(Decompose, RefusesCube) {
  auto cube = as_lattice(build_poset(8, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 6}, {3, 5}, {3, 6}, {4, 7}, {5, 7}, {6, 7}}));
  EXPECT_EQ(kind_of([&] { decompose(cube); }), ErrorKind::NotDismantlable);
}

TEST(Decompose, RefusesIncomparableReducibles) {
  // Two diamonds side by side under a common top: the middle reducibles are
  // incomparable.
  auto l = realize({3, {{0, 2, 1}}});
  auto wide = adjunct_sum(as_lattice(chain(4)), l, 0, 3);
  auto twin = adjunct_sum(wide, as_lattice(shapes::m2()), 0, 3);
  EXPECT_EQ(kind_of([&] { decompose(twin); }), ErrorKind::IncomparableReducibles);
}

TEST(Decompose, RoundTripAndCountLaws) {
  for (int n = 4; n <= 9; ++n)
    for (int r : {2, 3})
      for (const auto& c : enumerate_by_reducible(n, r, 1)) {
        auto l = lattice_of(c);
        const auto d = decompose_with_elements(l);
        const auto& rep = d.rep;
        EXPECT_EQ(cert(realize(rep)), c);
        const int chains = rep.chain_count();
        EXPECT_EQ(static_cast<int>(l.digraph().edge_count()), n + chains - 2);
        EXPECT_EQ(oracle::nullity(l.digraph()), chains - 1);
        int total = 0;
        for (auto [pair, count] : pair_counts(rep)) {
          const int r_ab = pair_multiplicity(l, d.spine[pair.first], d.spine[pair.second]);
          EXPECT_EQ(r_ab, count);
          total += r_ab;
        }
        EXPECT_EQ(total, chains - 1);
      }
}
