#include <gtest/gtest.h>

#include "pjp/error.hpp"
#include "pjp/rootsys.hpp"
#include "pjp/weylgroup.hpp"

using namespace pjp;

struct TypeData {
  const char* name;
  int positive;
  int weyl_order;
  int orbits;
};

class RootCounts : public ::testing::TestWithParam<TypeData> {};

TEST_P(RootCounts, MatchesClassification) {
  auto d = GetParam();
  auto rs = build_root_system(d.name);
  EXPECT_EQ(rs->num_positive_roots(), d.positive);
  EXPECT_EQ(rs->weyl().size(), d.weyl_order);
  EXPECT_EQ(rs->num_orbits(), d.orbits);
  EXPECT_EQ(rs->weyl().length(rs->weyl().longest()), d.positive);
}

INSTANTIATE_TEST_SUITE_P(All, RootCounts,
                         ::testing::Values(TypeData{"A1", 1, 2, 1}, TypeData{"A2", 3, 6, 1}, TypeData{"A3", 6, 24, 1},
                                           TypeData{"A4", 10, 120, 1}, TypeData{"B2", 4, 8, 2},
                                           TypeData{"B3", 9, 48, 2}, TypeData{"C2", 4, 8, 2},
                                           TypeData{"C3", 9, 48, 2}, TypeData{"D4", 12, 192, 1},
                                           TypeData{"G2", 6, 12, 2}));

TEST(RootSystem, UnsupportedType) {
  try {
    build_root_system("Z9");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedType);
  }
  EXPECT_THROW(build_root_system("E8"), Error);
}

TEST(RootSystem, CachedInstances) {
  EXPECT_EQ(build_root_system("A2").get(), build_root_system("A2").get());
  EXPECT_NE(build_root_system("A2").get(), build_root_system("A2", Rational(2)).get());
}

TEST(RootSystem, PairingWithSimpleCorootsIsCartan) {
  for (const char* n : {"A3", "B3", "C3", "G2", "D4"}) {
    auto rs = build_root_system(n);
    for (int i = 0; i < rs->rank(); ++i)
      for (int j = 0; j < rs->rank(); ++j)
        EXPECT_EQ(rs->pairing(rs->simple_root(j), rs->simple_root_index(i)), rs->cartan()[i][j]) << n;
  }
}

TEST(RootSystem, RootPairsWithOwnCorootToTwo) {
  for (const char* n : {"A4", "B3", "C3", "G2", "D4"}) {
    auto rs = build_root_system(n);
    for (int r = 0; r < rs->num_positive_roots(); ++r)
      EXPECT_EQ(rs->pairing(rs->positive_roots()[r].weight, r), 2) << n << " root " << r;
  }
}

TEST(RootSystem, PairingAgreesWithInnerProduct) {
  for (const char* n : {"B2", "G2", "C3"}) {
    auto rs = build_root_system(n, Rational(3));
    Weight lam = Weight::from_coords(std::vector<int>(rs->rank(), 0));
    for (int i = 0; i < rs->rank(); ++i) lam += Weight::unit(rs->rank(), i) * (i + 2);
    for (int r = 0; r < rs->num_positive_roots(); ++r) {
      const auto& a = rs->positive_roots()[r].weight;
      EXPECT_EQ(rs->pairing(lam, r), 2 * rs->inner(lam, a) / rs->inner(a, a));
    }
  }
}

TEST(RootSystem, RhoPairsToOneWithSimpleCoroots) {
  for (const char* n : {"A3", "B3", "G2"}) {
    auto rs = build_root_system(n);
    auto r = rho(*rs, Multiplicity::uniform(*rs, Rational(1)));
    for (int i = 0; i < rs->rank(); ++i) EXPECT_EQ(r[i], 1);
  }
}

TEST(RootSystem, HighestRootG2) {
  auto rs = build_root_system("G2");
  const auto& top = rs->positive_roots().back();
  EXPECT_EQ(top.height, 5);
}

TEST(RootSystem, HalfWeights) {
  auto w = Weight::from_num_den({1, -1}, 2);
  EXPECT_FALSE(w.is_integral());
  EXPECT_EQ(w.coord(0), ratio(1, 2));
  EXPECT_EQ((w * 2).twice(0), 2);
  EXPECT_EQ(w.den(), 2);
}

TEST(Multiplicity, RejectsNonConstantOnOrbit) {
  auto rs = build_root_system("A2");
  EXPECT_THROW(Multiplicity::from_per_root(*rs, {Rational(1), Rational(2), Rational(1)}), Error);
  auto b2 = build_root_system("B2");
  RVec per_root;
  for (const auto& r : b2->positive_roots()) per_root.push_back(r.orbit == 0 ? Rational(1) : Rational(2));
  EXPECT_NO_THROW(Multiplicity::from_per_root(*b2, per_root));
}

TEST(Dominance, Basic) {
  auto rs = build_root_system("A2");
  Weight zero(2);
  EXPECT_TRUE(rs->dominance_leq(zero, rs->simple_root(0)));
  EXPECT_FALSE(rs->dominance_leq(rs->simple_root(0), zero));
  EXPECT_FALSE(rs->dominance_leq(zero, Weight::unit(2, 0)));
}
