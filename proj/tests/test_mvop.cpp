#include <gtest/gtest.h>

#include <random>

#include "pjp/error.hpp"
#include "pjp/mvop.hpp"
#include "pjp/parabolic.hpp"

using namespace pjp;

namespace {

LaurentPoly e(const RootSystemPtr& rs, std::vector<int> c) { return LaurentPoly::monomial(rs, Weight::from_coords(c)); }

std::vector<Subset> subsets(int rank) {
  std::vector<Subset> out;
  for (unsigned b = 0; b < (1u << rank); ++b) {
    Subset s;
    for (int i = 0; i < rank; ++i)
      if (b >> i & 1u) s.insert(i);
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST(Chi, FundamentalInvariants) {
  auto a1 = build_root_system("A1");
  auto chi1 = fundamental_invariants(a1);
  ASSERT_EQ(chi1.size(), 1u);
  EXPECT_EQ(chi1[0], e(a1, {1}) + e(a1, {-1}));
  auto a2 = build_root_system("A2");
  auto chi2 = fundamental_invariants(a2);
  EXPECT_EQ(chi2[0], e(a2, {1, 0}) + e(a2, {-1, 1}) + e(a2, {0, -1}));
  for (const auto& c : chi2) EXPECT_TRUE(c.constant_term() == 0);
}

TEST(Chi, Rewrite) {
  auto a2 = build_root_system("A2");
  auto chi = fundamental_invariants(a2);
  EXPECT_EQ(to_chi(chi[0]), ChiPolynomial::variable(2, 0));
  EXPECT_EQ(to_chi(LaurentPoly::constant(a2, 1)), ChiPolynomial::constant(2, 1));
  auto m11 = orbit_sum(a2, Subset::full(2), Weight::from_coords({1, 1}));
  auto expect = ChiPolynomial::variable(2, 0) * ChiPolynomial::variable(2, 1) - ChiPolynomial::constant(2, 3);
  EXPECT_EQ(to_chi(m11), expect);
  EXPECT_EQ(expect.to_string(), "x1*x2 - 3");
  try {
    to_chi(e(a2, {1, 0}));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::NotWInvariant);
  }
  // substitution exactness on a box of orbit sums and products
  for (const char* name : {"B2", "G2", "A3"}) {
    auto rs = build_root_system(name);
    Subset S = Subset::full(rs->rank());
    std::vector<int> c(rs->rank(), 0);
    c[0] = 2;
    if (rs->rank() > 1) c[1] = 1;
    auto f = orbit_sum(rs, S, Weight::from_coords(c));
    f = f * f + LaurentPoly::constant(rs, 5);
    EXPECT_EQ(to_chi(f).substitute(rs), f) << name;
  }
}

TEST(Steinberg, PairCountsAndDet) {
  auto a2 = build_root_system("A2");
  for (int r = 0; r < 3; ++r) EXPECT_EQ(pair_count(*a2, Subset::of({1}), r), 1);
  for (const char* name : {"A1", "A2", "B2"}) {
    auto rs = build_root_system(name);
    for (Subset I : subsets(rs->rank())) {
      auto s = steinberg_matrix(rs, I);
      EXPECT_TRUE(s.det == s.product * Rational(s.sign));
      EXPECT_EQ(s.size(), rs->weyl().min_coset_reps(I).size());
    }
  }
  auto full = steinberg_matrix(a2, Subset::full(2));
  EXPECT_EQ(full.size(), 1u);
  EXPECT_EQ(full.det, LaurentPoly::constant(a2, 1));
  auto s = steinberg_matrix(a2, Subset::of({1}));
  LaurentPoly prod = LaurentPoly::constant(a2, 1);
  for (const auto& root : a2->positive_roots()) {
    Weight h = root.weight.half();
    prod = prod * (LaurentPoly::monomial(a2, h) - LaurentPoly::monomial(a2, -h));
  }
  EXPECT_TRUE(s.det == prod || s.det == -prod);
}

TEST(Steinberg, Coordinates) {
  auto a2 = build_root_system("A2");
  Subset I = Subset::of({1});
  auto one = gamma(LaurentPoly::constant(a2, 1), I);
  auto c = steinberg_coords(one);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0], LaurentPoly::constant(a2, 1));
  EXPECT_TRUE(c[1].is_zero() && c[2].is_zero());
  auto chi1 = fundamental_invariants(a2)[0];
  auto c2 = steinberg_coords(gamma(chi1, I));
  EXPECT_EQ(c2[0], chi1);

  // random combinations are recovered exactly
  std::mt19937_64 rng(7);
  auto gens = steinberg_generators(a2, I);
  std::uniform_int_distribution<int> coef(-3, 3), co(0, 2);
  for (int t = 0; t < 10; ++t) {
    std::vector<LaurentPoly> f;
    VectorPoly v = zero_vector(a2, I);
    for (size_t j = 0; j < gens.size(); ++j) {
      auto g = orbit_sum(a2, Subset::full(2), Weight::from_coords({co(rng), co(rng)})) * Rational(coef(rng));
      f.push_back(g);
      v = v + gamma(gens[j].phi * g, I);
    }
    EXPECT_EQ(steinberg_coords(v), f);
  }
  VectorPoly bad = one;
  bad.components[2] = e(a2, {1, 0});
  EXPECT_THROW(steinberg_coords(bad), Error);
}

TEST(Mvop, ScriptPAndWeight) {
  auto a2 = build_root_system("A2");
  Subset I = Subset::of({1});
  auto k = Multiplicity::uniform(*a2, 1);
  auto p0 = script_p(a2, I, Weight(2), k);
  EXPECT_EQ(p0[0], ChiPolynomial::constant(2, 1));
  EXPECT_TRUE(p0[1].is_zero() && p0[2].is_zero());
  // p_I(−ϖ1) = m_I(−ϖ1) + ½ m_I(ϖ2) and m_I(ϖ2) = χ2 φ_e − φ_{s2s1}
  auto p = script_p(a2, I, Weight::from_coords({-1, 0}), k);
  EXPECT_EQ(p[0], ChiPolynomial::variable(2, 1) * ratio(1, 2));
  EXPECT_TRUE(p[1].is_zero());
  EXPECT_EQ(p[2], ChiPolynomial::constant(2, ratio(1, 2)));
  EXPECT_EQ(pull_back(p, a2, I), big_p(a2, I, Weight::from_coords({-1, 0}), k));

  auto w = weight_matrix(a2, I);
  EXPECT_EQ(w[0][0], ChiPolynomial::constant(2, 3));
  auto s = steinberg_matrix(a2, I);
  for (size_t a = 0; a < 3; ++a)
    for (size_t b = 0; b < 3; ++b) {
      LaurentPoly x(a2);
      for (size_t u = 0; u < 3; ++u) x += star(s.entries[u][a]) * s.entries[u][b];
      EXPECT_EQ(w[a][b].substitute(a2), x);
    }
}

TEST(Mvop, Orthogonality) {
  auto a2 = build_root_system("A2");
  Subset I = Subset::of({1});
  for (int kk : {1, 2}) {
    auto k = Multiplicity::uniform(*a2, kk);
    InnerProduct ip(a2, k);
    std::vector<std::vector<ChiPolynomial>> cols;
    for (auto sc : {std::vector<int>{0, 0}, {1, 0}, {0, 1}}) {
      auto m = mvop_matrix(a2, I, Weight::from_coords(sc), k);
      for (size_t j = 0; j < m.size(); ++j) cols.push_back(column(m, j));
      if (sc == std::vector<int>{0, 0}) {
        for (size_t j = 0; j < 3; ++j) EXPECT_EQ(m[j][j].degree(), 0);
        EXPECT_EQ(m[0][0], ChiPolynomial::constant(2, 1));
      }
    }
    std::vector<VectorPoly> pulled;
    for (const auto& c : cols) pulled.push_back(pull_back(c, a2, I));
    for (size_t a = 0; a < pulled.size(); ++a)
      for (size_t b = 0; b < pulled.size(); ++b) {
        Rational x = vec_inner(pulled[a], pulled[b], ip);
        if (a == b)
          EXPECT_GT(x, 0);
        else
          EXPECT_EQ(x, 0) << a << "," << b;
      }
  }
}
