#include <gtest/gtest.h>

#include <random>

#include "pjp/cherednik.hpp"
#include "pjp/error.hpp"
#include "pjp/parabolic.hpp"

using namespace pjp;

namespace {

Weight wt(std::vector<int> c) { return Weight::from_coords(c); }

LaurentPoly mono(const RootSystemPtr& rs, std::vector<int> c, Rational q = 1) {
  return LaurentPoly::monomial(rs, wt(c), q);
}

std::vector<Weight> box(int rank, int b) {
  std::vector<Weight> out;
  std::vector<int> c(rank, -b);
  for (;;) {
    out.push_back(wt(c));
    int i = 0;
    while (i < rank && ++c[i] > b) c[i++] = -b;
    if (i == rank) break;
  }
  return out;
}

const Rational kSet[] = {ratio(1, 2), Rational(1), Rational(2), ratio(5, 3)};

}  // namespace

TEST(DividedDifference, A1) {
  auto rs = build_root_system("A1");
  EXPECT_TRUE(divided_difference(0, LaurentPoly::constant(rs, 3)).is_zero());
  EXPECT_EQ(divided_difference(0, mono(rs, {1})), mono(rs, {1}));
  EXPECT_EQ(divided_difference(0, mono(rs, {-1})), mono(rs, {1}, -1));
  EXPECT_EQ(divided_difference(0, mono(rs, {3})), mono(rs, {3}) + mono(rs, {1}) + mono(rs, {-1}));
}

TEST(DividedDifference, TimesDenominatorIsOneMinusReflection) {
  auto rs = build_root_system("B2");
  const auto& W = rs->weyl();
  for (int r = 0; r < rs->num_positive_roots(); ++r) {
    const Weight& a = rs->positive_roots()[r].weight;
    auto den = LaurentPoly::constant(rs, 1) - LaurentPoly::monomial(rs, -a);
    // s_α as a Weyl element
    int sa = -1;
    for (int w = 0; w < W.size(); ++w)
      if (W.length(w) % 2 == 1 && W.act(w, a) == -a && W.inversion_set(w).size() >= 1) {
        bool fixes = true;
        for (const auto& mu : box(2, 2))
          if (W.act(w, mu) != mu - a * (rs->twice_pairing(mu, r) / 2)) fixes = false;
        if (fixes) sa = w;
      }
    ASSERT_GE(sa, 0);
    for (const auto& mu : box(2, 3)) {
      auto f = mono(rs, {mu.twice(0) / 2, mu.twice(1) / 2});
      EXPECT_EQ(divided_difference(r, f) * den, f - weyl_act(sa, f));
    }
  }
}

TEST(Cherednik, A1Examples) {
  auto rs = build_root_system("A1");
  RVec xi{Rational(1)};  // α(ξ) = 2
  for (const auto& kv : kSet) {
    auto k = Multiplicity::uniform(*rs, kv);
    EXPECT_EQ(cherednik_apply(xi, k, LaurentPoly::constant(rs, 1)), LaurentPoly::constant(rs, -kv));
    EXPECT_EQ(cherednik_apply(xi, k, mono(rs, {1})), mono(rs, {1}, 1 + kv));
    EXPECT_EQ(cherednik_apply(xi, k, mono(rs, {-1})), mono(rs, {-1}, -(1 + kv)) + mono(rs, {1}, -2 * kv));
  }
}

TEST(Cherednik, CommuteAndSymmetric) {
  auto rs = build_root_system("A2");
  RVec x1{Rational(1), Rational(0)}, x2{Rational(0), Rational(1)};
  std::mt19937_64 gen(1);
  std::uniform_int_distribution<int> c(-3, 3);
  for (const auto& kv : kSet) {
    auto k = Multiplicity::uniform(*rs, kv);
    for (int t = 0; t < 5; ++t) {
      LaurentPoly f(rs, {{wt({c(gen), c(gen)}), Rational(c(gen))}, {wt({c(gen), c(gen)}), Rational(1)}});
      EXPECT_EQ(cherednik_apply(x1, k, cherednik_apply(x2, k, f)), cherednik_apply(x2, k, cherednik_apply(x1, k, f)));
    }
  }
  for (int kv : {1, 2}) {
    auto k = Multiplicity::uniform(*rs, kv);
    InnerProduct ip(rs, k);
    auto pts = box(2, 2);
    for (const auto& a : pts)
      for (const auto& b : pts) {
        auto f = LaurentPoly::monomial(rs, a), g = LaurentPoly::monomial(rs, b);
        EXPECT_EQ(ip(cherednik_apply(x1, k, f), g), ip(f, cherednik_apply(x1, k, g)));
      }
  }
}

TEST(HPolyTest, EvalAndAction) {
  auto rs = build_root_system("A2");
  auto q = HPoly::linear({Rational(1), Rational(0)}) * HPoly::linear({Rational(0), Rational(1)});
  EXPECT_EQ(q.degree(), 2);
  EXPECT_EQ(q.at(*rs, {Rational(2), Rational(3)}), 6);
  const auto& W = rs->weyl();
  RVec lam{Rational(2), ratio(-1, 3)};
  for (int w = 0; w < W.size(); ++w) EXPECT_EQ(q.act(*rs, w).at(*rs, W.act(w, lam)), q.at(*rs, lam));
  // ξ1ξ2+ξ1ξ3+ξ2ξ3 with ξ_i the projected unit vectors is W-invariant
  auto a2 = build_root_system("A2", Rational(2));
  HPoly x1 = HPoly::linear({ratio(2, 3), ratio(1, 3)}), x2 = HPoly::linear({ratio(-1, 3), ratio(1, 3)}),
        x3 = HPoly::linear({ratio(-1, 3), ratio(-2, 3)});
  EXPECT_TRUE((x1 * x2 + x1 * x3 + x2 * x3).is_invariant(*a2, Subset::full(2)));
  EXPECT_TRUE(x1.is_invariant(*a2, Subset::of({1})));
  EXPECT_FALSE(x1.is_invariant(*a2, Subset::of({0})));
}

TEST(PolyInCherednik, Basics) {
  auto rs = build_root_system("A1");
  auto k = Multiplicity::uniform(*rs, 2);
  auto q = HPoly::linear({Rational(1)});
  auto f = mono(rs, {2}) + mono(rs, {-1});
  EXPECT_EQ(poly_in_cherednik(q, k, f), cherednik_apply({Rational(1)}, k, f));
  EXPECT_EQ(poly_in_cherednik(q * q, k, LaurentPoly::constant(rs, 1)), LaurentPoly::constant(rs, 4));
}

TEST(Spectral, Examples) {
  auto a1 = build_root_system("A1");
  for (const auto& kv : kSet) {
    auto k1 = Multiplicity::uniform(*a1, kv);
    EXPECT_EQ(spectral(*a1, Weight(1), k1).value, rho(*a1, k1) == RVec{kv} ? RVec{-kv} : RVec{});
    EXPECT_EQ(spectral(*a1, wt({1}), k1).value, RVec{1 + kv});
  }
  auto a2 = build_root_system("A2");
  auto k = Multiplicity::uniform(*a2, ratio(5, 3));
  EXPECT_EQ(spectral(*a2, Subset::of({1}), wt({-1, 0}), k).value, (RVec{-1 - ratio(5, 3), -ratio(5, 3)}));
}

TEST(Spectral, ThreeFormulasAgree) {
  for (const char* n : {"A2", "B2", "G2"}) {
    auto rs = build_root_system(n);
    RVec kv(rs->num_orbits(), ratio(2, 7));
    if (rs->num_orbits() > 1) kv[1] = ratio(5, 3);
    Multiplicity k(*rs, kv);
    for (unsigned bits = 0; bits < 4; ++bits) {
      Subset I;
      if (bits & 1) I.insert(0);
      if (bits & 2) I.insert(1);
      for (const auto& lam : box(2, 4))
        if (is_dominant(*rs, lam, I)) EXPECT_NO_THROW(spectral(*rs, I, lam, k)) << n << lam.to_string();
    }
  }
}

TEST(EPoly, A1ClosedForms) {
  auto rs = build_root_system("A1");
  for (const auto& kv : kSet) {
    auto k = Multiplicity::uniform(*rs, kv);
    EXPECT_EQ(e_poly(rs, Weight(1), k), LaurentPoly::constant(rs, 1));
    EXPECT_EQ(e_poly(rs, wt({-1}), k), mono(rs, {-1}) + mono(rs, {1}, kv / (1 + kv)));
    EXPECT_EQ(e_poly(rs, wt({2}), k), mono(rs, {2}) + LaurentPoly::constant(rs, kv / (1 + kv)));
  }
  EXPECT_EQ(e_poly_gs(rs, wt({-1}), Multiplicity::uniform(*rs, 1)), mono(rs, {-1}) + mono(rs, {1}, ratio(1, 2)));
  EXPECT_EQ(e_poly_gs(rs, wt({2}), Multiplicity::uniform(*rs, 2)), mono(rs, {2}) + LaurentPoly::constant(rs, ratio(2, 3)));
}

TEST(EPoly, OracleEquivalence) {
  for (const char* n : {"A1", "A2", "B2"}) {
    auto rs = build_root_system(n);
    int b = rs->rank() == 1 ? 6 : 3;
    for (int kv : {1, 2}) {
      auto k = Multiplicity::uniform(*rs, kv);
      for (const auto& lam : box(rs->rank(), b)) EXPECT_EQ(e_poly(rs, lam, k), e_poly_gs(rs, lam, k)) << n << lam.to_string();
    }
  }
}

TEST(EPoly, OrthogonalAndStabilizerInvariant) {
  auto rs = build_root_system("A2");
  auto k = Multiplicity::uniform(*rs, 1);
  InnerProduct ip(rs, k);
  auto pts = box(2, 2);
  std::vector<LaurentPoly> E;
  for (const auto& lam : pts) E.push_back(e_poly(rs, lam, k));
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = 0; j < i; ++j) EXPECT_EQ(ip(E[i], E[j]), 0);
  for (const auto& kv : kSet) {
    auto kk = Multiplicity::uniform(*rs, kv);
    for (Subset I : {Subset::of({0}), Subset::of({1}), Subset::full(2)})
      for (const auto& lam : box(2, 3)) {
        if (!is_dominant(*rs, lam, I)) continue;
        auto e = e_poly(rs, lam, kk);
        for (int w : canonical_elements(*rs, I, lam).stab_I) EXPECT_EQ(weyl_act(w, e), e);
      }
  }
}
