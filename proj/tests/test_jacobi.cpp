#include <gtest/gtest.h>

#include <set>

#include "pjp/error.hpp"
#include "pjp/jacobi.hpp"
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

const Subset kA2Subsets[] = {Subset(), Subset::of({1}), Subset::full(2)};

}  // namespace

TEST(Jacobi, Examples) {
  auto a1 = build_root_system("A1");
  auto S = Subset::full(1);
  for (Rational kv : {ratio(1, 2), Rational(1), Rational(2)}) {
    auto k = Multiplicity::uniform(*a1, kv);
    EXPECT_EQ(jacobi_sym(a1, S, Weight(1), k).poly, LaurentPoly::constant(a1, 1));
    EXPECT_EQ(jacobi_sym(a1, S, wt({2}), k).poly,
              mono(a1, {2}) + mono(a1, {-2}) + LaurentPoly::constant(a1, 2 * kv / (1 + kv)));
  }
  auto k1 = Multiplicity::uniform(*a1, 1);
  EXPECT_EQ(jacobi_gs(a1, S, wt({2}), k1).poly, mono(a1, {2}) + mono(a1, {-2}) + LaurentPoly::constant(a1, 1));
  auto a2 = build_root_system("A2");
  auto k = Multiplicity::uniform(*a2, ratio(5, 3));
  EXPECT_EQ(jacobi_sym(a2, Subset::of({1}), wt({-1, 0}), k).poly, e_poly(a2, wt({-1, 0}), k));
  EXPECT_THROW(jacobi_sym(a2, Subset::of({1}), wt({0, -1}), k), Error);
}

TEST(Jacobi, ConstructionEquivalenceSmallBox) {
  auto rs = build_root_system("A2");
  for (int kv : {1, 2}) {
    auto k = Multiplicity::uniform(*rs, kv);
    for (Subset I : kA2Subsets)
      for (const auto& lam : box(2, 3)) {
        if (!is_dominant(*rs, lam, I)) continue;
        auto a = jacobi_sym(rs, I, lam, k), b = jacobi_gs(rs, I, lam, k);
        EXPECT_EQ(a.poly, b.poly) << lam.to_string();
        EXPECT_EQ(a.expansion, b.expansion);
      }
  }
}

TEST(Jacobi, ExtremeCases) {
  auto rs = build_root_system("A2");
  auto k = Multiplicity::uniform(*rs, 2);
  for (const auto& lam : box(2, 2)) {
    EXPECT_EQ(jacobi_gs(rs, Subset(), lam, k).poly, e_poly_gs(rs, lam, k));
    if (is_dominant(*rs, lam, Subset::full(2))) {
      auto p = jacobi_sym(rs, Subset::full(2), lam, k).poly;
      EXPECT_TRUE(is_invariant(p, Subset::full(2)));
    }
  }
}

TEST(Jacobi, GramDiagonal) {
  auto a1 = build_root_system("A1");
  auto k1 = Multiplicity::uniform(*a1, 1);
  EXPECT_EQ(gram_matrix(a1, Subset::full(1), k1, {Weight(1)})[0][0], 2);
  auto rs = build_root_system("A2");
  auto I = Subset::of({1});
  auto k = Multiplicity::uniform(*rs, 1);
  auto G = gram_matrix(rs, I, k, {wt({-1, 0}), wt({-1, 1})});
  EXPECT_EQ(G[0][1], 0);
  EXPECT_GT(G[0][0], 0);
  EXPECT_GT(G[1][1], 0);
  std::vector<Weight> labels;
  for (const auto& lam : box(2, 2))
    if (is_dominant(*rs, lam, I)) labels.push_back(lam);
  G = gram_matrix(rs, I, k, labels);
  for (size_t i = 0; i < labels.size(); ++i)
    for (size_t j = 0; j < labels.size(); ++j)
      if (i == j) EXPECT_GT(G[i][i], 0);
      else EXPECT_EQ(G[i][j], 0);
}

TEST(Jacobi, SpectralDataAndSeparation) {
  auto rs = build_root_system("A2");
  for (Subset I : {Subset(), Subset::of({0}), Subset::of({1}), Subset::full(2)}) {
    auto gens = a2_generators(I);
    for (const auto& q : gens) EXPECT_TRUE(q.is_invariant(*rs, I));
    for (Rational kv : {ratio(1, 2), Rational(1), Rational(2)}) {
      auto k = Multiplicity::uniform(*rs, kv);
      for (const auto& lam : box(2, 2))
        if (is_dominant(*rs, lam, I)) EXPECT_NO_THROW(spectral_data(jacobi_sym(rs, I, lam, k), gens));
    }
  }
  auto k = Multiplicity::uniform(*rs, 1);
  auto p = jacobi_sym(rs, Subset::of({1}), wt({-1, 0}), k);
  EXPECT_EQ(spectral_data(p, {a2_xi(1)})[0], a2_xi(1).at(*rs, {Rational(-2), Rational(-1)}));
}
