#include <gtest/gtest.h>

#include <set>

#include "pjp/error.hpp"
#include "pjp/parabolic.hpp"

using namespace pjp;

namespace {

Weight wt(std::vector<int> c) { return Weight::from_coords(c); }

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

TEST(Steinberg, A2Generators) {
  auto rs = build_root_system("A2");
  auto gens = steinberg_generators(rs, Subset::of({1}));
  ASSERT_EQ(gens.size(), 3u);
  EXPECT_EQ(rs->weyl().element(gens[1].v).to_string(), "s1");
  EXPECT_EQ(rs->weyl().element(gens[2].v).to_string(), "s2*s1");
  EXPECT_EQ(gens[0].phi, LaurentPoly::constant(rs, 1));
  EXPECT_EQ(gens[1].phi, LaurentPoly(rs, {{wt({-1, 1}), 1}, {wt({0, -1}), 1}}));
  EXPECT_EQ(gens[2].phi, LaurentPoly::monomial(rs, wt({-1, 0})));
  auto full = steinberg_generators(rs, Subset::full(2));
  ASSERT_EQ(full.size(), 1u);
  EXPECT_EQ(full[0].lambda_v, Weight(2));
}

TEST(Steinberg, CosetTable) {
  auto rs = build_root_system("A2");
  const auto& W = rs->weyl();
  auto rows = steinberg_table(*rs, {Subset(), Subset::of({1}), Subset::full(2)});
  struct Expected {
    const char* v;
    std::vector<int> lambda_v, label;
    bool a, b, c;
  };
  std::vector<Expected> expected = {
      {"e", {0, 0}, {0, 0}, true, true, true},          {"s1", {1, 0}, {-1, 1}, true, true, false},
      {"s2", {0, 1}, {1, -1}, true, false, false},      {"s2*s1", {0, 1}, {-1, 0}, true, true, false},
      {"s1*s2", {1, 0}, {0, -1}, true, false, false},   {"s1*s2*s1", {1, 1}, {-1, -1}, true, false, false},
  };
  for (const auto& e : expected) {
    int v = W.parse(e.v);
    const auto& r = rows[v];
    EXPECT_EQ(r.lambda_v, wt(e.lambda_v)) << e.v;
    EXPECT_EQ(r.label, wt(e.label)) << e.v;
    EXPECT_EQ(r.member, (std::vector<bool>{e.a, e.b, e.c})) << e.v;
  }
}

TEST(Steinberg, AlternativeGenerators) {
  auto rs = build_root_system("A2");
  auto alt = alt_steinberg(rs, Subset::of({1}));
  ASSERT_EQ(alt.size(), 3u);
  EXPECT_EQ(alt[0].mu_w, Weight(2));
  EXPECT_EQ(alt[1].mu_w, wt({-1, 0}));
  EXPECT_EQ(alt[0].generator, LaurentPoly::constant(rs, 1));
  EXPECT_EQ(alt[1].generator, LaurentPoly(rs, {{wt({1, -1}), 1}, {wt({0, 1}), 1}}));
  EXPECT_EQ(alt[2].generator, LaurentPoly::monomial(rs, wt({1, 0})));
}

TEST(Steinberg, AlternativeCoverPartitions) {
  for (const char* n : {"A2", "B2", "G2"}) {
    auto rs = build_root_system(n);
    for (unsigned bits = 0; bits < 4; ++bits) {
      Subset I;
      if (bits & 1) I.insert(0);
      if (bits & 2) I.insert(1);
      const auto& W = rs->weyl();
      int w0I = W.longest(I);
      for (const auto& lam : box(2, 5)) {
        if (!is_dominant(*rs, lam, I)) continue;
        int hits = 0;
        for (int w : W.min_coset_reps(I)) {
          Weight x = W.act(W.mul(w, w0I), lam) + steinberg_weight(*rs, w);
          if (x.twice(0) <= 0 && x.twice(1) <= 0) ++hits;
        }
        EXPECT_EQ(hits, 1) << n << " " << lam.to_string();
        EXPECT_GE(alt_cover_index(*rs, I, lam), 0);
      }
    }
  }
}

TEST(FI, Examples) {
  auto rs = build_root_system("A2");
  const auto& W = rs->weyl();
  Subset I = Subset::of({1});
  EXPECT_EQ(f_I(*rs, I, 0, wt({2, 3})), wt({2, 3}));
  EXPECT_EQ(f_I(*rs, I, W.parse("s1"), Weight(2)), wt({-1, 1}));
  auto [v, sigma] = f_I_inverse(*rs, I, wt({-2, 1}));
  EXPECT_EQ(W.element(v).to_string(), "s2*s1");
  EXPECT_EQ(sigma, wt({1, 0}));
  EXPECT_THROW(f_I_inverse(*rs, I, wt({0, -1})), Error);
}

TEST(FI, BijectionOnBox) {
  for (const char* n : {"A2", "B2", "G2"}) {
    auto rs = build_root_system(n);
    const auto& W = rs->weyl();
    for (Subset I : kA2Subsets) {
      std::set<Weight> images;
      for (const auto& mu : box(2, 6)) {
        if (!is_dominant(*rs, mu, I)) continue;
        auto [v, sigma] = f_I_inverse(*rs, I, mu);
        EXPECT_TRUE(W.is_min_coset_rep(v, I));
        EXPECT_TRUE(is_dominant(*rs, sigma, Subset::full(2)));
        EXPECT_EQ(f_I(*rs, I, v, sigma), mu);
      }
      for (int v : W.min_coset_reps(I))
        for (const auto& s : box(2, 3))
          if (is_dominant(*rs, s, Subset::full(2))) {
            Weight mu = f_I(*rs, I, v, s);
            EXPECT_TRUE(is_dominant(*rs, mu, I));
            EXPECT_TRUE(images.insert(mu).second);
          }
    }
  }
}

TEST(Order, Examples) {
  auto rs = build_root_system("A2");
  Subset I = Subset::of({1});
  EXPECT_TRUE(leq(*rs, I, Weight(2), wt({1, 1}), Order::Dominance));
  EXPECT_TRUE(leq(*rs, I, wt({1, 0}), wt({-1, 1}), Order::Empty));
  EXPECT_FALSE(leq(*rs, I, wt({-1, 0}), wt({-1, 1}), Order::I));
  EXPECT_FALSE(leq(*rs, I, wt({-1, 1}), wt({-1, 0}), Order::I));
  EXPECT_THROW(leq(*rs, I, wt({0, -1}), wt({-1, 1}), Order::I), Error);
}

TEST(Order, PartialOrderProperties) {
  auto rs = build_root_system("A2");
  const auto& W = rs->weyl();
  auto pts = box(2, 2);
  for (const auto& a : pts)
    for (const auto& b : pts) {
      bool ab = leq(*rs, Subset(), a, b, Order::Empty), ba = leq(*rs, Subset(), b, a, Order::Empty);
      if (ab && ba) EXPECT_EQ(a, b);
      if (!ab) continue;
      for (const auto& c : pts)
        if (leq(*rs, Subset(), b, c, Order::Empty)) EXPECT_TRUE(leq(*rs, Subset(), a, c, Order::Empty));
    }
  for (Subset I : kA2Subsets)
    for (const auto& lam : box(2, 3)) {
      if (!is_dominant(*rs, lam, I)) continue;
      auto ce = canonical_elements(*rs, I, lam);
      for (const auto& mu : box(2, 4)) {
        if (mu == lam || !leq(*rs, I, mu, lam, Order::Empty)) continue;
        for (int w : ce.stab_I) {
          Weight wm = W.act(w, mu);
          EXPECT_TRUE(wm != lam && leq(*rs, I, wm, lam, Order::Empty));
        }
        if (dominant_with_vbar(*rs, mu).first == ce.lambda_plus) {
          Weight p = dominant_with_vbar(*rs, mu, I).first;
          EXPECT_TRUE(p != lam && leq(*rs, I, p, lam, Order::Empty));
        }
      }
    }
}

TEST(Order, Decomposition) {
  auto rs = build_root_system("A2");
  const auto& W = rs->weyl();
  for (Subset I : kA2Subsets)
    for (const auto& lam : box(2, 6)) {
      auto vbar = dominant_with_vbar(*rs, lam).second;
      auto [lip, vbarI] = dominant_with_vbar(*rs, lam, I);
      auto vbar_lip = dominant_with_vbar(*rs, lip).second;
      EXPECT_EQ(W.inverse(vbar), W.mul(W.inverse(vbar_lip), W.inverse(vbarI)));
      EXPECT_EQ(W.length(vbar), W.length(vbar_lip) + W.length(vbarI));
    }
}

TEST(Order, ProjectionIsOrderPreserving) {
  auto rs = build_root_system("A2");
  const auto& W = rs->weyl();
  for (Subset I : kA2Subsets)
    for (int u = 0; u < W.size(); ++u)
      for (int v = 0; v < W.size(); ++v)
        if (W.bruhat_leq(u, v))
          EXPECT_TRUE(W.bruhat_leq(W.coset_decompose(u, I).first, W.coset_decompose(v, I).first));
}

TEST(LowerIdeal, A1Examples) {
  auto rs = build_root_system("A1");
  EXPECT_EQ(lower_ideal(*rs, Subset(), wt({-1})), (std::vector<Weight>{wt({1}), wt({-1})}));
  EXPECT_EQ(lower_ideal(*rs, Subset(), wt({2})), (std::vector<Weight>{wt({0}), wt({2})}));
  EXPECT_EQ(lower_ideal(*rs, Subset(), wt({1})), (std::vector<Weight>{wt({1})}));
}

TEST(LowerIdeal, MatchesBruteForce) {
  for (const char* n : {"A2", "B2", "G2"}) {
    auto rs = build_root_system(n);
    for (Subset I : kA2Subsets)
      for (const auto& lam : box(2, 2)) {
        if (!is_dominant(*rs, lam, I)) continue;
        auto ideal = lower_ideal(*rs, I, lam);
        std::set<Weight> got(ideal.begin(), ideal.end());
        std::set<Weight> want;
        for (const auto& mu : box(2, 14))
          if (is_dominant(*rs, mu, I) && leq(*rs, I, mu, lam, Order::I)) want.insert(mu);
        EXPECT_EQ(got, want) << n << " " << lam.to_string();
        EXPECT_EQ(ideal.back(), lam);
        // linear extension
        for (size_t i = 0; i < ideal.size(); ++i)
          for (size_t j = 0; j < i; ++j) EXPECT_FALSE(leq(*rs, I, ideal[i], ideal[j], Order::I));
      }
  }
}
