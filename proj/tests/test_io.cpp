#include <gtest/gtest.h>

#include "pjp/error.hpp"
#include "pjp/io.hpp"

using namespace pjp;

namespace {

Json reparse(const Json& j) { return Json::parse(j.dump()); }

}  // namespace

TEST(Io, Scalars) {
  EXPECT_EQ(to_json(ratio(-3, 6)), "-1/2");
  EXPECT_EQ(rational_from_json(Json("5/3")), ratio(5, 3));
  Weight w = Weight::from_coords({-1, 2}).half();
  EXPECT_EQ(weight_from_json(reparse(to_json(w))), w);
  EXPECT_THROW(rational_from_json(Json(true)), Error);
  EXPECT_THROW(weight_from_json(Json{{"num", {1}}, {"den", 3}}), Error);
}

TEST(Io, RootSystemAndMultiplicity) {
  auto rs = build_root_system("B2", 2);
  auto back = root_system_from_json(reparse(to_json(*rs)));
  EXPECT_TRUE(back->same_as(*rs));
  auto k = Multiplicity(*rs, {ratio(1, 2), Rational(3)});
  EXPECT_TRUE(to_json(k).is_array());
  EXPECT_EQ(multiplicity_from_json(reparse(to_json(k)), *rs), k);
  auto u = Multiplicity::uniform(*rs, 2);
  EXPECT_EQ(to_json(u), "2/1");
  EXPECT_EQ(multiplicity_from_json(to_json(u), *rs), u);
  EXPECT_EQ(subset_to_json(Subset::of({1}), 2), Json::array({2}));
  EXPECT_EQ(subset_from_json(Json::array({2}), 2), Subset::of({1}));
  EXPECT_THROW(subset_from_json(Json::array({3}), 2), Error);
}

TEST(Io, EPolyRoundTrip) {
  auto rs = build_root_system("A2");
  auto k = Multiplicity::uniform(*rs, ratio(5, 3));
  Weight lambda = Weight::from_coords({-1, 1});
  EPolyResult e{rs, lambda, k, e_poly(rs, lambda, k), spectral(*rs, lambda, k).value};
  EXPECT_EQ(epoly_from_json(reparse(to_json(e))), e);
  EXPECT_EQ(to_json(e).dump(), to_json(epoly_from_json(to_json(e))).dump());
}

TEST(Io, JacobiRoundTrip) {
  auto rs = build_root_system("A2", 2);
  auto k = Multiplicity::uniform(*rs, 2);
  auto p = jacobi_sym(rs, Subset::of({1}), Weight::from_coords({-1, 1}), k);
  auto q = jacobi_from_json(reparse(to_json(p)));
  EXPECT_TRUE(same_jacobi(p, q));
  auto bad = to_json(p);
  bad["terms"][0].erase("coeff");
  EXPECT_THROW(jacobi_from_json(bad), Error);
}

TEST(Io, VectorAndOperators) {
  auto rs = a2_spherical();
  Subset I = a2_spherical_I();
  auto v = gamma(orbit_sum(rs, I, Weight::from_coords({1, 0})) * ratio(2, 3) + orbit_sum(rs, I, Weight::from_coords({-1, 1})), I);
  EXPECT_EQ(vector_from_json(reparse(to_json(v))), v);

  auto ops = shimeno_ops(ratio(1, 2), Transcription::Corrected);
  for (const auto* m : {&ops.first, &ops.second}) EXPECT_EQ(matrix_op_from_json(reparse(to_json(*m))), *m);
  auto m2 = a2_example_ops(ratio(5, 3), Transcription::Corrected).second;
  EXPECT_EQ(matrix_op_from_json(reparse(to_json(m2))), m2);
}

TEST(Io, ChiRoundTrip) {
  auto rs = build_root_system("A2");
  auto m = mvop_matrix(rs, Subset::of({1}), Weight::from_coords({1, 0}), Multiplicity::uniform(*rs, 1));
  EXPECT_EQ(chi_matrix_from_json(reparse(to_json(m))), m);
  EXPECT_THROW(chi_from_json(Json{{"nvars", 2}, {"terms", {{{"exp", {1}}, {"coeff", "1"}}}}}), Error);
}

TEST(Io, TextAndLatex) {
  auto rs = build_root_system("A2");
  Weight w = Weight::from_coords({-1, 1});
  EXPECT_EQ(weight_text(w), "-w1+w2");
  EXPECT_EQ(weight_latex(w), "-\\varpi_{1}+\\varpi_{2}");
  EXPECT_EQ(weight_text(Weight(2)), "0");
  auto f = LaurentPoly::monomial(rs, w) + LaurentPoly::monomial(rs, Weight::from_coords({0, 1})) * ratio(1, 2);
  EXPECT_EQ(to_text(f), "e^(-w1+w2) + 1/2*e^(w2)");
  EXPECT_EQ(to_latex(f), "e^{-\\varpi_{1}+\\varpi_{2}} + \\frac{1}{2}e^{\\varpi_{2}}");
  EXPECT_EQ(to_latex(ratio(-3, 4)), "-\\frac{3}{4}");
  EXPECT_EQ(to_text(LaurentPoly::constant(rs, -2)), "-2");
  auto chi = ChiPolynomial::variable(2, 0) * ChiPolynomial::variable(2, 1) - ChiPolynomial::constant(2, 3);
  EXPECT_EQ(to_latex(chi), "\\chi_{1}\\chi_{2} - 3");
}

TEST(Io, SteinbergJson) {
  auto rs = build_root_system("A2");
  auto j = steinberg_json(rs, Subset::of({1}), {Subset(), Subset::of({0}), Subset::of({1}), Subset::full(2)});
  EXPECT_EQ(j["generators"].size(), 3u);
  EXPECT_EQ(j["table"]["rows"].size(), 6u);
  EXPECT_EQ(j["generators"][0]["v"], "e");
}
