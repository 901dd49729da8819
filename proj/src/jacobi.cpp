#include "pjp/jacobi.hpp"

#include <unordered_map>
#include <unordered_set>

#include "pjp/error.hpp"
#include "pjp/parabolic.hpp"

namespace pjp {

std::vector<std::pair<Weight, Rational>> expand_in_orbit_sums(const LaurentPoly& f, Subset I) {
  if (!is_invariant(f, I)) throw Error(ErrorCode::NotInvariant, "polynomial is not W_I-invariant");
  std::vector<std::pair<Weight, Rational>> out;
  for (const auto& [mu, c] : f.terms())
    if (is_dominant(f.rs(), mu, I)) out.emplace_back(mu, c);
  return out;
}

namespace {

JacobiPoly finish(const RootSystemPtr& rs, Subset I, const Weight& lambda, const Multiplicity& k, LaurentPoly p) {
  auto ideal = lower_ideal(*rs, I, lambda);
  std::unordered_map<Weight, size_t, WeightHash> pos;
  for (size_t i = 0; i < ideal.size(); ++i) pos.emplace(ideal[i], i);
  auto raw = expand_in_orbit_sums(p, I);
  std::vector<Rational> coeff(ideal.size());
  for (const auto& [mu, c] : raw) {
    auto it = pos.find(mu);
    if (it == pos.end())
      throw Error(ErrorCode::InternalInconsistency,
                  "p_I(" + lambda.to_string() + ") has m_I(" + mu.to_string() + ") outside the lower ideal");
    coeff[it->second] = c;
  }
  if (coeff.back() != 1) throw Error(ErrorCode::InternalInconsistency, "leading coefficient of p_I is not 1");
  JacobiPoly j{lambda, I, k, std::move(p), {}, spectral(*rs, I, lambda, k)};
  for (size_t i = 0; i < ideal.size(); ++i)
    if (coeff[i] != 0) j.expansion.emplace_back(ideal[i], coeff[i]);
  return j;
}

}  // namespace

JacobiPoly jacobi_sym(const RootSystemPtr& rs, Subset I, const Weight& lambda, const Multiplicity& k) {
  if (!is_dominant(*rs, lambda, I)) throw Error(ErrorCode::NotIDominant, "p_I needs λ ∈ P_I⁺, got " + lambda.to_string());
  LaurentPoly E = e_poly(rs, lambda, k);
  auto ce = canonical_elements(*rs, I, lambda);
  PolyAccumulator acc(rs);
  for (int w : ce.stab_I_reps) acc.add(weyl_act(w, E));
  return finish(rs, I, lambda, k, acc.finish());
}

JacobiPoly jacobi_gs(const RootSystemPtr& rs, Subset I, const Weight& lambda, const Multiplicity& k) {
  if (!is_dominant(*rs, lambda, I)) throw Error(ErrorCode::NotIDominant, "p_I needs λ ∈ P_I⁺, got " + lambda.to_string());
  InnerProduct ip(rs, k);
  auto ideal = lower_ideal(*rs, I, lambda);
  std::vector<std::vector<Weight>> orbits;
  for (const auto& mu : ideal) orbits.push_back(orbit(*rs, I, mu));
  auto pair = [&](size_t a, size_t b) {
    Rational s = 0;
    for (const auto& x : orbits[a])
      for (const auto& y : orbits[b]) s += ip.monomial(x, y);
    return s;
  };
  const size_t m = ideal.size() - 1;
  RMatrix G(m, RVec(m));
  RVec rhs(m);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j <= i; ++j) G[i][j] = G[j][i] = pair(i, j);
    rhs[i] = -pair(m, i);
  }
  RVec c = solve_exact(G, rhs);
  PolyAccumulator acc(rs);
  for (const auto& x : orbits[m]) acc.add(x, Rational(1));
  for (size_t i = 0; i < m; ++i)
    for (const auto& x : orbits[i]) acc.add(x, c[i]);
  return finish(rs, I, lambda, k, acc.finish());
}

RMatrix gram_matrix(const std::vector<LaurentPoly>& polys, const Multiplicity& k) {
  RMatrix G(polys.size(), RVec(polys.size()));
  if (polys.empty()) return G;
  InnerProduct ip(polys[0].root_system(), k);
  for (size_t i = 0; i < polys.size(); ++i)
    for (size_t j = 0; j <= i; ++j) G[i][j] = G[j][i] = ip(polys[i], polys[j]);
  return G;
}

RMatrix gram_matrix(const RootSystemPtr& rs, Subset I, const Multiplicity& k, const std::vector<Weight>& labels) {
  std::vector<LaurentPoly> polys;
  for (const auto& l : labels) polys.push_back(jacobi_sym(rs, I, l, k).poly);
  return gram_matrix(polys, k);
}

RVec spectral_data(const JacobiPoly& p, const std::vector<HPoly>& generators) {
  RVec out;
  for (const auto& q : generators) {
    Rational v = q.at(p.poly.rs(), p.spectral.value);
    if (!(invariant_operator_apply(q, p.I, p.k, p.poly) == p.poly * v))
      throw Error(ErrorCode::InternalInconsistency,
                  "p_I(" + p.label.to_string() + ") is not an eigenfunction of D_{I,q} for q = " + q.to_string());
    out.push_back(v);
  }
  return out;
}

HPoly a2_xi(int i) {
  switch (i) {
    case 1: return HPoly::linear({ratio(2, 3), ratio(1, 3)});
    case 2: return HPoly::linear({ratio(-1, 3), ratio(1, 3)});
    case 3: return HPoly::linear({ratio(-1, 3), ratio(-2, 3)});
  }
  throw Error(ErrorCode::InvalidInput, "A2 coordinate index must be 1, 2 or 3");
}

std::vector<HPoly> a2_generators(Subset I) {
  HPoly x1 = a2_xi(1), x2 = a2_xi(2), x3 = a2_xi(3);
  HPoly e2 = x1 * x2 + x1 * x3 + x2 * x3;
  bool s1 = I.contains(0), s2 = I.contains(1);
  if (s1 && s2) return {e2, x1 * x2 * x3};
  if (s1) return {x3, e2};
  return {x1, e2};
}

}  // namespace pjp
