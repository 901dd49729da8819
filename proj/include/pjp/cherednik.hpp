#pragma once

#include <map>
#include <vector>

#include "pjp/laurent.hpp"

namespace pjp {

// Element of S(𝔥): polynomial in the ξ-basis vectors b_1..b_n.
class HPoly {
 public:
  HPoly() = default;
  explicit HPoly(int nvars) : n_(nvars) {}
  static HPoly constant(int nvars, const Rational& c);
  // ξ = Σ x_j b_j as a degree-one element
  static HPoly linear(const RVec& xi);

  int nvars() const { return n_; }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
  int degree() const;
  bool is_zero() const { return terms_.empty(); }

  HPoly operator+(const HPoly& o) const;
  HPoly operator-(const HPoly& o) const;
  HPoly operator*(const HPoly& o) const;
  HPoly operator*(const Rational& c) const;
  bool operator==(const HPoly& o) const = default;

  // substitute b_j ↦ values[j]
  Rational eval(const RVec& values) const;
  // q(λ) for λ ∈ 𝔥* in fundamental-weight coordinates
  Rational at(const RootSystem& rs, const RVec& lambda) const;
  // (w·q)(b) = q(w^{-1} b) so that (w·q)(wλ) = q(λ)
  HPoly act(const RootSystem& rs, int w) const;
  bool is_invariant(const RootSystem& rs, Subset I) const;

  std::string to_string() const;

 private:
  void add_term(const std::vector<int>& e, const Rational& c);
  int n_ = 0;
  std::map<std::vector<int>, Rational> terms_;
};

// (1 − e^{−α})^{-1}(1 − s_α) on Laurent polynomials; positive root index r.
LaurentPoly divided_difference(int r, const LaurentPoly& f);

// D_ξ(k) f
LaurentPoly cherednik_apply(const RVec& xi, const Multiplicity& k, const LaurentPoly& f);

// q(D(k)) f
LaurentPoly poly_in_cherednik(const HPoly& q, const Multiplicity& k, const LaurentPoly& f);
// D_{I,q}: q must be W_I-invariant and f W_I-invariant (NotInvariant);
// the result is asserted W_I-invariant.
LaurentPoly invariant_operator_apply(const HPoly& q, Subset I, const Multiplicity& k, const LaurentPoly& f);

struct SpectralVector {
  Weight lambda;
  Multiplicity k;
  RVec value;  // λ̃ in fundamental-weight coordinates
};

// λ − v(λ)^{-1}ρ(k)
RVec spectral_definition(const RootSystem& rs, const Weight& lambda, const Multiplicity& k);
// λ + ½ Σ k_α ε(⟨λ,α^∨⟩) α, ε(0) = −1
RVec spectral_epsilon(const RootSystem& rs, const Weight& lambda, const Multiplicity& k);
// w₀^{I,λ}(λ − w₀^I v(w₀^I λ)^{-1} ρ(k)) for λ ∈ P_I⁺
RVec spectral_lemma(const RootSystem& rs, Subset I, const Weight& lambda, const Multiplicity& k);
// Defining form and ε-form, asserted equal (InternalInconsistency).
SpectralVector spectral(const RootSystem& rs, const Weight& lambda, const Multiplicity& k);
// Additionally asserts the w₀-form for λ ∈ P_I⁺.
SpectralVector spectral(const RootSystem& rs, Subset I, const Weight& lambda, const Multiplicity& k);

// E(λ,k) by the triangular recursion on the ≤_∅ lower ideal; the eigen-equation
// is checked for every ξ-basis vector. Throws SpectralCollision.
LaurentPoly e_poly(const RootSystemPtr& rs, const Weight& lambda, const Multiplicity& k);
// E(λ,k) from the Gram system against {e^μ : μ <_∅ λ}; integer k only.
LaurentPoly e_poly_gs(const RootSystemPtr& rs, const Weight& lambda, const Multiplicity& k);

}  // namespace pjp
