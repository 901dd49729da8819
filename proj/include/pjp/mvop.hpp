#pragma once

#include <map>
#include <string>
#include <vector>

#include "pjp/vectorize.hpp"

namespace pjp {

// Polynomial in x_1..x_n with rational coefficients; x_i stands for χ_i.
class ChiPolynomial {
 public:
  ChiPolynomial() = default;
  explicit ChiPolynomial(int nvars) : n_(nvars) {}
  static ChiPolynomial constant(int nvars, const Rational& c);
  static ChiPolynomial variable(int nvars, int i);

  int nvars() const { return n_; }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  void add_term(const std::vector<int>& exponent, const Rational& c);

  ChiPolynomial operator+(const ChiPolynomial& o) const;
  ChiPolynomial operator-(const ChiPolynomial& o) const;
  ChiPolynomial operator*(const ChiPolynomial& o) const;
  ChiPolynomial operator*(const Rational& c) const;
  bool operator==(const ChiPolynomial& o) const = default;

  // x_i ↦ χ_i
  LaurentPoly substitute(const RootSystemPtr& rs) const;
  std::string to_string() const;

 private:
  int n_ = 0;
  std::map<std::vector<int>, Rational> terms_;
};

// χ_i = m_S(ϖ_i)
std::vector<LaurentPoly> fundamental_invariants(const RootSystemPtr& rs);

// Greedy leading-term rewrite; throws NotWInvariant.
ChiPolynomial to_chi(const LaurentPoly& f);

// Φ_I with columns Γ(φ_v), v ∈ W^I in canonical order.
struct SteinbergMatrix {
  RootSystemPtr rs;
  Subset I;
  std::vector<int> reps;
  std::vector<std::vector<LaurentPoly>> entries;  // entries[row u][column v]
  LaurentPoly det;
  // ∏_{α>0}(e^{α/2}−e^{−α/2})^{n_α}; det = sign · product
  LaurentPoly product;
  int sign = 1;

  size_t size() const { return reps.size(); }
  VectorPoly column(size_t v) const;
};

// Number of pairs of cosets in W/W_I interchanged by s_α (positive root index r).
int pair_count(const RootSystem& rs, Subset I, int r);

// Asserts the determinant identity (InternalInconsistency).
SteinbergMatrix steinberg_matrix(const RootSystemPtr& rs, Subset I);

// Fraction-free determinant.
LaurentPoly bareiss_det(std::vector<std::vector<LaurentPoly>> m, const RootSystemPtr& rs);

// f_v ∈ ℂ[P]^W with Φ = Σ_v f_v Γ(φ_v), via the adjugate of Φ_I. Throws
// NotInvariant for non-invariant input and NotDivisible if freeness fails.
std::vector<LaurentPoly> steinberg_coords(const VectorPoly& v);

// Φ_I · (Q(χ)) as a vector polynomial
VectorPoly pull_back(const std::vector<ChiPolynomial>& q, const RootSystemPtr& rs, Subset I);

// 𝒫_I(λ,k) = Φ_I^{-1} P_I(λ,k) in χ-coordinates
std::vector<ChiPolynomial> script_p(const RootSystemPtr& rs, Subset I, const Weight& lambda, const Multiplicity& k);

using ChiMatrix = std::vector<std::vector<ChiPolynomial>>;  // [row][column]

// 𝒲_I = Φ_I* Φ_I
ChiMatrix weight_matrix(const RootSystemPtr& rs, Subset I);
// columns 𝒫_I(v^{-1}(λ_v+σ),k), v ∈ W^I; σ ∈ P⁺
ChiMatrix mvop_matrix(const RootSystemPtr& rs, Subset I, const Weight& sigma, const Multiplicity& k);
// labels of the columns of ℳ_I(σ)
std::vector<Weight> mvop_labels(const RootSystem& rs, Subset I, const Weight& sigma);

// column j of a matrix
std::vector<ChiPolynomial> column(const ChiMatrix& m, size_t j);

}  // namespace pjp
