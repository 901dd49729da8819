#pragma once

#include <string>
#include <vector>

#include "pjp/cherednik.hpp"
#include "pjp/jacobi.hpp"
#include "pjp/laurent.hpp"

namespace pjp {

// Tuple of Laurent polynomials indexed by W^I in the canonical order.
struct VectorPoly {
  RootSystemPtr rs;
  Subset I;
  std::vector<LaurentPoly> components;

  size_t size() const { return components.size(); }
  const LaurentPoly& operator[](size_t i) const { return components[i]; }

  VectorPoly operator+(const VectorPoly& o) const;
  VectorPoly operator-(const VectorPoly& o) const;
  VectorPoly operator*(const Rational& c) const;
  // module action of a scalar Laurent polynomial
  VectorPoly operator*(const LaurentPoly& f) const;
  bool operator==(const VectorPoly& o) const;
};

VectorPoly zero_vector(const RootSystemPtr& rs, Subset I);

// Γ(φ) = (u φ)_{u ∈ W^I}; throws NotInvariant unless φ is W_I-invariant.
VectorPoly gamma(const LaurentPoly& phi, Subset I);
bool is_w_invariant(const VectorPoly& v);
// The e-component; throws NotInvariant unless v is W-invariant.
LaurentPoly gamma_inverse(const VectorPoly& v);

// Σ_v (Φ_v, Ψ_v)_k. For two W-invariant inputs the identity with |W^I|(φ,ψ)_k is asserted.
Rational vec_inner(const VectorPoly& a, const VectorPoly& b, const Multiplicity& k);
Rational vec_inner(const VectorPoly& a, const VectorPoly& b, const InnerProduct& ip);

// P_I(λ,k) = Γ(p_I(λ,k))
VectorPoly big_p(const RootSystemPtr& rs, Subset I, const Weight& lambda, const Multiplicity& k);

// β(γ(D_{I,q})) on W-invariant input, computed as Γ(D_{I,q} Γ^{-1}Φ).
VectorPoly induced_apply(const HPoly& q, const Multiplicity& k, const VectorPoly& v);

// Quotient num / ∏ g^m of Laurent polynomials. Denominator factors are kept
// normalized (lowest exponent 0, coefficient 1 there) so that factors equal up
// to a unit are merged.
class RatFunc {
 public:
  using Factor = std::pair<LaurentPoly, int>;

  RatFunc() = default;
  explicit RatFunc(LaurentPoly num) : num_(std::move(num)) {}
  static RatFunc fraction(LaurentPoly num, const std::vector<LaurentPoly>& den_factors);
  static RatFunc fraction(LaurentPoly num, const LaurentPoly& den) { return fraction(std::move(num), std::vector{den}); }

  const LaurentPoly& num() const { return num_; }
  const std::vector<Factor>& factors() const { return den_; }
  LaurentPoly den() const;
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator*(const Rational& c) const;
  RatFunc operator*(const LaurentPoly& f) const;
  RatFunc shifted(const Weight& w) const;
  // equality as rational functions
  bool operator==(const RatFunc& o) const;

  // throws NotDivisible
  LaurentPoly to_poly() const;

  // Σ of fractions over one common denominator
  static RatFunc sum(const std::vector<RatFunc>& parts, const RootSystemPtr& rs);

 private:
  void divide_by(const LaurentPoly& factor, int mult);
  LaurentPoly num_;
  std::vector<Factor> den_;
};

struct OpTerm {
  int i = 0;
  int j = 0;
  RatFunc coeff;
  std::vector<int> deriv;  // multi-index over the ξ-basis
};

// Matrix differential operator Σ c_{ij}(e) ∂^a ⊗ E_{ij} with rational coefficients.
class MatrixRatOp {
 public:
  MatrixRatOp() = default;
  MatrixRatOp(RootSystemPtr rs, int size) : rs_(std::move(rs)), size_(size) {}
  static MatrixRatOp identity(const RootSystemPtr& rs, int size, const Rational& c = Rational(1));

  const RootSystemPtr& root_system() const { return rs_; }
  int size() const { return size_; }
  const std::vector<OpTerm>& terms() const { return terms_; }

  void add(int i, int j, const RatFunc& c, std::vector<int> deriv);
  void add(int i, int j, const RatFunc& c) { add(i, j, c, std::vector<int>(rs_->rank(), 0)); }
  // c · q(∂) at (i,j), q in the ξ-basis variables
  void add(int i, int j, const RatFunc& c, const HPoly& q);

  MatrixRatOp operator+(const MatrixRatOp& o) const;
  MatrixRatOp operator-(const MatrixRatOp& o) const;
  MatrixRatOp operator*(const Rational& c) const;
  // structural equality over the fraction field (coefficients grouped by (i,j,∂^a))
  bool operator==(const MatrixRatOp& o) const;

  int order() const;
  // D^{-1} M D with D = diag(e^{τ_i})
  MatrixRatOp conjugate_diag(const std::vector<Weight>& tau) const;

  std::vector<RatFunc> apply_rational(const VectorPoly& v) const;
  // throws NotDivisible when a row is not a Laurent polynomial
  VectorPoly apply(const VectorPoly& v) const;

 private:
  RootSystemPtr rs_;
  int size_ = 0;
  std::vector<OpTerm> terms_;
};

VectorPoly matrix_op_apply(const MatrixRatOp& m, const VectorPoly& v);

struct EqualityReport {
  bool equal = true;
  std::string diagnostic;
};
// Extensional comparison on a test set; NotDivisible counts as inequality.
EqualityReport operators_equal_on(const MatrixRatOp& a, const MatrixRatOp& b, const std::vector<VectorPoly>& tests);

// --- A2 with R = 2Σ, I = {s2}: explicit operator matrices --------------------

enum class Transcription { Printed, Corrected };

// A2 at scale 2
RootSystemPtr a2_spherical();
inline Subset a2_spherical_I() { return Subset::of({1}); }
// Σ roots α_ij (half of the R roots), (i,j) ∈ {(1,2),(2,3),(1,3)}
Weight sigma_root(int i, int j);

struct OperatorPair {
  MatrixRatOp first;
  MatrixRatOp second;
};
// β(γ(ξ1)) and β(γ(ξ1ξ2+ξ1ξ3+ξ2ξ3))
OperatorPair a2_example_ops(const Rational& k, Transcription t = Transcription::Corrected);
// 𝒟1, 𝒟2
OperatorPair shimeno_ops(const Rational& k, Transcription t = Transcription::Corrected);
// exponents of T = diag(e^{ω1}, e^{ω2−ω1}, e^{−ω2})
std::vector<Weight> t_exponents();
MatrixRatOp t_matrix();

// 2/(1−e^{−2α}) − 1 = coth α and −4e^{−α}/(1−e^{−2α})² = −2cosh/sh² − 2/sh, α a Σ root
bool check_identity_coth(const Weight& alpha);
bool check_identity_sh2(const Weight& alpha);

struct PsiVectors {
  VectorPoly omega1, omega12, omega2;
};
// Ψ_{ω1}, Ψ_{ω1+ω2}, Ψ_{ω2} via Γ, and as printed
PsiVectors psi_vectors();
PsiVectors psi_vectors_printed();
// the printed T-images Φ_{ϖ1}, Φ_{ϖ1+ϖ2}, Φ_{ϖ2}
PsiVectors t_images_printed();

// Γ(m_I(μ)) for μ ∈ P_I⁺ with |coordinates| ≤ bound
std::vector<VectorPoly> invariant_test_set(const RootSystemPtr& rs, Subset I, int bound);

}  // namespace pjp
