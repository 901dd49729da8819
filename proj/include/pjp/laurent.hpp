#pragma once

#include <functional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pjp/rootsys.hpp"
#include "pjp/weylgroup.hpp"

namespace pjp {

using Term = std::pair<Weight, Rational>;

// Sparse Laurent polynomial on ½P. Terms are kept sorted by exponent
// (ascending Weight order) with no zero coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(RootSystemPtr rs) : rs_(std::move(rs)) {}
  LaurentPoly(RootSystemPtr rs, std::vector<Term> terms);

  static LaurentPoly monomial(RootSystemPtr rs, const Weight& lambda, const Rational& c = Rational(1));
  static LaurentPoly constant(RootSystemPtr rs, const Rational& c);

  const RootSystemPtr& root_system() const { return rs_; }
  const RootSystem& rs() const { return *rs_; }
  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Weight& lambda) const;
  Rational constant_term() const;
  // largest exponent in the stored order
  const Term& lex_leading() const { return terms_.back(); }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const Rational& c) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  LaurentPoly shifted(const Weight& lambda) const;  // e^λ · f
  LaurentPoly pow(int e) const;

  bool operator==(const LaurentPoly& o) const;

  // exponent map λ ↦ f(λ), coefficients unchanged, then re-sorted and merged
  LaurentPoly map_exponents(const std::function<Weight(const Weight&)>& f) const;

 private:
  void normalize();
  void check_same(const LaurentPoly& o) const;

  RootSystemPtr rs_;
  std::vector<Term> terms_;
};

// Hash-map accumulator; finish() yields a normalized polynomial.
class PolyAccumulator {
 public:
  explicit PolyAccumulator(RootSystemPtr rs) : rs_(std::move(rs)) {}
  void add(const Weight& lambda, const Rational& c);
  void add(const LaurentPoly& f, const Rational& c = Rational(1));
  void add_product(const LaurentPoly& f, const LaurentPoly& g);
  LaurentPoly finish() const;

 private:
  RootSystemPtr rs_;
  std::unordered_map<Weight, Rational, WeightHash> map_;
};

LaurentPoly weyl_act(int w, const LaurentPoly& f);
LaurentPoly star(const LaurentPoly& f);
Rational constant_term(const LaurentPoly& f);

// ∂_ξ for ξ in ξ-basis coordinates
LaurentPoly derivative(const LaurentPoly& f, const RVec& xi);
// ∂^a with a a multi-index over the ξ-basis
LaurentPoly derivative(const LaurentPoly& f, const std::vector<int>& multi_index);

bool is_invariant(const LaurentPoly& f, Subset I);

// ∏_{α∈R}(e^{α/2}−e^{−α/2})^{k_α}; throws NonIntegerMultiplicity.
LaurentPoly delta_k(const RootSystemPtr& rs, const Multiplicity& k);
// Literal product over all roots with half-weight factors; oracle for delta_k.
LaurentPoly delta_k_literal(const RootSystemPtr& rs, const Multiplicity& k);

// (f,g)_k with δ_k computed once.
class InnerProduct {
 public:
  InnerProduct(RootSystemPtr rs, const Multiplicity& k);
  Rational operator()(const LaurentPoly& f, const LaurentPoly& g) const;
  // (e^x, e^y)_k = δ_k coefficient at y − x
  Rational monomial(const Weight& x, const Weight& y) const;
  const LaurentPoly& delta() const { return delta_; }

 private:
  LaurentPoly delta_;
  std::unordered_map<Weight, Rational, WeightHash> lookup_;
};

Rational inner_k(const LaurentPoly& f, const LaurentPoly& g, const Multiplicity& k);

// W_I-orbit of λ in deterministic (sorted) order
std::vector<Weight> orbit(const RootSystem& rs, Subset I, const Weight& lambda);
// m_I(λ); throws NotIDominant.
LaurentPoly orbit_sum(const RootSystemPtr& rs, Subset I, const Weight& lambda);

// q with f = q·g; throws NotDivisible.
LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g);

}  // namespace pjp
