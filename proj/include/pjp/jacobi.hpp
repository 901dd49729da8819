#pragma once

#include <vector>

#include "pjp/cherednik.hpp"
#include "pjp/linsolve.hpp"

namespace pjp {

struct JacobiPoly {
  Weight label;
  Subset I;
  Multiplicity k;
  LaurentPoly poly;
  // coefficients c_{λ,μ} over m_I(μ), in lower-ideal order (λ last)
  std::vector<std::pair<Weight, Rational>> expansion;
  SpectralVector spectral;
};

// Coefficients of a W_I-invariant f over {m_I(μ)}; throws NotInvariant.
std::vector<std::pair<Weight, Rational>> expand_in_orbit_sums(const LaurentPoly& f, Subset I);

// Σ_{w ∈ (W_I)^λ} w E(λ,k), re-expanded and checked unitriangular.
JacobiPoly jacobi_sym(const RootSystemPtr& rs, Subset I, const Weight& lambda, const Multiplicity& k);
// Gram system against {m_I(μ) : μ <_I λ}; integer k.
JacobiPoly jacobi_gs(const RootSystemPtr& rs, Subset I, const Weight& lambda, const Multiplicity& k);

RMatrix gram_matrix(const std::vector<LaurentPoly>& polys, const Multiplicity& k);
RMatrix gram_matrix(const RootSystemPtr& rs, Subset I, const Multiplicity& k, const std::vector<Weight>& labels);

// q(λ̃) for each generator; asserts D_{I,q} p = q(λ̃) p.
RVec spectral_data(const JacobiPoly& p, const std::vector<HPoly>& generators);

// A2 coordinates: ξ_i = projection of the i-th unit vector,
// in ξ-basis (simple coroot) coordinates.
HPoly a2_xi(int i);
// Two generators of S(𝔥)^{W_I}-separating data for A2:
// I=∅,{s2}: ξ1, ξ1ξ2+ξ1ξ3+ξ2ξ3; I={s1}: ξ3, e2; I=S: e2, ξ1ξ2ξ3.
std::vector<HPoly> a2_generators(Subset I);

}  // namespace pjp
