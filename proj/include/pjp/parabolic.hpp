#pragma once

#include <vector>

#include "pjp/laurent.hpp"

namespace pjp {

struct SteinbergDatum {
  int v = 0;
  Weight lambda_v;  // Σ ϖ_α over simple α with v^{-1}α < 0
  Weight label;     // v^{-1}λ_v ∈ P_I⁺
  LaurentPoly phi;  // m_I(v^{-1}λ_v)
};

Weight steinberg_weight(const RootSystem& rs, int v);
// one datum per v ∈ W^I, canonical order
std::vector<SteinbergDatum> steinberg_generators(const RootSystemPtr& rs, Subset I);

// Table over all v ∈ W: λ_v, v^{-1}λ_v and membership v ∈ W^I per subset.
struct SteinbergRow {
  int v = 0;
  Weight lambda_v;
  Weight label;
  std::vector<bool> member;
};
std::vector<SteinbergRow> steinberg_table(const RootSystem& rs, const std::vector<Subset>& subsets);

// f_I(v, σ) = v^{-1}(λ_v + σ)
Weight f_I(const RootSystem& rs, Subset I, int v, const Weight& sigma);
// (v, σ) with v = v̄(μ)^{-1}; throws NotIDominant.
std::pair<int, Weight> f_I_inverse(const RootSystem& rs, Subset I, const Weight& mu);

struct AltSteinbergDatum {
  int w = 0;
  Weight mu_w;         // −Σ ϖ_α over simple α with w^{-1}α < 0
  Weight label;        // w₀^I w^{-1} μ_w ∈ P_I⁺
  LaurentPoly generator;  // m_I(label)
};
std::vector<AltSteinbergDatum> alt_steinberg(const RootSystemPtr& rs, Subset I);
// w ∈ W^I with λ ∈ w₀^I w^{-1}(μ_w + P⁻), or -1
int alt_cover_index(const RootSystem& rs, Subset I, const Weight& lambda);

enum class Order { Dominance, Empty, I };

// Dominance: μ − λ ∈ Q⁺. Empty: λ₊ ≺ μ₊, or λ₊ = μ₊ and v̄(λ) ≤_W v̄(μ).
// I: as Empty, restricted to P_I⁺ (throws NotIDominant).
bool leq(const RootSystem& rs, Subset I, const Weight& lambda, const Weight& mu, Order mode);

// {μ ∈ P_I⁺ : μ ≤_I λ} including λ, ordered by (height μ₊, ℓ(v̄(μ)), μ).
std::vector<Weight> lower_ideal(const RootSystem& rs, Subset I, const Weight& lambda);

// Dominant ν with λ₊ − ν ∈ Q⁺, ascending by height.
std::vector<Weight> dominant_below(const RootSystem& rs, const Weight& lambda_plus);

}  // namespace pjp
