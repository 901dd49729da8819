#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "pjp/rational.hpp"

namespace pjp {

inline constexpr int kMaxRank = 4;

// Element of ½P in fundamental-weight coordinates. Stored as doubled integer
// coordinates so that half-weights need no separate denominator field.
class Weight {
 public:
  Weight() = default;
  explicit Weight(int rank);

  static Weight from_coords(const std::vector<int>& coords);
  static Weight from_num_den(const std::vector<int>& num, int den);
  static Weight unit(int rank, int i);

  int rank() const { return rank_; }
  int twice(int i) const { return c2_[i]; }
  Rational coord(int i) const { return ratio(c2_[i], 2); }
  RVec coords() const;

  bool is_integral() const;
  bool is_zero() const;
  int den() const { return is_integral() ? 1 : 2; }
  std::vector<int> num() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight operator*(int s) const;
  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  // Exact halving; only defined when the result stays in ½P.
  Weight half() const;

  std::string to_string() const;

  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;

  size_t hash() const;

 private:
  friend class WeightBuilder;
  std::array<int32_t, kMaxRank> c2_{};
  int32_t rank_ = 0;
};

struct WeightHash {
  size_t operator()(const Weight& w) const { return w.hash(); }
};

// Subset of simple reflections, 0-based bit positions.
class Subset {
 public:
  Subset() = default;
  static Subset of(const std::vector<int>& indices);
  static Subset full(int rank);

  bool contains(int i) const { return (bits_ >> i) & 1u; }
  void insert(int i) { bits_ |= (1u << i); }
  std::vector<int> indices(int rank) const;
  unsigned bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }

  auto operator<=>(const Subset&) const = default;

 private:
  unsigned bits_ = 0;
};

struct Root {
  Weight weight;             // fundamental-weight coordinates
  std::vector<int> simple;   // coordinates in simple roots
  std::vector<int> coroot;   // coefficients of α^∨ in simple coroots
  int orbit = 0;             // W-orbit index (root length class)
  int height = 0;
};

class WeylGroup;

class RootSystem {
 public:
  RootSystem(char family, int rank, Rational scale);

  char family() const { return family_; }
  int rank() const { return rank_; }
  const Rational& scale() const { return scale_; }
  std::string name() const;

  // cartan()[i][j] = ⟨α_j, α_i^∨⟩
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  // (α_i, α_i)/2 at the given scale
  const RVec& symmetrizers() const { return sym_; }

  const std::vector<Root>& positive_roots() const { return roots_; }
  int num_positive_roots() const { return static_cast<int>(roots_.size()); }
  int num_orbits() const { return num_orbits_; }
  // index of a positive simple root α_i in positive_roots()
  int simple_root_index(int i) const { return simple_index_[i]; }
  Weight simple_root(int i) const { return roots_[simple_index_[i]].weight; }
  Weight fundamental_weight(int i) const { return Weight::unit(rank_, i); }
  // -1 if w is not a positive root
  int positive_root_index(const Weight& w) const;

  // ⟨λ, α^∨⟩ for positive root r, doubled (so exact on ½P)
  int twice_pairing(const Weight& lambda, int r) const;
  Rational pairing(const Weight& lambda, int r) const;
  Rational pairing(const RVec& lambda, int r) const;
  Rational inner(const Weight& a, const Weight& b) const;
  Rational inner(const RVec& a, const RVec& b) const;

  // λ(ξ) for ξ in the ξ-basis (simple coroots at scale 1)
  Rational eval(const RVec& lambda, const RVec& xi) const;
  Rational eval(const Weight& lambda, const RVec& xi) const;
  Rational root_eval(int r, const RVec& xi) const;

  RVec simple_coords(const Weight& lambda) const;
  RVec simple_coords(const RVec& lambda) const;
  Rational height(const Weight& lambda) const;
  // μ − λ ∈ Q⁺
  bool dominance_leq(const Weight& lambda, const Weight& mu) const;
  bool in_root_lattice(const Weight& lambda) const;

  const WeylGroup& weyl() const { return *weyl_; }

  bool same_as(const RootSystem& o) const {
    return family_ == o.family_ && rank_ == o.rank_ && scale_ == o.scale_;
  }

 private:
  char family_;
  int rank_;
  Rational scale_;
  std::vector<std::vector<int>> cartan_;
  RVec sym_;
  std::vector<std::vector<Rational>> cartan_inv_;
  std::vector<std::vector<Rational>> fund_gram_;
  std::vector<Root> roots_;
  std::vector<int> simple_index_;
  std::unordered_map<Weight, int, WeightHash> root_lookup_;
  int num_orbits_ = 1;
  std::shared_ptr<const WeylGroup> weyl_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

// Cached per (family, rank, scale); throws UnsupportedType.
RootSystemPtr build_root_system(char family, int rank, const Rational& scale = Rational(1));
// "A2", "B2", "G2", ... ; throws UnsupportedType.
RootSystemPtr build_root_system(const std::string& name, const Rational& scale = Rational(1));

void require_same(const RootSystem& a, const RootSystem& b);

// One nonnegative rational per W-orbit of roots.
class Multiplicity {
 public:
  Multiplicity() = default;
  Multiplicity(const RootSystem& rs, const RVec& per_orbit);
  static Multiplicity uniform(const RootSystem& rs, const Rational& k);
  // Validates constancy on orbits.
  static Multiplicity from_per_root(const RootSystem& rs, const RVec& per_root);

  const Rational& orbit(int o) const { return k_[o]; }
  const Rational& of_root(const RootSystem& rs, int r) const {
    return k_[rs.positive_roots()[r].orbit];
  }
  const RVec& values() const { return k_; }
  bool is_integral() const;
  std::string to_string() const;

  bool operator==(const Multiplicity&) const = default;

 private:
  RVec k_;
};

// ρ(k) = ½ Σ_{α>0} k_α α, fundamental-weight coordinates
RVec rho(const RootSystem& rs, const Multiplicity& k);

// ⟨λ, α^∨⟩ ≥ 0 for all α ∈ R_I⁺
bool is_dominant(const RootSystem& rs, const Weight& lambda, Subset I);

RVec to_rvec(const Weight& w);

}  // namespace pjp
