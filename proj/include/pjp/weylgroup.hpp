#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pjp/rootsys.hpp"

namespace pjp {

// Integer action matrix on fundamental-weight coordinates, row-major.
struct ActionMatrix {
  int n = 0;
  std::array<int, kMaxRank * kMaxRank> a{};

  int operator()(int i, int j) const { return a[i * kMaxRank + j]; }
  int& operator()(int i, int j) { return a[i * kMaxRank + j]; }
  ActionMatrix operator*(const ActionMatrix& o) const;
  static ActionMatrix identity(int n);

  auto operator<=>(const ActionMatrix&) const = default;
};

class WeylElt {
 public:
  WeylElt() = default;
  WeylElt(int index, std::vector<int> word, ActionMatrix matrix)
      : index_(index), word_(std::move(word)), matrix_(matrix) {}

  int index() const { return index_; }
  // 0-based simple reflection indices, leftmost first
  const std::vector<int>& word() const { return word_; }
  const ActionMatrix& matrix() const { return matrix_; }
  int length() const { return static_cast<int>(word_.size()); }
  // "s2*s1" (1-based), "e" for the identity
  std::string to_string() const;

  bool operator==(const WeylElt& o) const { return index_ == o.index_; }

 private:
  int index_ = 0;
  std::vector<int> word_;
  ActionMatrix matrix_;
};

class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& rs);

  int size() const { return static_cast<int>(elements_.size()); }
  int rank() const { return rank_; }
  const WeylElt& element(int w) const { return elements_[w]; }
  const std::vector<WeylElt>& elements() const { return elements_; }
  int identity() const { return 0; }
  int simple(int i) const { return simple_[i]; }
  int mul(int u, int v) const { return mul_[u * size() + v]; }
  int inverse(int w) const { return inv_[w]; }
  int length(int w) const { return elements_[w].length(); }
  int longest() const { return longest_; }
  int from_word(const std::vector<int>& word) const;
  // Parses "s2*s1" / "e"; throws InvalidInput.
  int parse(const std::string& text) const;

  Weight act(int w, const Weight& lambda) const;
  RVec act(int w, const RVec& lambda) const;
  // 𝔥 action on ξ-basis coordinates
  RVec act_h(int w, const RVec& xi) const;

  // Signed root indices: r < N positive root r, r >= N its negative.
  int root_image(int w, int signed_root) const { return root_perm_[w][signed_root]; }
  bool sends_to_negative(int w, int r) const { return root_perm_[w][r] >= num_pos_; }
  std::vector<int> inversion_set(int w) const;

  bool bruhat_leq(int u, int v) const { return bruhat_[u * size() + v]; }

  bool in_parabolic(int w, Subset I) const;
  std::vector<int> parabolic(Subset I) const;
  std::vector<int> min_coset_reps(Subset I) const;
  bool is_min_coset_rep(int w, Subset I) const;
  // w = w'' w' with w'' ∈ W^I, w' ∈ W_I
  std::pair<int, int> coset_decompose(int w, Subset I) const;
  int longest(Subset I) const;

 private:
  int rank_;
  int num_pos_;
  std::vector<WeylElt> elements_;
  std::map<ActionMatrix, int> lookup_;
  std::vector<int> simple_;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<std::vector<int>> root_perm_;
  std::vector<char> bruhat_;
  int longest_ = 0;
};

std::vector<WeylElt> enumerate(const RootSystem& rs, Subset I);
std::vector<WeylElt> min_coset_reps(const RootSystem& rs, Subset I);
Weight act(const RootSystem& rs, const WeylElt& w, const Weight& lambda);

// Reduced-word subword test; used as an oracle for bruhat_leq.
bool bruhat_leq_subword(const RootSystem& rs, int u, int v);

struct CanonicalElements {
  Weight lambda_plus;
  Weight lambda_I_plus;
  int vbar = 0;    // shortest with vbar·λ₊ = λ
  int v = 0;       // shortest with v·λ = λ₋
  int vbar_I = 0;  // shortest in W_I with vbar_I·λ_{I,+} = λ
  std::vector<int> stab_I;       // W_{I,λ}
  std::vector<int> stab_I_reps;  // (W_I)^λ
  int w0_I = 0;
  int w0_I_lambda = 0;
};

CanonicalElements canonical_elements(const RootSystem& rs, Subset I, const Weight& lambda);

// λ₊ together with v̄(λ); cheap walk, no stabilizer data.
std::pair<Weight, int> dominant_with_vbar(const RootSystem& rs, const Weight& lambda);
// λ₋ together with v(λ)
std::pair<Weight, int> antidominant_with_v(const RootSystem& rs, const Weight& lambda);
// λ_{I,+} together with v̄_I(λ)
std::pair<Weight, int> dominant_with_vbar(const RootSystem& rs, const Weight& lambda, Subset I);

}  // namespace pjp
