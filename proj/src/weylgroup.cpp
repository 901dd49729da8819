#include "pjp/weylgroup.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_map>

#include "pjp/error.hpp"

namespace pjp {

ActionMatrix ActionMatrix::operator*(const ActionMatrix& o) const {
  ActionMatrix r;
  r.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int s = 0;
      for (int k = 0; k < n; ++k) s += (*this)(i, k) * o(k, j);
      r(i, j) = s;
    }
  return r;
}

ActionMatrix ActionMatrix::identity(int n) {
  ActionMatrix r;
  r.n = n;
  for (int i = 0; i < n; ++i) r(i, i) = 1;
  return r;
}

std::string WeylElt::to_string() const {
  if (word_.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < word_.size(); ++i) {
    if (i) s += "*";
    s += "s" + std::to_string(word_[i] + 1);
  }
  return s;
}

namespace {

Weight apply(const ActionMatrix& m, const Weight& lambda) {
  std::vector<int> twice(m.n, 0);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) twice[i] += m(i, j) * lambda.twice(j);
  return Weight::from_num_den(twice, 2);
}

}  // namespace

WeylGroup::WeylGroup(const RootSystem& rs) : rank_(rs.rank()), num_pos_(rs.num_positive_roots()) {
  const int n = rank_;
  const auto& cartan = rs.cartan();
  std::vector<ActionMatrix> gens(n);
  for (int i = 0; i < n; ++i) {
    ActionMatrix s = ActionMatrix::identity(n);
    for (int k = 0; k < n; ++k) s(k, i) -= cartan[k][i];
    gens[i] = s;
  }

  // Breadth-first by length; the lexicographically least reduced word of w s_i
  // is the least of (word(w), i) over all right descents.
  std::map<ActionMatrix, std::vector<int>> words;
  std::vector<ActionMatrix> level{ActionMatrix::identity(n)};
  words[level[0]] = {};
  while (!level.empty()) {
    std::map<ActionMatrix, std::vector<int>> next;
    for (const auto& m : level) {
      const auto& w = words[m];
      for (int i = 0; i < n; ++i) {
        ActionMatrix mi = m * gens[i];
        if (words.count(mi)) continue;
        auto cand = w;
        cand.push_back(i);
        auto it = next.find(mi);
        if (it == next.end() || cand < it->second) next[mi] = cand;
      }
    }
    level.clear();
    for (auto& [m, w] : next) {
      words[m] = w;
      level.push_back(m);
    }
  }
  std::vector<std::pair<std::vector<int>, ActionMatrix>> sorted;
  for (auto& [m, w] : words) sorted.emplace_back(w, m);
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  for (size_t idx = 0; idx < sorted.size(); ++idx) {
    elements_.emplace_back(static_cast<int>(idx), sorted[idx].first, sorted[idx].second);
    lookup_[sorted[idx].second] = static_cast<int>(idx);
  }
  const int N = size();
  simple_.resize(n);
  for (int i = 0; i < n; ++i) simple_[i] = lookup_.at(gens[i]);
  mul_.resize(static_cast<size_t>(N) * N);
  for (int u = 0; u < N; ++u)
    for (int v = 0; v < N; ++v) mul_[u * N + v] = lookup_.at(elements_[u].matrix() * elements_[v].matrix());
  inv_.resize(N);
  for (int u = 0; u < N; ++u)
    for (int v = 0; v < N; ++v)
      if (mul_[u * N + v] == 0) inv_[u] = v;
  longest_ = N - 1;

  std::unordered_map<Weight, int, WeightHash> signed_root;
  for (int r = 0; r < num_pos_; ++r) {
    signed_root[rs.positive_roots()[r].weight] = r;
    signed_root[-rs.positive_roots()[r].weight] = r + num_pos_;
  }
  root_perm_.assign(N, std::vector<int>(2 * num_pos_));
  for (int w = 0; w < N; ++w)
    for (int r = 0; r < 2 * num_pos_; ++r) {
      Weight a = r < num_pos_ ? rs.positive_roots()[r].weight : -rs.positive_roots()[r - num_pos_].weight;
      root_perm_[w][r] = signed_root.at(apply(elements_[w].matrix(), a));
    }

  bruhat_.assign(static_cast<size_t>(N) * N, 0);
  for (int v = 0; v < N; ++v) {
    if (v == 0) {
      bruhat_[0] = 1;
      continue;
    }
    int s = simple_[elements_[v].word().back()];
    int vs = mul(v, s);
    for (int u = 0; u < N; ++u) {
      int us = mul(u, s);
      bruhat_[u * N + v] = length(us) < length(u) ? bruhat_[us * N + vs] : bruhat_[u * N + vs];
    }
  }
}

int WeylGroup::from_word(const std::vector<int>& word) const {
  int w = 0;
  for (int i : word) {
    if (i < 0 || i >= rank_) throw Error(ErrorCode::InvalidInput, "simple reflection index out of range");
    w = mul(w, simple_[i]);
  }
  return w;
}

int WeylGroup::parse(const std::string& text) const {
  if (text == "e") return 0;
  std::vector<int> word;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, '*')) {
    if (tok.size() < 2 || tok[0] != 's') throw Error(ErrorCode::InvalidInput, "malformed Weyl word '" + text + "'");
    int i = 0;
    try {
      i = std::stoi(tok.substr(1));
    } catch (...) {
      throw Error(ErrorCode::InvalidInput, "malformed Weyl word '" + text + "'");
    }
    word.push_back(i - 1);
  }
  return from_word(word);
}

Weight WeylGroup::act(int w, const Weight& lambda) const {
  if (lambda.rank() != rank_) throw Error(ErrorCode::MismatchedRootSystem, "weight rank differs from Weyl group");
  return apply(elements_[w].matrix(), lambda);
}

RVec WeylGroup::act(int w, const RVec& lambda) const {
  const auto& m = elements_[w].matrix();
  RVec out(rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (m(i, j) != 0) out[i] += m(i, j) * lambda[j];
  return out;
}

RVec WeylGroup::act_h(int w, const RVec& xi) const {
  // contragredient: coordinates transform by the transpose of w^{-1}
  const auto& m = elements_[inv_[w]].matrix();
  RVec out(rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (m(j, i) != 0) out[i] += m(j, i) * xi[j];
  return out;
}

std::vector<int> WeylGroup::inversion_set(int w) const {
  std::vector<int> out;
  for (int r = 0; r < num_pos_; ++r)
    if (sends_to_negative(w, r)) out.push_back(r);
  return out;
}

bool WeylGroup::in_parabolic(int w, Subset I) const {
  for (int i : elements_[w].word())
    if (!I.contains(i)) return false;
  return true;
}

std::vector<int> WeylGroup::parabolic(Subset I) const {
  std::vector<int> out;
  for (int w = 0; w < size(); ++w)
    if (in_parabolic(w, I)) out.push_back(w);
  return out;
}

bool WeylGroup::is_min_coset_rep(int w, Subset I) const {
  for (int i = 0; i < rank_; ++i)
    if (I.contains(i) && length(mul(w, simple_[i])) < length(w)) return false;
  return true;
}

std::vector<int> WeylGroup::min_coset_reps(Subset I) const {
  std::vector<int> out;
  for (int w = 0; w < size(); ++w)
    if (is_min_coset_rep(w, I)) out.push_back(w);
  return out;
}

std::pair<int, int> WeylGroup::coset_decompose(int w, Subset I) const {
  for (int wp : parabolic(I)) {
    int wpp = mul(w, inv_[wp]);
    if (is_min_coset_rep(wpp, I)) return {wpp, wp};
  }
  throw Error(ErrorCode::InternalInconsistency, "coset without minimal representative");
}

int WeylGroup::longest(Subset I) const {
  int best = 0;
  for (int w : parabolic(I))
    if (length(w) > length(best)) best = w;
  return best;
}

std::vector<WeylElt> enumerate(const RootSystem& rs, Subset I) {
  std::vector<WeylElt> out;
  for (int w : rs.weyl().parabolic(I)) out.push_back(rs.weyl().element(w));
  return out;
}

std::vector<WeylElt> min_coset_reps(const RootSystem& rs, Subset I) {
  std::vector<WeylElt> out;
  for (int w : rs.weyl().min_coset_reps(I)) out.push_back(rs.weyl().element(w));
  return out;
}

Weight act(const RootSystem& rs, const WeylElt& w, const Weight& lambda) { return rs.weyl().act(w.index(), lambda); }

bool bruhat_leq_subword(const RootSystem& rs, int u, int v) {
  const auto& W = rs.weyl();
  // all reduced words of v
  std::set<std::vector<int>> reduced;
  std::function<void(int, std::vector<int>&)> collect = [&](int w, std::vector<int>& suffix) {
    if (w == 0) {
      reduced.insert(std::vector<int>(suffix.rbegin(), suffix.rend()));
      return;
    }
    for (int i = 0; i < W.rank(); ++i) {
      int ws = W.mul(w, W.simple(i));
      if (W.length(ws) < W.length(w)) {
        suffix.push_back(i);
        collect(ws, suffix);
        suffix.pop_back();
      }
    }
  };
  std::vector<int> buf;
  collect(v, buf);
  int lu = W.length(u);
  for (const auto& word : reduced) {
    int L = static_cast<int>(word.size());
    for (unsigned mask = 0; mask < (1u << L); ++mask) {
      if (__builtin_popcount(mask) != lu) continue;
      std::vector<int> sub;
      for (int b = 0; b < L; ++b)
        if (mask & (1u << b)) sub.push_back(word[b]);
      if (W.from_word(sub) == u) return true;
    }
  }
  return false;
}

std::pair<Weight, int> dominant_with_vbar(const RootSystem& rs, const Weight& lambda, Subset I) {
  const auto& W = rs.weyl();
  Weight mu = lambda;
  int w = 0;
  for (;;) {
    int i = 0;
    while (i < rs.rank() && !(I.contains(i) && mu.twice(i) < 0)) ++i;
    if (i == rs.rank()) break;
    mu = W.act(W.simple(i), mu);
    w = W.mul(w, W.simple(i));
  }
  return {mu, w};
}

std::pair<Weight, int> dominant_with_vbar(const RootSystem& rs, const Weight& lambda) {
  return dominant_with_vbar(rs, lambda, Subset::full(rs.rank()));
}

std::pair<Weight, int> antidominant_with_v(const RootSystem& rs, const Weight& lambda) {
  const auto& W = rs.weyl();
  Weight mu = lambda;
  int u = 0;
  for (;;) {
    int i = 0;
    while (i < rs.rank() && mu.twice(i) <= 0) ++i;
    if (i == rs.rank()) break;
    mu = W.act(W.simple(i), mu);
    u = W.mul(W.simple(i), u);
  }
  return {mu, u};
}

CanonicalElements canonical_elements(const RootSystem& rs, Subset I, const Weight& lambda) {
  const auto& W = rs.weyl();
  CanonicalElements c;
  std::tie(c.lambda_plus, c.vbar) = dominant_with_vbar(rs, lambda);
  std::tie(c.lambda_I_plus, c.vbar_I) = dominant_with_vbar(rs, lambda, I);
  c.v = antidominant_with_v(rs, lambda).second;
  for (int w : W.parabolic(I))
    if (W.act(w, lambda) == lambda) c.stab_I.push_back(w);
  // shortest element of each coset w W_{I,λ}
  std::vector<bool> covered(W.size(), false);
  for (int w : W.parabolic(I)) {
    if (covered[w]) continue;
    int best = -1;
    for (int s : c.stab_I) {
      int ws = W.mul(w, s);
      covered[ws] = true;
      if (best < 0 || W.length(ws) < W.length(best)) best = ws;
    }
    c.stab_I_reps.push_back(best);
  }
  std::sort(c.stab_I_reps.begin(), c.stab_I_reps.end());
  c.w0_I = W.longest(I);
  c.w0_I_lambda = c.stab_I.front();
  for (int s : c.stab_I)
    if (W.length(s) > W.length(c.w0_I_lambda)) c.w0_I_lambda = s;
  return c;
}

}  // namespace pjp
