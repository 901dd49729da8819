#include "pjp/cherednik.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "pjp/error.hpp"
#include "pjp/linsolve.hpp"
#include "pjp/parabolic.hpp"

namespace pjp {

// ---- HPoly ----

HPoly HPoly::constant(int nvars, const Rational& c) {
  HPoly q(nvars);
  q.add_term(std::vector<int>(nvars, 0), c);
  return q;
}

HPoly HPoly::linear(const RVec& xi) {
  const int n = static_cast<int>(xi.size());
  HPoly q(n);
  for (int j = 0; j < n; ++j) {
    std::vector<int> e(n, 0);
    e[j] = 1;
    q.add_term(e, xi[j]);
  }
  return q;
}

void HPoly::add_term(const std::vector<int>& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int HPoly::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

HPoly HPoly::operator+(const HPoly& o) const {
  HPoly r = *this;
  r.n_ = std::max(n_, o.n_);
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

HPoly HPoly::operator-(const HPoly& o) const { return *this + o * Rational(-1); }

HPoly HPoly::operator*(const HPoly& o) const {
  HPoly r(std::max(n_, o.n_));
  for (const auto& [a, x] : terms_)
    for (const auto& [b, y] : o.terms_) {
      std::vector<int> e(a.size());
      for (size_t i = 0; i < a.size(); ++i) e[i] = a[i] + b[i];
      r.add_term(e, x * y);
    }
  return r;
}

HPoly HPoly::operator*(const Rational& c) const {
  HPoly r(n_);
  if (c == 0) return r;
  for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
  return r;
}

Rational HPoly::eval(const RVec& values) const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (size_t j = 0; j < e.size(); ++j)
      for (int p = 0; p < e[j]; ++p) t *= values[j];
    s += t;
  }
  return s;
}

Rational HPoly::at(const RootSystem& rs, const RVec& lambda) const {
  RVec values(rs.rank());
  for (int j = 0; j < rs.rank(); ++j) values[j] = rs.scale() * lambda[j];
  return eval(values);
}

HPoly HPoly::act(const RootSystem& rs, int w) const {
  const int n = rs.rank();
  const auto& W = rs.weyl();
  std::vector<HPoly> images;
  for (int j = 0; j < n; ++j) {
    RVec e(n);
    e[j] = 1;
    images.push_back(linear(W.act_h(w, e)));
  }
  HPoly r(n);
  for (const auto& [e, c] : terms_) {
    HPoly t = constant(n, c);
    for (int j = 0; j < n; ++j)
      for (int p = 0; p < e[j]; ++p) t = t * images[j];
    r = r + t;
  }
  return r;
}

bool HPoly::is_invariant(const RootSystem& rs, Subset I) const {
  for (int i = 0; i < rs.rank(); ++i)
    if (I.contains(i) && !(act(rs, rs.weyl().simple(i)) == *this)) return false;
  return true;
}

std::string HPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << pjp::to_string(c);
    for (size_t j = 0; j < e.size(); ++j)
      if (e[j]) os << "*b" << j + 1 << (e[j] > 1 ? "^" + std::to_string(e[j]) : "");
  }
  return os.str();
}

// ---- operators ----

namespace {

int pairing_int(const RootSystem& rs, const Weight& mu, int r) {
  int t = rs.twice_pairing(mu, r);
  if (t % 2 != 0)
    throw Error(ErrorCode::InvalidInput, "reflection operator on a half-integral pairing at " + mu.to_string());
  return t / 2;
}

// Δ_α e^μ, term by term
template <typename Sink>
void divided_difference_monomial(const RootSystem& rs, int r, const Weight& mu, const Rational& c, Sink&& sink) {
  const Weight& a = rs.positive_roots()[r].weight;
  int m = pairing_int(rs, mu, r);
  if (m > 0) {
    Weight x = mu;
    for (int j = 0; j < m; ++j, x -= a) sink(x, c);
  } else if (m < 0) {
    Weight x = mu;
    Rational neg = -c;
    for (int j = 1; j <= -m; ++j) {
      x += a;
      sink(x, neg);
    }
  }
}

struct OperatorData {
  RVec root_coeff;  // k_α α(ξ)
  Rational rho_xi;
};

OperatorData operator_data(const RootSystem& rs, const RVec& xi, const Multiplicity& k) {
  OperatorData d;
  for (int r = 0; r < rs.num_positive_roots(); ++r) d.root_coeff.push_back(k.of_root(rs, r) * rs.root_eval(r, xi));
  d.rho_xi = rs.eval(rho(rs, k), xi);
  return d;
}

template <typename Sink>
void cherednik_monomial(const RootSystem& rs, const RVec& xi, const OperatorData& d, const Weight& mu, const Rational& c,
                        Sink&& sink) {
  sink(mu, c * (rs.eval(mu, xi) - d.rho_xi));
  for (int r = 0; r < rs.num_positive_roots(); ++r) {
    if (d.root_coeff[r] == 0) continue;
    Rational rc = c * d.root_coeff[r];
    divided_difference_monomial(rs, r, mu, rc, sink);
  }
}

}  // namespace

LaurentPoly divided_difference(int r, const LaurentPoly& f) {
  PolyAccumulator acc(f.root_system());
  for (const auto& [mu, c] : f.terms())
    divided_difference_monomial(f.rs(), r, mu, c, [&](const Weight& x, const Rational& v) { acc.add(x, v); });
  return acc.finish();
}

LaurentPoly cherednik_apply(const RVec& xi, const Multiplicity& k, const LaurentPoly& f) {
  const auto& rs = f.rs();
  auto d = operator_data(rs, xi, k);
  PolyAccumulator acc(f.root_system());
  for (const auto& [mu, c] : f.terms())
    cherednik_monomial(rs, xi, d, mu, c, [&](const Weight& x, const Rational& v) { acc.add(x, v); });
  return acc.finish();
}

LaurentPoly poly_in_cherednik(const HPoly& q, const Multiplicity& k, const LaurentPoly& f) {
  const int n = f.rs().rank();
  if (q.nvars() != n) throw Error(ErrorCode::InvalidInput, "S(h) element has wrong number of variables");
  std::vector<RVec> basis(n, RVec(n));
  for (int j = 0; j < n; ++j) basis[j][j] = 1;
  // D^e f for each multi-index, memoized along lexicographic prefixes
  std::map<std::vector<int>, LaurentPoly> memo;
  memo.emplace(std::vector<int>(n, 0), f);
  std::function<const LaurentPoly&(const std::vector<int>&)> power = [&](const std::vector<int>& e) -> const LaurentPoly& {
    auto it = memo.find(e);
    if (it != memo.end()) return it->second;
    int j = 0;
    while (e[j] == 0) ++j;
    auto prev = e;
    --prev[j];
    LaurentPoly g = cherednik_apply(basis[j], k, power(prev));
    return memo.emplace(e, std::move(g)).first->second;
  };
  PolyAccumulator acc(f.root_system());
  for (const auto& [e, c] : q.terms()) acc.add(power(e), c);
  return acc.finish();
}

LaurentPoly invariant_operator_apply(const HPoly& q, Subset I, const Multiplicity& k, const LaurentPoly& f) {
  if (!q.is_invariant(f.rs(), I)) throw Error(ErrorCode::NotInvariant, "operator symbol is not W_I-invariant: " + q.to_string());
  if (!is_invariant(f, I)) throw Error(ErrorCode::NotInvariant, "input polynomial is not W_I-invariant");
  LaurentPoly g = poly_in_cherednik(q, k, f);
  if (!is_invariant(g, I)) throw Error(ErrorCode::InternalInconsistency, "D_{I,q} left the W_I-invariants");
  return g;
}

// ---- spectral vectors ----

RVec spectral_definition(const RootSystem& rs, const Weight& lambda, const Multiplicity& k) {
  const auto& W = rs.weyl();
  int v = antidominant_with_v(rs, lambda).second;
  RVec r = W.act(W.inverse(v), rho(rs, k));
  RVec out = lambda.coords();
  for (int i = 0; i < rs.rank(); ++i) out[i] -= r[i];
  return out;
}

RVec spectral_epsilon(const RootSystem& rs, const Weight& lambda, const Multiplicity& k) {
  RVec out = lambda.coords();
  for (int r = 0; r < rs.num_positive_roots(); ++r) {
    int eps = rs.twice_pairing(lambda, r) > 0 ? 1 : -1;
    Rational f = k.of_root(rs, r) * eps / 2;
    const auto& a = rs.positive_roots()[r].weight;
    for (int i = 0; i < rs.rank(); ++i) out[i] += f * a.coord(i);
  }
  return out;
}

RVec spectral_lemma(const RootSystem& rs, Subset I, const Weight& lambda, const Multiplicity& k) {
  if (!is_dominant(rs, lambda, I)) throw Error(ErrorCode::NotIDominant, "w₀-form of λ̃ needs λ ∈ P_I⁺");
  const auto& W = rs.weyl();
  auto ce = canonical_elements(rs, I, lambda);
  int v = antidominant_with_v(rs, W.act(ce.w0_I, lambda)).second;
  RVec r = W.act(W.mul(ce.w0_I, W.inverse(v)), rho(rs, k));
  RVec x = lambda.coords();
  for (int i = 0; i < rs.rank(); ++i) x[i] -= r[i];
  return W.act(ce.w0_I_lambda, x);
}

SpectralVector spectral(const RootSystem& rs, const Weight& lambda, const Multiplicity& k) {
  RVec a = spectral_definition(rs, lambda, k);
  if (a != spectral_epsilon(rs, lambda, k))
    throw Error(ErrorCode::InternalInconsistency, "λ̃ formulas disagree at " + lambda.to_string());
  return {lambda, k, a};
}

SpectralVector spectral(const RootSystem& rs, Subset I, const Weight& lambda, const Multiplicity& k) {
  auto s = spectral(rs, lambda, k);
  if (s.value != spectral_lemma(rs, I, lambda, k))
    throw Error(ErrorCode::InternalInconsistency, "w₀-form of λ̃ disagrees at " + lambda.to_string());
  return s;
}

// ---- E(λ,k) ----

namespace {

std::string vec_string(const RVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

}  // namespace

LaurentPoly e_poly(const RootSystemPtr& rsp, const Weight& lambda, const Multiplicity& k) {
  const auto& rs = *rsp;
  const int n = rs.rank();
  auto ideal = lower_ideal(rs, Subset(), lambda);
  std::unordered_map<Weight, int, WeightHash> index;
  for (size_t i = 0; i < ideal.size(); ++i) index.emplace(ideal[i], static_cast<int>(i));

  RVec lt = spectral(rs, lambda, k).value;
  std::vector<RVec> spec(ideal.size());
  for (size_t i = 0; i + 1 < ideal.size(); ++i) {
    spec[i] = spectral(rs, ideal[i], k).value;
    if (spec[i] == lt)
      throw Error(ErrorCode::SpectralCollision, "λ̃ = μ̃ for λ=" + lambda.to_string() + ", μ=" + ideal[i].to_string() +
                                                    ", value " + vec_string(lt));
  }
  // ξ = Σ t^j b_j separating λ̃ from every lower μ̃
  RVec xi(n);
  for (int t = 1;; ++t) {
    Rational p = 1;
    for (int j = 0; j < n; ++j, p *= t) xi[j] = p;
    bool ok = true;
    Rational lv = rs.eval(lt, xi);
    for (size_t i = 0; i + 1 < ideal.size() && ok; ++i) ok = rs.eval(spec[i], xi) != lv;
    if (ok) break;
  }
  Rational lv = rs.eval(lt, xi);
  auto d = operator_data(rs, xi, k);
  std::vector<Rational> acc(ideal.size()), c(ideal.size());
  for (size_t pos = ideal.size(); pos-- > 0;) {
    const Weight& nu = ideal[pos];
    if (pos + 1 == ideal.size()) {
      c[pos] = 1;
    } else {
      if (acc[pos] == 0) continue;
      // diagonal of D_ξ on e^ν is ν̃(ξ)
      c[pos] = acc[pos] / (lv - rs.eval(spec[pos], xi));
    }
    cherednik_monomial(rs, xi, d, nu, c[pos], [&](const Weight& x, const Rational& v) {
      if (x == nu) return;
      auto it = index.find(x);
      if (it == index.end() || it->second >= static_cast<int>(pos))
        throw Error(ErrorCode::InternalInconsistency,
                    "Cherednik operator escaped the lower ideal of " + lambda.to_string() + " at " + x.to_string());
      acc[it->second] += v;
    });
  }
  std::vector<Term> terms;
  for (size_t i = 0; i < ideal.size(); ++i)
    if (c[i] != 0) terms.emplace_back(ideal[i], c[i]);
  LaurentPoly E(rsp, std::move(terms));
  for (int j = 0; j < n; ++j) {
    RVec b(n);
    b[j] = 1;
    if (!(cherednik_apply(b, k, E) == E * rs.eval(lt, b)))
      throw Error(ErrorCode::InternalInconsistency, "eigen-equation fails for E(" + lambda.to_string() + ")");
  }
  return E;
}

LaurentPoly e_poly_gs(const RootSystemPtr& rs, const Weight& lambda, const Multiplicity& k) {
  InnerProduct ip(rs, k);
  auto ideal = lower_ideal(*rs, Subset(), lambda);
  ideal.pop_back();
  const size_t m = ideal.size();
  RMatrix G(m, RVec(m));
  RVec rhs(m);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) G[i][j] = ip.monomial(ideal[j], ideal[i]);
    rhs[i] = -ip.monomial(lambda, ideal[i]);
  }
  RVec c = solve_exact(G, rhs);
  std::vector<Term> terms{{lambda, Rational(1)}};
  for (size_t i = 0; i < m; ++i) terms.emplace_back(ideal[i], c[i]);
  return LaurentPoly(rs, std::move(terms));
}

}  // namespace pjp
