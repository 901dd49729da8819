#include "pjp/parabolic.hpp"

#include <algorithm>
#include <tuple>

#include "pjp/error.hpp"

namespace pjp {

namespace {

Weight descent_weight(const RootSystem& rs, int w) {
  const auto& W = rs.weyl();
  Weight lam(rs.rank());
  int winv = W.inverse(w);
  for (int i = 0; i < rs.rank(); ++i)
    if (W.sends_to_negative(winv, rs.simple_root_index(i))) lam += rs.fundamental_weight(i);
  return lam;
}

void require_min_rep(const RootSystem& rs, Subset I, int v) {
  if (!rs.weyl().is_min_coset_rep(v, I))
    throw Error(ErrorCode::InvalidInput, rs.weyl().element(v).to_string() + " is not a minimal coset representative");
}

}  // namespace

Weight steinberg_weight(const RootSystem& rs, int v) { return descent_weight(rs, v); }

std::vector<SteinbergDatum> steinberg_generators(const RootSystemPtr& rs, Subset I) {
  const auto& W = rs->weyl();
  std::vector<SteinbergDatum> out;
  for (int v : W.min_coset_reps(I)) {
    SteinbergDatum d;
    d.v = v;
    d.lambda_v = steinberg_weight(*rs, v);
    d.label = W.act(W.inverse(v), d.lambda_v);
    d.phi = orbit_sum(rs, I, d.label);
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<SteinbergRow> steinberg_table(const RootSystem& rs, const std::vector<Subset>& subsets) {
  const auto& W = rs.weyl();
  std::vector<SteinbergRow> rows;
  for (int v = 0; v < W.size(); ++v) {
    SteinbergRow r;
    r.v = v;
    r.lambda_v = steinberg_weight(rs, v);
    r.label = W.act(W.inverse(v), r.lambda_v);
    for (Subset I : subsets) r.member.push_back(W.is_min_coset_rep(v, I));
    rows.push_back(std::move(r));
  }
  return rows;
}

Weight f_I(const RootSystem& rs, Subset I, int v, const Weight& sigma) {
  require_min_rep(rs, I, v);
  if (!is_dominant(rs, sigma, Subset::full(rs.rank())))
    throw Error(ErrorCode::InvalidInput, "f_I needs a dominant σ, got " + sigma.to_string());
  const auto& W = rs.weyl();
  return W.act(W.inverse(v), steinberg_weight(rs, v) + sigma);
}

std::pair<int, Weight> f_I_inverse(const RootSystem& rs, Subset I, const Weight& mu) {
  if (!is_dominant(rs, mu, I)) throw Error(ErrorCode::NotIDominant, "f_I inverse needs μ ∈ P_I⁺, got " + mu.to_string());
  const auto& W = rs.weyl();
  int v = W.inverse(dominant_with_vbar(rs, mu).second);
  Weight sigma = W.act(v, mu) - steinberg_weight(rs, v);
  return {v, sigma};
}

std::vector<AltSteinbergDatum> alt_steinberg(const RootSystemPtr& rs, Subset I) {
  const auto& W = rs->weyl();
  int w0I = W.longest(I);
  std::vector<AltSteinbergDatum> out;
  for (int w : W.min_coset_reps(I)) {
    AltSteinbergDatum d;
    d.w = w;
    d.mu_w = -descent_weight(*rs, w);
    d.label = W.act(W.mul(w0I, W.inverse(w)), d.mu_w);
    d.generator = orbit_sum(rs, I, d.label);
    out.push_back(std::move(d));
  }
  return out;
}

int alt_cover_index(const RootSystem& rs, Subset I, const Weight& lambda) {
  const auto& W = rs.weyl();
  int w0I = W.longest(I);
  for (int w : W.min_coset_reps(I)) {
    Weight x = W.act(W.mul(w, w0I), lambda) + descent_weight(rs, w);  // w w₀^I λ − μ_w
    bool anti = true;
    for (int i = 0; i < rs.rank(); ++i) anti = anti && x.twice(i) <= 0;
    if (anti) return w;
  }
  return -1;
}

bool leq(const RootSystem& rs, Subset I, const Weight& lambda, const Weight& mu, Order mode) {
  if (mode == Order::Dominance) return rs.dominance_leq(lambda, mu);
  if (mode == Order::I && (!is_dominant(rs, lambda, I) || !is_dominant(rs, mu, I)))
    throw Error(ErrorCode::NotIDominant, "≤_I compares elements of P_I⁺ only");
  auto [lp, lv] = dominant_with_vbar(rs, lambda);
  auto [mp, mv] = dominant_with_vbar(rs, mu);
  if (lp == mp) return rs.weyl().bruhat_leq(lv, mv);
  return rs.dominance_leq(lp, mp);
}

std::vector<Weight> dominant_below(const RootSystem& rs, const Weight& lambda_plus) {
  const int n = rs.rank();
  RVec sc = rs.simple_coords(lambda_plus);
  std::vector<int> bound(n);
  for (int i = 0; i < n; ++i) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), sc[i].get_num_mpz_t(), sc[i].get_den_mpz_t());
    bound[i] = static_cast<int>(f.get_si());
  }
  std::vector<Weight> out;
  if (std::any_of(bound.begin(), bound.end(), [](int b) { return b < 0; })) {
    out.push_back(lambda_plus);
    return out;
  }
  std::vector<int> m(n, 0);
  for (;;) {
    Weight nu = lambda_plus;
    for (int i = 0; i < n; ++i) nu -= rs.simple_root(i) * m[i];
    if (is_dominant(rs, nu, Subset::full(n))) out.push_back(nu);
    int i = 0;
    while (i < n && ++m[i] > bound[i]) m[i++] = 0;
    if (i == n) break;
  }
  std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
    Rational ha = rs.height(a), hb = rs.height(b);
    return ha != hb ? ha < hb : a < b;
  });
  return out;
}

std::vector<Weight> lower_ideal(const RootSystem& rs, Subset I, const Weight& lambda) {
  if (!is_dominant(rs, lambda, I)) throw Error(ErrorCode::NotIDominant, "lower ideal needs λ ∈ P_I⁺, got " + lambda.to_string());
  const auto& W = rs.weyl();
  auto [lp, lv] = dominant_with_vbar(rs, lambda);
  struct Entry {
    Rational height;
    int len;
    Weight mu;
  };
  std::vector<Entry> entries;
  for (const auto& nu : dominant_below(rs, lp)) {
    Rational h = rs.height(nu);
    for (const auto& mu : orbit(rs, Subset::full(rs.rank()), nu)) {
      if (!is_dominant(rs, mu, I)) continue;
      int mv = dominant_with_vbar(rs, mu).second;
      if (nu == lp && !W.bruhat_leq(mv, lv)) continue;
      entries.push_back({h, W.length(mv), mu});
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.height, a.len, a.mu) < std::tie(b.height, b.len, b.mu);
  });
  std::vector<Weight> out;
  out.reserve(entries.size());
  for (auto& e : entries) out.push_back(e.mu);
  return out;
}

}  // namespace pjp
