#include "pjp/laurent.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pjp/error.hpp"

namespace pjp {

LaurentPoly::LaurentPoly(RootSystemPtr rs, std::vector<Term> terms) : rs_(std::move(rs)), terms_(std::move(terms)) {
  normalize();
}

LaurentPoly LaurentPoly::monomial(RootSystemPtr rs, const Weight& lambda, const Rational& c) {
  LaurentPoly f(std::move(rs));
  if (c != 0) f.terms_.emplace_back(lambda, c);
  return f;
}

LaurentPoly LaurentPoly::constant(RootSystemPtr rs, const Rational& c) {
  int n = rs->rank();
  return monomial(std::move(rs), Weight(n), c);
}

void LaurentPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const Term& t) { return t.second == 0; });
  terms_ = std::move(out);
}

void LaurentPoly::check_same(const LaurentPoly& o) const {
  if (rs_ == o.rs_) return;
  if (!rs_ || !o.rs_) throw Error(ErrorCode::MismatchedRootSystem, "polynomial without root system");
  require_same(*rs_, *o.rs_);
}

Rational LaurentPoly::coeff(const Weight& lambda) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), lambda,
                             [](const Term& t, const Weight& w) { return t.first < w; });
  if (it != terms_.end() && it->first == lambda) return it->second;
  return 0;
}

Rational LaurentPoly::constant_term() const { return coeff(Weight(rs_->rank())); }

namespace {

template <typename Op>
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, Op op) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, op(Rational(0), b[j].second));
      ++j;
    } else {
      Rational c = op(a[i].second, b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  check_same(o);
  LaurentPoly r(rs_);
  r.terms_ = merge(terms_, o.terms_, [](const Rational& x, const Rational& y) { return Rational(x + y); });
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  check_same(o);
  LaurentPoly r(rs_);
  r.terms_ = merge(terms_, o.terms_, [](const Rational& x, const Rational& y) { return Rational(x - y); });
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_same(o);
  if (terms_.empty() || o.terms_.empty()) return LaurentPoly(rs_);
  if (o.terms_.size() == 1) return shifted(o.terms_[0].first) * o.terms_[0].second;
  if (terms_.size() == 1) return o.shifted(terms_[0].first) * terms_[0].second;
  PolyAccumulator acc(rs_);
  acc.add_product(*this, o);
  return acc.finish();
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const {
  if (c == 0) return LaurentPoly(rs_);
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) { return *this = *this + o; }
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this = *this - o; }
LaurentPoly& LaurentPoly::operator*=(const Rational& c) { return *this = *this * c; }

LaurentPoly LaurentPoly::shifted(const Weight& lambda) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.first += lambda;
  return r;  // translation preserves the order
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) throw Error(ErrorCode::InvalidInput, "negative power of a Laurent polynomial");
  LaurentPoly result = constant(rs_, 1), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (rs_ && o.rs_ && !rs_->same_as(*o.rs_)) return false;
  return terms_ == o.terms_;
}

LaurentPoly LaurentPoly::map_exponents(const std::function<Weight(const Weight&)>& f) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [w, c] : terms_) out.emplace_back(f(w), c);
  return LaurentPoly(rs_, std::move(out));
}

void PolyAccumulator::add(const Weight& lambda, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = map_.try_emplace(lambda, c);
  if (!inserted) it->second += c;
}

void PolyAccumulator::add(const LaurentPoly& f, const Rational& c) {
  if (c == 0) return;
  for (const auto& [w, a] : f.terms()) add(w, a * c);
}

void PolyAccumulator::add_product(const LaurentPoly& f, const LaurentPoly& g) {
  map_.reserve(map_.size() + f.size() * g.size());
  Rational tmp;
  for (const auto& [x, a] : f.terms())
    for (const auto& [y, b] : g.terms()) {
      tmp = a * b;
      add(x + y, tmp);
    }
}

LaurentPoly PolyAccumulator::finish() const {
  std::vector<Term> terms;
  terms.reserve(map_.size());
  for (const auto& [w, c] : map_)
    if (c != 0) terms.emplace_back(w, c);
  return LaurentPoly(rs_, std::move(terms));
}

LaurentPoly weyl_act(int w, const LaurentPoly& f) {
  if (w == 0) return f;
  const auto& W = f.rs().weyl();
  return f.map_exponents([&](const Weight& x) { return W.act(w, x); });
}

LaurentPoly star(const LaurentPoly& f) {
  return f.map_exponents([](const Weight& x) { return -x; });
}

Rational constant_term(const LaurentPoly& f) { return f.constant_term(); }

LaurentPoly derivative(const LaurentPoly& f, const RVec& xi) {
  std::vector<Term> out;
  for (const auto& [w, c] : f.terms()) {
    Rational v = f.rs().eval(w, xi);
    if (v != 0) out.emplace_back(w, c * v);
  }
  return LaurentPoly(f.root_system(), std::move(out));
}

LaurentPoly derivative(const LaurentPoly& f, const std::vector<int>& a) {
  const auto& rs = f.rs();
  if (static_cast<int>(a.size()) != rs.rank()) throw Error(ErrorCode::InvalidInput, "derivative multi-index has wrong length");
  if (std::all_of(a.begin(), a.end(), [](int x) { return x == 0; })) return f;
  std::vector<Term> out;
  for (const auto& [w, c] : f.terms()) {
    Rational v = c;
    for (int j = 0; j < rs.rank() && v != 0; ++j)
      for (int p = 0; p < a[j]; ++p) v *= rs.scale() * ratio(w.twice(j), 2);
    if (v != 0) out.emplace_back(w, v);
  }
  return LaurentPoly(f.root_system(), std::move(out));
}

bool is_invariant(const LaurentPoly& f, Subset I) {
  const auto& W = f.rs().weyl();
  for (int i = 0; i < f.rs().rank(); ++i)
    if (I.contains(i) && !(weyl_act(W.simple(i), f) == f)) return false;
  return true;
}

namespace {

void require_integral(const Multiplicity& k) {
  if (!k.is_integral()) throw Error(ErrorCode::NonIntegerMultiplicity, "inner product needs integer k, got " + k.to_string());
}

}  // namespace

LaurentPoly delta_k(const RootSystemPtr& rs, const Multiplicity& k) {
  require_integral(k);
  LaurentPoly d = LaurentPoly::constant(rs, 1);
  for (int r = 0; r < rs->num_positive_roots(); ++r) {
    const Weight& a = rs->positive_roots()[r].weight;
    LaurentPoly f(rs, {{Weight(rs->rank()), Rational(2)}, {a, Rational(-1)}, {-a, Rational(-1)}});
    d = d * f.pow(static_cast<int>(k.of_root(*rs, r).get_num().get_si()));
  }
  return d;
}

LaurentPoly delta_k_literal(const RootSystemPtr& rs, const Multiplicity& k) {
  require_integral(k);
  LaurentPoly d = LaurentPoly::constant(rs, 1);
  for (int r = 0; r < rs->num_positive_roots(); ++r) {
    int e = static_cast<int>(k.of_root(*rs, r).get_num().get_si());
    for (int sign : {1, -1}) {
      Weight h = (rs->positive_roots()[r].weight * sign).half();
      LaurentPoly f(rs, {{h, Rational(1)}, {-h, Rational(-1)}});
      d = d * f.pow(e);
    }
  }
  return d;
}

InnerProduct::InnerProduct(RootSystemPtr rs, const Multiplicity& k) : delta_(delta_k(rs, k)) {
  lookup_.reserve(delta_.size());
  for (const auto& [w, c] : delta_.terms()) lookup_.emplace(w, c);
}

Rational InnerProduct::monomial(const Weight& x, const Weight& y) const {
  auto it = lookup_.find(y - x);
  return it == lookup_.end() ? Rational(0) : it->second;
}

Rational InnerProduct::operator()(const LaurentPoly& f, const LaurentPoly& g) const {
  // CT(star(f) g δ) = Σ f_x g_y δ_{x−y}; δ is symmetric under negation
  Rational s = 0;
  for (const auto& [x, a] : f.terms())
    for (const auto& [y, b] : g.terms()) {
      auto it = lookup_.find(y - x);
      if (it != lookup_.end()) s += a * b * it->second;
    }
  return s;
}

Rational inner_k(const LaurentPoly& f, const LaurentPoly& g, const Multiplicity& k) {
  return InnerProduct(f.root_system(), k)(f, g);
}

std::vector<Weight> orbit(const RootSystem& rs, Subset I, const Weight& lambda) {
  const auto& W = rs.weyl();
  std::set<Weight> seen{lambda};
  std::vector<Weight> frontier{lambda};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& mu : frontier)
      for (int i = 0; i < rs.rank(); ++i) {
        if (!I.contains(i)) continue;
        Weight nu = W.act(W.simple(i), mu);
        if (seen.insert(nu).second) next.push_back(nu);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

LaurentPoly orbit_sum(const RootSystemPtr& rs, Subset I, const Weight& lambda) {
  if (!is_dominant(*rs, lambda, I))
    throw Error(ErrorCode::NotIDominant, "m_I needs an I-dominant weight, got " + lambda.to_string());
  std::vector<Term> terms;
  for (const auto& mu : orbit(*rs, I, lambda)) terms.emplace_back(mu, Rational(1));
  return LaurentPoly(rs, std::move(terms));
}

LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw Error(ErrorCode::NotDivisible, "division by zero polynomial");
  if (f.is_zero()) return LaurentPoly(f.root_system());
  const auto& rs = f.rs();
  const int n = rs.rank();
  if (g.size() == 1) {
    const auto& [w, c] = g.terms()[0];
    return f.shifted(-w) * Rational(1 / c);
  }
  // the quotient's support lies in the coordinate box spanned by f and g
  std::vector<int> lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    int fmin = INT32_MAX, fmax = INT32_MIN, gmin = INT32_MAX, gmax = INT32_MIN;
    for (const auto& t : f.terms()) fmin = std::min(fmin, t.first.twice(i)), fmax = std::max(fmax, t.first.twice(i));
    for (const auto& t : g.terms()) gmin = std::min(gmin, t.first.twice(i)), gmax = std::max(gmax, t.first.twice(i));
    lo[i] = fmin - gmin;
    hi[i] = fmax - gmax;
    if (lo[i] > hi[i]) throw Error(ErrorCode::NotDivisible, "Newton box of the divisor does not fit");
  }
  std::map<Weight, Rational> rem(f.terms().begin(), f.terms().end());
  const auto& [gw, gc] = g.lex_leading();
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto it = std::prev(rem.end());
    Weight qw = it->first - gw;
    Rational qc = it->second / gc;
    for (int i = 0; i < n; ++i)
      if (qw.twice(i) < lo[i] || qw.twice(i) > hi[i]) throw Error(ErrorCode::NotDivisible, "no Laurent quotient exists");
    for (const auto& [w, c] : g.terms()) {
      Weight x = w + qw;
      auto [jt, inserted] = rem.try_emplace(x, -qc * c);
      if (!inserted) {
        jt->second -= qc * c;
        if (jt->second == 0) rem.erase(jt);
      }
    }
    quotient.emplace_back(qw, std::move(qc));
  }
  return LaurentPoly(f.root_system(), std::move(quotient));
}

}  // namespace pjp
