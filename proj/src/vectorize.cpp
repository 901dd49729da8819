#include "pjp/vectorize.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "pjp/error.hpp"

namespace pjp {

// --- VectorPoly ------------------------------------------------------------

namespace {

void check_compatible(const VectorPoly& a, const VectorPoly& b) {
  require_same(*a.rs, *b.rs);
  if (a.I != b.I || a.size() != b.size())
    throw Error(ErrorCode::InvalidInput, "vector polynomials over different coset spaces");
}

}  // namespace

VectorPoly VectorPoly::operator+(const VectorPoly& o) const {
  check_compatible(*this, o);
  VectorPoly r = *this;
  for (size_t i = 0; i < size(); ++i) r.components[i] += o.components[i];
  return r;
}

VectorPoly VectorPoly::operator-(const VectorPoly& o) const {
  check_compatible(*this, o);
  VectorPoly r = *this;
  for (size_t i = 0; i < size(); ++i) r.components[i] -= o.components[i];
  return r;
}

VectorPoly VectorPoly::operator*(const Rational& c) const {
  VectorPoly r = *this;
  for (auto& f : r.components) f *= c;
  return r;
}

VectorPoly VectorPoly::operator*(const LaurentPoly& f) const {
  VectorPoly r = *this;
  for (auto& g : r.components) g = g * f;
  return r;
}

bool VectorPoly::operator==(const VectorPoly& o) const {
  return rs->same_as(*o.rs) && I == o.I && components == o.components;
}

VectorPoly zero_vector(const RootSystemPtr& rs, Subset I) {
  size_t m = rs->weyl().min_coset_reps(I).size();
  return VectorPoly{rs, I, std::vector<LaurentPoly>(m, LaurentPoly(rs))};
}

VectorPoly gamma(const LaurentPoly& phi, Subset I) {
  if (!is_invariant(phi, I)) throw Error(ErrorCode::NotInvariant, "Γ needs a W_I-invariant polynomial");
  VectorPoly v{phi.root_system(), I, {}};
  for (int u : phi.rs().weyl().min_coset_reps(I)) v.components.push_back(weyl_act(u, phi));
  return v;
}

bool is_w_invariant(const VectorPoly& v) {
  const auto& W = v.rs->weyl();
  auto reps = W.min_coset_reps(v.I);
  if (reps.size() != v.size()) return false;
  std::vector<int> pos(W.size(), -1);
  for (size_t a = 0; a < reps.size(); ++a) pos[reps[a]] = static_cast<int>(a);
  // s_i maps the component at uW_I to the one at s_i u W_I
  for (int i = 0; i < v.rs->rank(); ++i) {
    int s = W.simple(i);
    for (size_t a = 0; a < reps.size(); ++a) {
      int b = pos[W.coset_decompose(W.mul(s, reps[a]), v.I).first];
      if (weyl_act(s, v.components[a]) != v.components[b]) return false;
    }
  }
  return is_invariant(v.components[0], v.I);
}

LaurentPoly gamma_inverse(const VectorPoly& v) {
  if (!is_w_invariant(v)) throw Error(ErrorCode::NotInvariant, "Γ^{-1} needs a W-invariant vector polynomial");
  return v.components[0];
}

Rational vec_inner(const VectorPoly& a, const VectorPoly& b, const InnerProduct& ip) {
  check_compatible(a, b);
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += ip(a[i], b[i]);
  if (is_w_invariant(a) && is_w_invariant(b)) {
    Rational expect = ip(a[0], b[0]) * static_cast<long>(a.size());
    if (s != expect) throw Error(ErrorCode::InternalInconsistency, "Γ is not an isometry up to |W^I|");
  }
  return s;
}

Rational vec_inner(const VectorPoly& a, const VectorPoly& b, const Multiplicity& k) {
  return vec_inner(a, b, InnerProduct(a.rs, k));
}

VectorPoly big_p(const RootSystemPtr& rs, Subset I, const Weight& lambda, const Multiplicity& k) {
  return gamma(jacobi_sym(rs, I, lambda, k).poly, I);
}

VectorPoly induced_apply(const HPoly& q, const Multiplicity& k, const VectorPoly& v) {
  return gamma(invariant_operator_apply(q, v.I, k, gamma_inverse(v)), v.I);
}

// --- RatFunc ---------------------------------------------------------------

namespace {

bool poly_less(const LaurentPoly& a, const LaurentPoly& b) {
  return std::lexicographical_compare(a.terms().begin(), a.terms().end(), b.terms().begin(), b.terms().end());
}

}  // namespace

void RatFunc::divide_by(const LaurentPoly& f, int mult) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidInput, "zero denominator");
  const auto [w, c] = f.terms().front();
  for (int e = 0; e < mult; ++e) num_ = num_.shifted(-w) * Rational(1 / c);
  if (f.size() == 1) return;
  LaurentPoly g = f.shifted(-w) * Rational(1 / c);
  auto it = std::lower_bound(den_.begin(), den_.end(), g, [](const Factor& x, const LaurentPoly& y) { return poly_less(x.first, y); });
  if (it != den_.end() && it->first == g)
    it->second += mult;
  else
    den_.insert(it, {std::move(g), mult});
}

RatFunc RatFunc::fraction(LaurentPoly num, const std::vector<LaurentPoly>& den_factors) {
  RatFunc r(std::move(num));
  for (const auto& f : den_factors) r.divide_by(f, 1);
  return r;
}

LaurentPoly RatFunc::den() const {
  LaurentPoly d = LaurentPoly::constant(num_.root_system(), 1);
  for (const auto& [g, m] : den_) d = d * g.pow(m);
  return d;
}

RatFunc RatFunc::sum(const std::vector<RatFunc>& parts, const RootSystemPtr& rs) {
  std::vector<Factor> lcm;
  for (const auto& p : parts)
    for (const auto& [g, m] : p.den_) {
      auto it = std::lower_bound(lcm.begin(), lcm.end(), g, [](const Factor& x, const LaurentPoly& y) { return poly_less(x.first, y); });
      if (it != lcm.end() && it->first == g)
        it->second = std::max(it->second, m);
      else
        lcm.insert(it, {g, m});
    }
  std::map<std::pair<size_t, int>, LaurentPoly> powers;
  auto power = [&](size_t idx, int e) -> const LaurentPoly& {
    auto [it, fresh] = powers.try_emplace({idx, e});
    if (fresh) it->second = lcm[idx].first.pow(e);
    return it->second;
  };
  PolyAccumulator acc(rs);
  for (const auto& p : parts) {
    if (p.is_zero()) continue;
    LaurentPoly t = p.num_;
    size_t a = 0;
    for (size_t idx = 0; idx < lcm.size(); ++idx) {
      int have = 0;
      if (a < p.den_.size() && p.den_[a].first == lcm[idx].first) have = p.den_[a++].second;
      if (lcm[idx].second > have) t = t * power(idx, lcm[idx].second - have);
    }
    acc.add(t);
  }
  RatFunc r(acc.finish());
  if (!r.is_zero()) r.den_ = std::move(lcm);
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const { return sum({*this, o}, num_.root_system()); }
RatFunc RatFunc::operator-(const RatFunc& o) const { return sum({*this, -o}, num_.root_system()); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  RatFunc r(num_ * o.num_);
  r.den_ = den_;
  for (const auto& [g, m] : o.den_) r.divide_by(g, m);
  return r;
}

RatFunc RatFunc::operator*(const Rational& c) const {
  RatFunc r = *this;
  r.num_ *= c;
  return r;
}

RatFunc RatFunc::operator*(const LaurentPoly& f) const {
  RatFunc r = *this;
  r.num_ = r.num_ * f;
  return r;
}

RatFunc RatFunc::shifted(const Weight& w) const {
  RatFunc r = *this;
  r.num_ = r.num_.shifted(w);
  return r;
}

bool RatFunc::operator==(const RatFunc& o) const { return (*this - o).is_zero(); }

LaurentPoly RatFunc::to_poly() const {
  if (den_.empty()) return num_;
  return exact_div(num_, den());
}

// --- MatrixRatOp -----------------------------------------------------------

MatrixRatOp MatrixRatOp::identity(const RootSystemPtr& rs, int size, const Rational& c) {
  MatrixRatOp m(rs, size);
  for (int i = 0; i < size; ++i) m.add(i, i, RatFunc(LaurentPoly::constant(rs, c)));
  return m;
}

void MatrixRatOp::add(int i, int j, const RatFunc& c, std::vector<int> deriv) {
  if (i < 0 || j < 0 || i >= size_ || j >= size_) throw Error(ErrorCode::InvalidInput, "operator entry out of range");
  if (static_cast<int>(deriv.size()) != rs_->rank()) throw Error(ErrorCode::InvalidInput, "derivative multi-index has wrong length");
  if (std::any_of(deriv.begin(), deriv.end(), [](int a) { return a < 0; }))
    throw Error(ErrorCode::InvalidInput, "negative derivative order");
  if (c.is_zero()) return;
  terms_.push_back({i, j, c, std::move(deriv)});
}

void MatrixRatOp::add(int i, int j, const RatFunc& c, const HPoly& q) {
  for (const auto& [e, coef] : q.terms()) add(i, j, c * coef, e);
}

MatrixRatOp MatrixRatOp::operator+(const MatrixRatOp& o) const {
  require_same(*rs_, *o.rs_);
  if (size_ != o.size_) throw Error(ErrorCode::InvalidInput, "operator sizes differ");
  MatrixRatOp r = *this;
  r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
  return r;
}

MatrixRatOp MatrixRatOp::operator*(const Rational& c) const {
  MatrixRatOp r(rs_, size_);
  for (const auto& t : terms_) r.add(t.i, t.j, t.coeff * c, t.deriv);
  return r;
}

MatrixRatOp MatrixRatOp::operator-(const MatrixRatOp& o) const { return *this + o * Rational(-1); }

int MatrixRatOp::order() const {
  int o = 0;
  for (const auto& t : terms_) {
    int s = 0;
    for (int a : t.deriv) s += a;
    o = std::max(o, s);
  }
  return o;
}

bool MatrixRatOp::operator==(const MatrixRatOp& o) const {
  if (!rs_->same_as(*o.rs_) || size_ != o.size_) return false;
  using Key = std::tuple<int, int, std::vector<int>>;
  std::map<Key, std::vector<RatFunc>> groups;
  for (const auto& t : terms_) groups[{t.i, t.j, t.deriv}].push_back(t.coeff);
  for (const auto& t : o.terms_) groups[{t.i, t.j, t.deriv}].push_back(-t.coeff);
  return std::all_of(groups.begin(), groups.end(), [&](const auto& g) { return RatFunc::sum(g.second, rs_).is_zero(); });
}

MatrixRatOp MatrixRatOp::conjugate_diag(const std::vector<Weight>& tau) const {
  if (static_cast<int>(tau.size()) != size_) throw Error(ErrorCode::InvalidInput, "diagonal has wrong size");
  const int n = rs_->rank();
  MatrixRatOp r(rs_, size_);
  for (const auto& t : terms_) {
    // ∂^a e^{τ_j} = e^{τ_j} Σ_{b≤a} C(a,b) τ_j^{a−b} ∂^b
    RVec tj(n);
    for (int l = 0; l < n; ++l) {
      RVec unit(n, 0);
      unit[l] = 1;
      tj[l] = rs_->eval(tau[t.j], unit);
    }
    RatFunc base = t.coeff.shifted(tau[t.j] - tau[t.i]);
    std::vector<int> b(n, 0);
    for (;;) {
      Rational f = 1;
      for (int l = 0; l < n; ++l) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), t.deriv[l], b[l]);
        Rational p = 1;
        for (int e = 0; e < t.deriv[l] - b[l]; ++e) p *= tj[l];
        f *= Rational(binom) * p;
      }
      if (f != 0) r.add(t.i, t.j, base * f, b);
      int l = 0;
      while (l < n && ++b[l] > t.deriv[l]) b[l++] = 0;
      if (l == n) break;
    }
  }
  return r;
}

std::vector<RatFunc> MatrixRatOp::apply_rational(const VectorPoly& v) const {
  require_same(*rs_, *v.rs);
  if (static_cast<int>(v.size()) != size_) throw Error(ErrorCode::InvalidInput, "vector length does not match the operator");
  std::map<std::pair<int, std::vector<int>>, LaurentPoly> derivs;
  auto derivative_of = [&](int j, const std::vector<int>& a) -> const LaurentPoly& {
    auto [it, fresh] = derivs.try_emplace({j, a});
    if (fresh) it->second = derivative(v[j], a);
    return it->second;
  };
  std::vector<std::vector<RatFunc>> rows(size_);
  for (const auto& t : terms_) {
    const LaurentPoly& d = derivative_of(t.j, t.deriv);
    if (!d.is_zero()) rows[t.i].push_back(t.coeff * d);
  }
  std::vector<RatFunc> out;
  out.reserve(size_);
  for (const auto& parts : rows) out.push_back(RatFunc::sum(parts, rs_));
  return out;
}

VectorPoly MatrixRatOp::apply(const VectorPoly& v) const {
  auto rows = apply_rational(v);
  VectorPoly r{v.rs, v.I, {}};
  for (size_t i = 0; i < rows.size(); ++i) {
    try {
      r.components.push_back(rows[i].to_poly());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotDivisible) throw;
      throw Error(ErrorCode::NotDivisible, "row " + std::to_string(i + 1) + " is not a Laurent polynomial");
    }
  }
  return r;
}

VectorPoly matrix_op_apply(const MatrixRatOp& m, const VectorPoly& v) { return m.apply(v); }

EqualityReport operators_equal_on(const MatrixRatOp& a, const MatrixRatOp& b, const std::vector<VectorPoly>& tests) {
  for (size_t n = 0; n < tests.size(); ++n) {
    try {
      VectorPoly ra = a.apply(tests[n]);
      VectorPoly rb = b.apply(tests[n]);
      for (size_t i = 0; i < ra.size(); ++i)
        if (ra[i] != rb[i])
          return {false, "test vector " + std::to_string(n) + ", row " + std::to_string(i + 1) + ": outputs differ"};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotDivisible) throw;
      return {false, "test vector " + std::to_string(n) + ": " + e.detail()};
    }
  }
  return {};
}

// --- the A2 operators ------------------------------------------------------

RootSystemPtr a2_spherical() { return build_root_system("A2", Rational(2)); }

Weight sigma_root(int i, int j) {
  auto rs = a2_spherical();
  if (i == 1 && j == 2) return rs->simple_root(0).half();
  if (i == 2 && j == 3) return rs->simple_root(1).half();
  if (i == 1 && j == 3) return (rs->simple_root(0) + rs->simple_root(1)).half();
  throw Error(ErrorCode::InvalidInput, "Σ root index must be 12, 23 or 13");
}

namespace {

LaurentPoly mono(const Weight& w, const Rational& c = Rational(1)) { return LaurentPoly::monomial(a2_spherical(), w, c); }
LaurentPoly cnst(const Rational& c) { return LaurentPoly::constant(a2_spherical(), c); }

LaurentPoly sh(const Weight& a) { return mono(a) - mono(-a); }
LaurentPoly ch(const Weight& a) { return mono(a) + mono(-a); }
RatFunc coth(const Weight& a) { return RatFunc::fraction(ch(a), sh(a)); }
RatFunc inv_sh(const Weight& a) { return RatFunc::fraction(cnst(1), sh(a)); }
RatFunc inv_sh2(const Weight& a) { return RatFunc::fraction(cnst(1), {sh(a), sh(a)}); }
// c / (1 − e^{β})
RatFunc over_one_minus(const Rational& c, const Weight& beta, int power = 1) {
  LaurentPoly d = cnst(1) - mono(beta);
  return RatFunc::fraction(cnst(c), std::vector<LaurentPoly>(power, d));
}

HPoly b_direction(const Weight& alpha) {
  // e_i − e_j as a vector of 𝔥 in the ξ-basis: simple-root coordinates of α
  auto rs = a2_spherical();
  return HPoly::linear(rs->simple_coords(alpha * 2));
}

HPoly e2() {
  HPoly x1 = a2_xi(1), x2 = a2_xi(2), x3 = a2_xi(3);
  return x1 * x2 + x1 * x3 + x2 * x3;
}

// ∂-part shared by the second order operators: Σ∂ξi∂ξj − k Σ coth(α) ∂_{α'}
void add_second_order_scalar(MatrixRatOp& m, const Rational& k) {
  const Weight roots[3] = {sigma_root(1, 2), sigma_root(1, 3), sigma_root(2, 3)};
  for (int i = 0; i < 3; ++i) {
    m.add(i, i, RatFunc(cnst(1)), e2());
    for (const auto& a : roots) m.add(i, i, coth(a) * Rational(-k), b_direction(a));
  }
}

}  // namespace

OperatorPair a2_example_ops(const Rational& k, Transcription t) {
  auto rs = a2_spherical();
  const Weight a12 = sigma_root(1, 2), a23 = sigma_root(2, 3), a13 = sigma_root(1, 3);
  MatrixRatOp m1(rs, 3);
  for (int i = 0; i < 3; ++i) m1.add(i, i, RatFunc(cnst(1)), a2_xi(i + 1));
  m1.add(0, 0, (coth(a12) + coth(a13)) * k);
  m1.add(0, 1, over_one_minus(-2 * k, a12 * -2));
  m1.add(0, 2, over_one_minus(-2 * k, a13 * -2));
  m1.add(1, 0, over_one_minus(-2 * k, a12 * 2));
  m1.add(1, 1, (coth(a23) - coth(a12)) * k);
  m1.add(1, 2, over_one_minus(-2 * k, a23 * -2));
  m1.add(2, 0, over_one_minus(-2 * k, a13 * 2));
  m1.add(2, 1, over_one_minus(-2 * k, a23 * 2));
  m1.add(2, 2, (coth(a13) + coth(a23)) * Rational(-k));

  MatrixRatOp m2(rs, 3);
  add_second_order_scalar(m2, k);
  const Rational c = 4 * k;
  for (int i = 0; i < 3; ++i) m2.add(i, i, RatFunc(cnst(-4 * k * k)));
  m2.add(0, 0, (inv_sh2(a12) + inv_sh2(a13)) * c);
  m2.add(1, 1, (inv_sh2(a12) + inv_sh2(a23)) * c);
  m2.add(2, 2, (inv_sh2(a13) + inv_sh2(a23)) * c);
  struct Off {
    int i, j;
    Weight a;
  };
  // upper entries carry e^{−2α}, lower ones e^{2α}
  const Off off[] = {{0, 1, a12}, {0, 2, a13}, {1, 2, a23}, {1, 0, -a12}, {2, 0, -a13}, {2, 1, -a23}};
  for (const auto& [i, j, a] : off) {
    if (t == Transcription::Printed)
      m2.add(i, j, over_one_minus(-c, a * -2, 2));
    else
      m2.add(i, j, inv_sh2(a) * Rational(-c));
  }
  return {std::move(m1), std::move(m2)};
}

OperatorPair shimeno_ops(const Rational& k, Transcription t) {
  auto rs = a2_spherical();
  // α1 = α12, α2 = α23, α3 = α13
  const Weight al1 = sigma_root(1, 2), al2 = sigma_root(2, 3), al3 = sigma_root(1, 3);
  const bool printed = t == Transcription::Printed;
  MatrixRatOp d1(rs, 3);
  for (int i = 0; i < 3; ++i) d1.add(i, i, RatFunc(cnst(1)), a2_xi(i + 1));
  d1.add(0, 0, (coth(al1) + coth(al3)) * k);
  d1.add(0, 1, inv_sh(al1) * Rational(-2 * k));
  d1.add(0, 2, inv_sh(al3) * Rational(-2 * k));
  d1.add(1, 0, inv_sh(al1) * Rational(2 * k));
  d1.add(1, 1, (coth(printed ? al3 : al2) - coth(al1)) * k);
  d1.add(1, 2, inv_sh(al2) * Rational(-2 * k));
  d1.add(2, 0, inv_sh(al3) * Rational(2 * k));
  d1.add(2, 1, inv_sh(al2) * Rational(2 * k));
  d1.add(2, 2, (coth(al3) + coth(al2)) * Rational(-k));

  MatrixRatOp d2(rs, 3);
  add_second_order_scalar(d2, k);
  const Rational c = 2 * k;
  auto cosh_sh2 = [&](const Weight& a) { return RatFunc::fraction(ch(a), {sh(a), sh(a)}); };
  d2.add(0, 0, (inv_sh2(al1) + inv_sh2(al3)) * (2 * c));
  d2.add(1, 1, (inv_sh2(al1) + inv_sh2(printed ? al3 : al2)) * (2 * c));
  d2.add(2, 2, (inv_sh2(al3) + inv_sh2(al2)) * (2 * c));
  d2.add(0, 1, cosh_sh2(al1) * Rational(-c));
  d2.add(0, 2, cosh_sh2(al3) * Rational(-c));
  d2.add(1, 0, cosh_sh2(al1) * Rational(-c));
  if (printed)
    d2.add(1, 2, RatFunc::fraction(sh(al2), {sh(al2), sh(al2)}) * Rational(-c));
  else
    d2.add(1, 2, cosh_sh2(al2) * Rational(-c));
  d2.add(2, 0, cosh_sh2(al3) * Rational(-c));
  d2.add(2, 1, cosh_sh2(al2) * Rational(-c));
  return {std::move(d1), std::move(d2)};
}

std::vector<Weight> t_exponents() {
  auto rs = a2_spherical();
  // ω_i = ϖ_i(Σ) = ½ϖ_i(R)
  Weight w1 = rs->fundamental_weight(0).half(), w2 = rs->fundamental_weight(1).half();
  return {w1, w2 - w1, -w2};
}

MatrixRatOp t_matrix() {
  auto rs = a2_spherical();
  auto tau = t_exponents();
  MatrixRatOp t(rs, 3);
  for (int i = 0; i < 3; ++i) t.add(i, i, RatFunc(mono(tau[i])));
  return t;
}

bool check_identity_coth(const Weight& alpha) {
  return over_one_minus(2, alpha * -2) - RatFunc(cnst(1)) == coth(alpha);
}

bool check_identity_sh2(const Weight& alpha) {
  RatFunc lhs = over_one_minus(-4, alpha * -2, 2).shifted(-alpha);
  RatFunc rhs = RatFunc::fraction(ch(alpha) * Rational(-2), {sh(alpha), sh(alpha)}) + inv_sh(alpha) * Rational(-2);
  return lhs == rhs;
}

PsiVectors psi_vectors() {
  Subset I = a2_spherical_I();
  auto tau = t_exponents();
  const Weight a23 = sigma_root(2, 3);
  return {gamma(mono(tau[0]), I), gamma((mono(a23) + mono(-a23)) * ratio(1, 2), I), gamma(mono(-tau[0]), I)};
}

PsiVectors psi_vectors_printed() {
  auto rs = a2_spherical();
  Subset I = a2_spherical_I();
  Weight w1 = rs->fundamental_weight(0).half(), w2 = rs->fundamental_weight(1).half();
  const Weight al1 = sigma_root(1, 2), al2 = sigma_root(2, 3), al3 = sigma_root(1, 3);
  auto half_ch = [&](const Weight& a) { return ch(a) * ratio(1, 2); };
  return {VectorPoly{rs, I, {mono(w1), mono(w2 - w1), mono(-w2)}},
          VectorPoly{rs, I, {half_ch(al2), half_ch(al3), half_ch(al1)}},
          VectorPoly{rs, I, {mono(-w1), mono(w1 - w2), mono(w2)}}};
}

PsiVectors t_images_printed() {
  auto rs = a2_spherical();
  Subset I = a2_spherical_I();
  Weight w1 = rs->fundamental_weight(0).half(), w2 = rs->fundamental_weight(1).half();
  auto m = [&](const Weight& a) { return mono(a * 2); };
  Rational h = ratio(1, 2);
  return {VectorPoly{rs, I, {m(w1), m(w2 - w1), m(-w2)}},
          VectorPoly{rs, I, {(m(w1 - w2) + m(w2)) * h, (m(-w1) + m(w2)) * h, (m(-w1) + m(w1 - w2)) * h}},
          VectorPoly{rs, I, {cnst(1), cnst(1), cnst(1)}}};
}

std::vector<VectorPoly> invariant_test_set(const RootSystemPtr& rs, Subset I, int bound) {
  const int n = rs->rank();
  std::vector<VectorPoly> out;
  std::vector<int> c(n, -bound);
  for (;;) {
    Weight mu = Weight::from_coords(c);
    if (is_dominant(*rs, mu, I)) out.push_back(gamma(orbit_sum(rs, I, mu), I));
    int i = 0;
    while (i < n && ++c[i] > bound) c[i++] = -bound;
    if (i == n) break;
  }
  return out;
}

}  // namespace pjp
