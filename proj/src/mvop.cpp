#include "pjp/mvop.hpp"

#include <mutex>
#include <sstream>

#include "pjp/error.hpp"
#include "pjp/parabolic.hpp"

namespace pjp {

// --- ChiPolynomial ---------------------------------------------------------

ChiPolynomial ChiPolynomial::constant(int nvars, const Rational& c) {
  ChiPolynomial p(nvars);
  p.add_term(std::vector<int>(nvars, 0), c);
  return p;
}

ChiPolynomial ChiPolynomial::variable(int nvars, int i) {
  ChiPolynomial p(nvars);
  std::vector<int> e(nvars, 0);
  e.at(i) = 1;
  p.add_term(e, 1);
  return p;
}

int ChiPolynomial::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int a : e) s += a;
    d = std::max(d, s);
  }
  return d;
}

void ChiPolynomial::add_term(const std::vector<int>& e, const Rational& c) {
  if (static_cast<int>(e.size()) != n_) throw Error(ErrorCode::InvalidInput, "exponent length differs from the number of variables");
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ChiPolynomial ChiPolynomial::operator+(const ChiPolynomial& o) const {
  ChiPolynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

ChiPolynomial ChiPolynomial::operator-(const ChiPolynomial& o) const { return *this + o * Rational(-1); }

ChiPolynomial ChiPolynomial::operator*(const ChiPolynomial& o) const {
  ChiPolynomial r(n_);
  for (const auto& [a, c] : terms_)
    for (const auto& [b, d] : o.terms_) {
      std::vector<int> e(n_);
      for (int i = 0; i < n_; ++i) e[i] = a[i] + b[i];
      r.add_term(e, c * d);
    }
  return r;
}

ChiPolynomial ChiPolynomial::operator*(const Rational& c) const {
  ChiPolynomial r(n_);
  for (const auto& [e, d] : terms_) r.add_term(e, c * d);
  return r;
}

namespace {

class ChiPowers {
 public:
  explicit ChiPowers(const RootSystemPtr& rs) : rs_(rs), chi_(fundamental_invariants(rs)) {}
  LaurentPoly monomial(const std::vector<int>& a) {
    LaurentPoly p = LaurentPoly::constant(rs_, 1);
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] > 0) p = p * power(i, a[i]);
    return p;
  }

 private:
  const LaurentPoly& power(size_t i, int e) {
    auto [it, fresh] = cache_.try_emplace({i, e});
    if (fresh) it->second = chi_[i].pow(e);
    return it->second;
  }
  RootSystemPtr rs_;
  std::vector<LaurentPoly> chi_;
  std::map<std::pair<size_t, int>, LaurentPoly> cache_;
};

}  // namespace

LaurentPoly ChiPolynomial::substitute(const RootSystemPtr& rs) const {
  if (rs->rank() != n_) throw Error(ErrorCode::MismatchedRootSystem, "χ-polynomial rank differs from the root system");
  ChiPowers pw(rs);
  PolyAccumulator acc(rs);
  for (const auto& [e, c] : terms_) acc.add(pw.monomial(e), c);
  return acc.finish();
}

std::string ChiPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    bool unit = true;
    for (int a_i : e) unit = unit && a_i == 0;
    std::string mono;
    for (int i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (unit)
      os << a.get_str();
    else if (a == 1)
      os << mono;
    else
      os << a.get_str() << "*" << mono;
  }
  return os.str();
}

std::vector<LaurentPoly> fundamental_invariants(const RootSystemPtr& rs) {
  std::vector<LaurentPoly> chi;
  Subset S = Subset::full(rs->rank());
  for (int i = 0; i < rs->rank(); ++i) chi.push_back(orbit_sum(rs, S, rs->fundamental_weight(i)));
  return chi;
}

ChiPolynomial to_chi(const LaurentPoly& f) {
  const auto& rsp = f.root_system();
  const int n = rsp->rank();
  Subset S = Subset::full(n);
  if (!is_invariant(f, S)) throw Error(ErrorCode::NotWInvariant, "to_chi needs a W-invariant Laurent polynomial");
  ChiPowers pw(rsp);
  ChiPolynomial out(n);
  LaurentPoly g = f;
  while (!g.is_zero()) {
    const Term* best = nullptr;
    Rational best_h;
    for (const auto& t : g.terms()) {
      if (!is_dominant(*rsp, t.first, S)) continue;
      Rational h = rsp->height(t.first);
      if (!best || h > best_h || (h == best_h && best->first < t.first)) best = &t, best_h = h;
    }
    if (!best) throw Error(ErrorCode::InternalInconsistency, "W-invariant remainder without dominant exponent");
    if (!best->first.is_integral())
      throw Error(ErrorCode::InvalidInput, "to_chi needs integral exponents, got " + best->first.to_string());
    std::vector<int> a = best->first.num();
    Rational c = best->second;
    out.add_term(a, c);
    g -= pw.monomial(a) * c;
  }
  return out;
}

// --- Steinberg matrix ------------------------------------------------------

VectorPoly SteinbergMatrix::column(size_t v) const {
  VectorPoly c{rs, I, {}};
  for (size_t u = 0; u < size(); ++u) c.components.push_back(entries[u][v]);
  return c;
}

namespace {

int reflection_index(const RootSystem& rs, int r) {
  const auto& W = rs.weyl();
  const Weight& alpha = rs.positive_roots()[r].weight;
  for (int w = 0; w < W.size(); ++w) {
    bool ok = true;
    for (int j = 0; j < rs.rank() && ok; ++j) {
      Weight fw = rs.fundamental_weight(j);
      ok = W.act(w, fw) == fw - alpha * (rs.twice_pairing(fw, r) / 2);
    }
    if (ok) return w;
  }
  throw Error(ErrorCode::InternalInconsistency, "reflection not found in W");
}

}  // namespace

int pair_count(const RootSystem& rs, Subset I, int r) {
  const auto& W = rs.weyl();
  int s = reflection_index(rs, r);
  int moved = 0;
  for (int u : W.min_coset_reps(I))
    if (W.coset_decompose(W.mul(s, u), I).first != u) ++moved;
  return moved / 2;
}

LaurentPoly bareiss_det(std::vector<std::vector<LaurentPoly>> m, const RootSystemPtr& rs) {
  const size_t n = m.size();
  if (n == 0) return LaurentPoly::constant(rs, 1);
  int sign = 1;
  LaurentPoly prev = LaurentPoly::constant(rs, 1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return LaurentPoly(rs);
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  return m[n - 1][n - 1] * Rational(sign);
}

namespace {

struct SteinbergData {
  SteinbergMatrix matrix;
  std::vector<std::vector<LaurentPoly>> adjugate;  // adjugate[v][u]
};

SteinbergMatrix build_matrix(const RootSystemPtr& rs, Subset I) {
  SteinbergMatrix s;
  s.rs = rs;
  s.I = I;
  s.reps = rs->weyl().min_coset_reps(I);
  auto gens = steinberg_generators(rs, I);
  const size_t m = gens.size();
  s.entries.assign(m, std::vector<LaurentPoly>(m, LaurentPoly(rs)));
  for (size_t v = 0; v < m; ++v) {
    auto col = gamma(gens[v].phi, I);
    for (size_t u = 0; u < m; ++u) s.entries[u][v] = col[u];
  }
  s.det = bareiss_det(s.entries, rs);
  s.product = LaurentPoly::constant(rs, 1);
  for (int r = 0; r < rs->num_positive_roots(); ++r) {
    Weight h = rs->positive_roots()[r].weight.half();
    LaurentPoly f = LaurentPoly::monomial(rs, h) - LaurentPoly::monomial(rs, -h);
    s.product = s.product * f.pow(pair_count(*rs, I, r));
  }
  if (s.det == s.product)
    s.sign = 1;
  else if (s.det == -s.product)
    s.sign = -1;
  else
    throw Error(ErrorCode::InternalInconsistency, "det Φ_I differs from the product formula");
  return s;
}

const SteinbergData& steinberg_data(const RootSystemPtr& rs, Subset I) {
  static std::mutex mu;
  static std::map<std::tuple<char, int, std::string, unsigned>, std::unique_ptr<SteinbergData>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_tuple(rs->family(), rs->rank(), rs->scale().get_str(), I.bits());
  auto& slot = cache[key];
  if (!slot) {
    auto d = std::make_unique<SteinbergData>();
    d->matrix = build_matrix(rs, I);
    const auto& e = d->matrix.entries;
    const size_t m = e.size();
    d->adjugate.assign(m, std::vector<LaurentPoly>(m, LaurentPoly(rs)));
    for (size_t u = 0; u < m; ++u)
      for (size_t v = 0; v < m; ++v) {
        std::vector<std::vector<LaurentPoly>> minor;
        for (size_t a = 0; a < m; ++a) {
          if (a == u) continue;
          std::vector<LaurentPoly> row;
          for (size_t b = 0; b < m; ++b)
            if (b != v) row.push_back(e[a][b]);
          minor.push_back(std::move(row));
        }
        LaurentPoly c = bareiss_det(std::move(minor), rs);
        d->adjugate[v][u] = (u + v) % 2 ? -c : c;
      }
    slot = std::move(d);
  }
  return *slot;
}

}  // namespace

SteinbergMatrix steinberg_matrix(const RootSystemPtr& rs, Subset I) { return steinberg_data(rs, I).matrix; }

std::vector<LaurentPoly> steinberg_coords(const VectorPoly& v) {
  if (!is_w_invariant(v)) throw Error(ErrorCode::NotInvariant, "Steinberg coordinates need a W-invariant vector polynomial");
  const auto& d = steinberg_data(v.rs, v.I);
  const size_t m = d.matrix.size();
  Subset S = Subset::full(v.rs->rank());
  std::vector<LaurentPoly> out;
  for (size_t a = 0; a < m; ++a) {
    PolyAccumulator acc(v.rs);
    for (size_t u = 0; u < m; ++u) acc.add_product(d.adjugate[a][u], v[u]);
    LaurentPoly f;
    try {
      f = exact_div(acc.finish(), d.matrix.det);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotDivisible) throw;
      throw Error(ErrorCode::NotDivisible, "Steinberg coordinate " + std::to_string(a) + " is not a Laurent polynomial");
    }
    if (!is_invariant(f, S)) throw Error(ErrorCode::InternalInconsistency, "Steinberg coordinate is not W-invariant");
    out.push_back(std::move(f));
  }
  return out;
}

VectorPoly pull_back(const std::vector<ChiPolynomial>& q, const RootSystemPtr& rs, Subset I) {
  const auto& s = steinberg_data(rs, I).matrix;
  if (q.size() != s.size()) throw Error(ErrorCode::InvalidInput, "χ-vector length differs from |W^I|");
  VectorPoly out = zero_vector(rs, I);
  for (size_t v = 0; v < q.size(); ++v) out = out + s.column(v) * q[v].substitute(rs);
  return out;
}

std::vector<ChiPolynomial> script_p(const RootSystemPtr& rs, Subset I, const Weight& lambda, const Multiplicity& k) {
  std::vector<ChiPolynomial> out;
  for (const auto& f : steinberg_coords(big_p(rs, I, lambda, k))) out.push_back(to_chi(f));
  return out;
}

ChiMatrix weight_matrix(const RootSystemPtr& rs, Subset I) {
  const auto& s = steinberg_data(rs, I).matrix;
  const size_t m = s.size();
  ChiMatrix w(m, std::vector<ChiPolynomial>(m));
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b) {
      PolyAccumulator acc(rs);
      for (size_t u = 0; u < m; ++u) acc.add_product(star(s.entries[u][a]), s.entries[u][b]);
      w[a][b] = to_chi(acc.finish());
    }
  return w;
}

std::vector<Weight> mvop_labels(const RootSystem& rs, Subset I, const Weight& sigma) {
  std::vector<Weight> out;
  for (int v : rs.weyl().min_coset_reps(I)) out.push_back(f_I(rs, I, v, sigma));
  return out;
}

ChiMatrix mvop_matrix(const RootSystemPtr& rs, Subset I, const Weight& sigma, const Multiplicity& k) {
  auto labels = mvop_labels(*rs, I, sigma);
  const size_t m = labels.size();
  ChiMatrix out(m, std::vector<ChiPolynomial>(m));
  for (size_t v = 0; v < m; ++v) {
    auto col = script_p(rs, I, labels[v], k);
    for (size_t u = 0; u < m; ++u) out[u][v] = std::move(col[u]);
  }
  return out;
}

std::vector<ChiPolynomial> column(const ChiMatrix& m, size_t j) {
  std::vector<ChiPolynomial> c;
  for (const auto& row : m) c.push_back(row.at(j));
  return c;
}

}  // namespace pjp
