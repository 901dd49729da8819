#include "pjp/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "pjp/error.hpp"
#include "pjp/weylgroup.hpp"

namespace pjp {

// ---------------------------------------------------------------- Weight

Weight::Weight(int rank) : rank_(rank) {
  if (rank < 1 || rank > kMaxRank) throw Error(ErrorCode::UnsupportedType, "rank out of range");
}

Weight Weight::from_coords(const std::vector<int>& coords) {
  Weight w(static_cast<int>(coords.size()));
  for (size_t i = 0; i < coords.size(); ++i) w.c2_[i] = 2 * coords[i];
  return w;
}

Weight Weight::from_num_den(const std::vector<int>& num, int den) {
  if (den != 1 && den != 2) throw Error(ErrorCode::InvalidInput, "weight denominator must be 1 or 2");
  Weight w(static_cast<int>(num.size()));
  for (size_t i = 0; i < num.size(); ++i) w.c2_[i] = den == 1 ? 2 * num[i] : num[i];
  return w;
}

Weight Weight::unit(int rank, int i) {
  Weight w(rank);
  w.c2_[i] = 2;
  return w;
}

RVec Weight::coords() const {
  RVec out(rank_);
  for (int i = 0; i < rank_; ++i) out[i] = coord(i);
  return out;
}

bool Weight::is_integral() const {
  for (int i = 0; i < rank_; ++i)
    if (c2_[i] % 2 != 0) return false;
  return true;
}

bool Weight::is_zero() const {
  for (int i = 0; i < rank_; ++i)
    if (c2_[i] != 0) return false;
  return true;
}

std::vector<int> Weight::num() const {
  std::vector<int> out(rank_);
  bool integral = is_integral();
  for (int i = 0; i < rank_; ++i) out[i] = integral ? c2_[i] / 2 : c2_[i];
  return out;
}

Weight Weight::operator+(const Weight& o) const {
  Weight r = *this;
  r += o;
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  Weight r = *this;
  r -= o;
  return r;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (int i = 0; i < rank_; ++i) r.c2_[i] = -c2_[i];
  return r;
}

Weight Weight::operator*(int s) const {
  Weight r = *this;
  for (int i = 0; i < rank_; ++i) r.c2_[i] = s * c2_[i];
  return r;
}

Weight& Weight::operator+=(const Weight& o) {
  for (int i = 0; i < rank_; ++i) c2_[i] += o.c2_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (int i = 0; i < rank_; ++i) c2_[i] -= o.c2_[i];
  return *this;
}

Weight Weight::half() const {
  Weight r = *this;
  for (int i = 0; i < rank_; ++i) {
    if (c2_[i] % 2 != 0) throw Error(ErrorCode::InvalidInput, "half of a half-weight leaves ½P");
    r.c2_[i] = c2_[i] / 2;
  }
  return r;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < rank_; ++i) {
    if (i) os << ",";
    if (c2_[i] % 2 == 0)
      os << c2_[i] / 2;
    else
      os << c2_[i] << "/2";
  }
  os << ")";
  return os.str();
}

size_t Weight::hash() const {
  size_t h = static_cast<size_t>(rank_);
  for (int i = 0; i < rank_; ++i) h = h * 1000003u ^ static_cast<size_t>(static_cast<uint32_t>(c2_[i]));
  return h;
}

RVec to_rvec(const Weight& w) { return w.coords(); }

// ---------------------------------------------------------------- Subset

Subset Subset::of(const std::vector<int>& indices) {
  Subset s;
  for (int i : indices) {
    if (i < 0 || i >= kMaxRank) throw Error(ErrorCode::InvalidInput, "simple reflection index out of range");
    s.insert(i);
  }
  return s;
}

Subset Subset::full(int rank) {
  Subset s;
  for (int i = 0; i < rank; ++i) s.insert(i);
  return s;
}

std::vector<int> Subset::indices(int rank) const {
  std::vector<int> out;
  for (int i = 0; i < rank; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------- tables

namespace {

struct Table {
  std::vector<std::vector<int>> cartan;
  RVec sym;
};

Table cartan_table(char family, int n) {
  Table t;
  t.cartan.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) t.cartan[i][i] = 2;
  auto link = [&](int i, int j) { t.cartan[i][j] = t.cartan[j][i] = -1; };
  switch (family) {
    case 'A':
      if (n > 4) break;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      t.sym.assign(n, Rational(1));
      return t;
    case 'B':
      if (n < 2 || n > 3) break;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      t.cartan[n - 2][n - 1] = -1;
      t.cartan[n - 1][n - 2] = -2;
      t.sym.assign(n, Rational(1));
      t.sym[n - 1] = Rational(1, 2);
      return t;
    case 'C':
      if (n < 2 || n > 3) break;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      t.cartan[n - 2][n - 1] = -2;
      t.cartan[n - 1][n - 2] = -1;
      t.sym.assign(n, Rational(1, 2));
      t.sym[n - 1] = Rational(1);
      return t;
    case 'D':
      if (n != 4) break;
      link(0, 1);
      link(1, 2);
      link(1, 3);
      t.sym.assign(n, Rational(1));
      return t;
    case 'G':
      if (n != 2) break;
      t.cartan[0][1] = -3;
      t.cartan[1][0] = -1;
      t.sym = {Rational(1, 3), Rational(1)};
      return t;
    default:
      break;
  }
  throw Error(ErrorCode::UnsupportedType, std::string("unsupported root system ") + family + std::to_string(n));
}

std::vector<std::vector<Rational>> invert(const std::vector<std::vector<int>>& m) {
  int n = static_cast<int>(m.size());
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw Error(ErrorCode::InternalInconsistency, "singular Cartan matrix");
    std::swap(a[p], a[c]);
    Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

}  // namespace

// ---------------------------------------------------------------- RootSystem

RootSystem::RootSystem(char family, int rank, Rational scale)
    : family_(family), rank_(rank), scale_(std::move(scale)) {
  if (scale_ <= 0) throw Error(ErrorCode::InvalidInput, "scale must be positive");
  Table t = cartan_table(family, rank);
  cartan_ = t.cartan;
  Rational c2 = scale_ * scale_;
  sym_.resize(rank);
  for (int i = 0; i < rank; ++i) sym_[i] = t.sym[i] * c2;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (sym_[i] * cartan_[i][j] != sym_[j] * cartan_[j][i])
        throw Error(ErrorCode::InternalInconsistency, "Cartan matrix not symmetrizable by table");
  cartan_inv_ = invert(cartan_);
  fund_gram_.assign(rank, RVec(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) fund_gram_[i][j] = sym_[i] * cartan_inv_[i][j];

  // All roots = W-orbit of the simple roots, tracked in simple coordinates.
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> e(rank, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto m = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank; ++i) {
      int p = 0;
      for (int j = 0; j < rank; ++j) p += m[j] * cartan_[i][j];
      auto r = m;
      r[i] -= p;
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  std::vector<std::vector<int>> pos;
  for (const auto& m : seen)
    if (std::all_of(m.begin(), m.end(), [](int x) { return x >= 0; })) pos.push_back(m);
  std::sort(pos.begin(), pos.end(), [](const auto& a, const auto& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });

  std::vector<Rational> lengths;
  simple_index_.assign(rank, -1);
  for (const auto& m : pos) {
    Root root;
    root.simple = m;
    root.height = std::accumulate(m.begin(), m.end(), 0);
    std::vector<int> fund(rank, 0);
    for (int k = 0; k < rank; ++k)
      for (int j = 0; j < rank; ++j) fund[k] += m[j] * cartan_[k][j];
    root.weight = Weight::from_coords(fund);
    Rational len = 0;  // (α,α)/2
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) len += m[i] * m[j] * sym_[i] * cartan_[i][j];
    len /= 2;
    root.coroot.resize(rank);
    for (int j = 0; j < rank; ++j) {
      Rational c = m[j] * sym_[j] / len;
      if (!is_integer(c)) throw Error(ErrorCode::InternalInconsistency, "non-integral coroot");
      root.coroot[j] = static_cast<int>(c.get_num().get_si());
    }
    auto it = std::find(lengths.begin(), lengths.end(), len);
    if (it == lengths.end()) {
      root.orbit = static_cast<int>(lengths.size());
      lengths.push_back(len);
    } else {
      root.orbit = static_cast<int>(it - lengths.begin());
    }
    if (root.height == 1)
      for (int i = 0; i < rank; ++i)
        if (m[i] == 1) simple_index_[i] = static_cast<int>(roots_.size());
    root_lookup_.emplace(root.weight, static_cast<int>(roots_.size()));
    roots_.push_back(std::move(root));
  }
  num_orbits_ = static_cast<int>(lengths.size());
  weyl_ = std::make_shared<const WeylGroup>(*this);
}

std::string RootSystem::name() const { return std::string(1, family_) + std::to_string(rank_); }

int RootSystem::positive_root_index(const Weight& w) const {
  auto it = root_lookup_.find(w);
  return it == root_lookup_.end() ? -1 : it->second;
}

int RootSystem::twice_pairing(const Weight& lambda, int r) const {
  const auto& c = roots_[r].coroot;
  int s = 0;
  for (int j = 0; j < rank_; ++j) s += c[j] * lambda.twice(j);
  return s;
}

Rational RootSystem::pairing(const Weight& lambda, int r) const {
  if (lambda.rank() != rank_) throw Error(ErrorCode::MismatchedRootSystem, "weight rank differs from root system");
  return ratio(twice_pairing(lambda, r), 2);
}

Rational RootSystem::pairing(const RVec& lambda, int r) const {
  Rational s = 0;
  for (int j = 0; j < rank_; ++j) s += roots_[r].coroot[j] * lambda[j];
  return s;
}

Rational RootSystem::inner(const RVec& a, const RVec& b) const {
  Rational s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += a[i] * fund_gram_[i][j] * b[j];
  return s;
}

Rational RootSystem::inner(const Weight& a, const Weight& b) const { return inner(a.coords(), b.coords()); }

Rational RootSystem::eval(const RVec& lambda, const RVec& xi) const {
  Rational s = 0;
  for (int j = 0; j < rank_; ++j) s += lambda[j] * xi[j];
  return scale_ * s;
}

Rational RootSystem::eval(const Weight& lambda, const RVec& xi) const {
  Rational s = 0;
  for (int j = 0; j < rank_; ++j)
    if (lambda.twice(j) != 0) s += ratio(lambda.twice(j), 2) * xi[j];
  return scale_ * s;
}

Rational RootSystem::root_eval(int r, const RVec& xi) const { return eval(roots_[r].weight, xi); }

RVec RootSystem::simple_coords(const RVec& lambda) const {
  RVec m(rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) m[i] += cartan_inv_[i][j] * lambda[j];
  return m;
}

RVec RootSystem::simple_coords(const Weight& lambda) const { return simple_coords(lambda.coords()); }

Rational RootSystem::height(const Weight& lambda) const {
  Rational h = 0;
  for (const auto& x : simple_coords(lambda)) h += x;
  return h;
}

bool RootSystem::dominance_leq(const Weight& lambda, const Weight& mu) const {
  for (const auto& x : simple_coords(mu - lambda))
    if (!is_integer(x) || x < 0) return false;
  return true;
}

bool RootSystem::in_root_lattice(const Weight& lambda) const {
  for (const auto& x : simple_coords(lambda))
    if (!is_integer(x)) return false;
  return true;
}

RootSystemPtr build_root_system(char family, int rank, const Rational& scale) {
  static std::mutex mu;
  static std::map<std::tuple<char, int, std::string>, RootSystemPtr> cache;
  std::lock_guard lock(mu);
  auto key = std::make_tuple(family, rank, to_string(scale));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto rs = std::make_shared<const RootSystem>(family, rank, scale);
  cache.emplace(key, rs);
  return rs;
}

RootSystemPtr build_root_system(const std::string& name, const Rational& scale) {
  if (name.size() < 2 || name.size() > 3) throw Error(ErrorCode::UnsupportedType, "unsupported root system " + name);
  char family = name[0];
  for (size_t i = 1; i < name.size(); ++i)
    if (name[i] < '0' || name[i] > '9') throw Error(ErrorCode::UnsupportedType, "unsupported root system " + name);
  int rank = std::stoi(name.substr(1));
  if (rank < 1 || rank > kMaxRank) throw Error(ErrorCode::UnsupportedType, "unsupported root system " + name);
  return build_root_system(family, rank, scale);
}

void require_same(const RootSystem& a, const RootSystem& b) {
  if (&a != &b && !a.same_as(b))
    throw Error(ErrorCode::MismatchedRootSystem, a.name() + " vs " + b.name());
}

// ---------------------------------------------------------------- Multiplicity

Multiplicity::Multiplicity(const RootSystem& rs, const RVec& per_orbit) : k_(per_orbit) {
  if (static_cast<int>(k_.size()) == 1 && rs.num_orbits() > 1) k_.assign(rs.num_orbits(), per_orbit[0]);
  if (static_cast<int>(k_.size()) != rs.num_orbits())
    throw Error(ErrorCode::InvalidInput, "expected " + std::to_string(rs.num_orbits()) + " multiplicity values");
  for (const auto& x : k_)
    if (x < 0) throw Error(ErrorCode::InvalidInput, "multiplicity must be nonnegative");
}

Multiplicity Multiplicity::uniform(const RootSystem& rs, const Rational& k) { return Multiplicity(rs, RVec{k}); }

Multiplicity Multiplicity::from_per_root(const RootSystem& rs, const RVec& per_root) {
  if (static_cast<int>(per_root.size()) != rs.num_positive_roots())
    throw Error(ErrorCode::InvalidInput, "one multiplicity per positive root expected");
  RVec per_orbit(rs.num_orbits());
  std::vector<bool> set(rs.num_orbits(), false);
  for (int r = 0; r < rs.num_positive_roots(); ++r) {
    int o = rs.positive_roots()[r].orbit;
    if (!set[o]) {
      per_orbit[o] = per_root[r];
      set[o] = true;
    } else if (per_orbit[o] != per_root[r]) {
      throw Error(ErrorCode::InvalidInput, "multiplicity is not constant on a W-orbit");
    }
  }
  return Multiplicity(rs, per_orbit);
}

bool Multiplicity::is_integral() const {
  return std::all_of(k_.begin(), k_.end(), [](const Rational& x) { return is_integer(x); });
}

std::string Multiplicity::to_string() const {
  std::string s;
  for (size_t i = 0; i < k_.size(); ++i) {
    if (i) s += ",";
    s += pjp::to_string(k_[i]);
  }
  return s;
}

RVec rho(const RootSystem& rs, const Multiplicity& k) {
  RVec out(rs.rank());
  for (int r = 0; r < rs.num_positive_roots(); ++r) {
    const auto& root = rs.positive_roots()[r];
    const Rational& kr = k.of_root(rs, r);
    for (int i = 0; i < rs.rank(); ++i) out[i] += kr * root.weight.twice(i) / 4;
  }
  return out;
}

bool is_dominant(const RootSystem& rs, const Weight& lambda, Subset I) {
  for (int i = 0; i < rs.rank(); ++i)
    if (I.contains(i) && lambda.twice(i) < 0) return false;
  return true;
}

}  // namespace pjp
