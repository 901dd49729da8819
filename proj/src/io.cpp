#include "pjp/io.hpp"

#include <sstream>

#include "pjp/error.hpp"

namespace pjp {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::InvalidInput, "malformed JSON: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing \"") + key + "\"");
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

}  // namespace

// --- scalars and weights ---------------------------------------------------

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  malformed("rational must be a \"p/q\" string");
}

Json to_json(const Weight& w) { return Json{{"num", w.num()}, {"den", w.den()}}; }

Weight weight_from_json(const Json& j) {
  auto num = int_list(field(j, "num"), "weight num");
  int den = as_int(field(j, "den"), "weight den");
  if (den != 1 && den != 2) malformed("weight den must be 1 or 2");
  if (num.empty() || num.size() > kMaxRank) malformed("weight has unsupported rank");
  return Weight::from_num_den(num, den);
}

Json to_json(const RootSystem& rs) {
  return Json{{"family", std::string(1, rs.family())}, {"rank", rs.rank()}, {"scale", to_string(rs.scale())}};
}

RootSystemPtr root_system_from_json(const Json& j) {
  const auto& fam = field(j, "family");
  if (!fam.is_string() || fam.get<std::string>().size() != 1) malformed("family must be one letter");
  Rational scale = j.contains("scale") ? rational_from_json(j.at("scale")) : Rational(1);
  return build_root_system(fam.get<std::string>()[0], as_int(field(j, "rank"), "rank"), scale);
}

Json subset_to_json(Subset I, int rank) {
  Json a = Json::array();
  for (int i : I.indices(rank)) a.push_back(i + 1);
  return a;
}

Subset subset_from_json(const Json& j, int rank) {
  Subset I;
  for (int i : int_list(j, "I")) {
    if (i < 1 || i > rank) malformed("simple reflection index out of range");
    I.insert(i - 1);
  }
  return I;
}

Json to_json(const Multiplicity& k) {
  const auto& v = k.values();
  bool uniform = std::all_of(v.begin(), v.end(), [&](const Rational& x) { return x == v.front(); });
  if (uniform && !v.empty()) return to_string(v.front());
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Multiplicity multiplicity_from_json(const Json& j, const RootSystem& rs) {
  if (j.is_array()) {
    RVec v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return Multiplicity(rs, v);
  }
  return Multiplicity::uniform(rs, rational_from_json(j));
}

// --- polynomials -----------------------------------------------------------

Json to_json(const LaurentPoly& f) {
  Json terms = Json::array();
  for (const auto& [w, c] : f.terms()) terms.push_back(Json{{"exp", to_json(w)}, {"coeff", to_string(c)}});
  return Json{{"terms", terms}};
}

LaurentPoly laurent_from_json(const Json& j, const RootSystemPtr& rs) {
  const auto& terms = field(j, "terms");
  if (!terms.is_array()) malformed("terms must be an array");
  std::vector<Term> out;
  for (const auto& t : terms) {
    Weight w = weight_from_json(field(t, "exp"));
    if (w.rank() != rs->rank()) malformed("exponent rank differs from the root system");
    out.emplace_back(w, rational_from_json(field(t, "coeff")));
  }
  return LaurentPoly(rs, std::move(out));
}

Json weyl_to_json(const RootSystem& rs, int w) { return rs.weyl().element(w).to_string(); }

int weyl_from_json(const Json& j, const RootSystem& rs) {
  if (!j.is_string()) malformed("Weyl element must be a string like \"s2*s1\"");
  return rs.weyl().parse(j.get<std::string>());
}

Json to_json(const SpectralVector& s) {
  Json a = Json::array();
  for (const auto& x : s.value) a.push_back(to_string(x));
  return a;
}

namespace {

Json rvec_json(const RVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

RVec rvec_from_json(const Json& j) {
  if (!j.is_array()) malformed("expected an array of rationals");
  RVec v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

}  // namespace

Json to_json(const EPolyResult& e) {
  Json j{{"rs", to_json(*e.rs)}, {"label", to_json(e.label)}, {"k", to_json(e.k)}};
  j["terms"] = to_json(e.poly)["terms"];
  j["spectral"] = rvec_json(e.spectral);
  return j;
}

EPolyResult epoly_from_json(const Json& j) {
  EPolyResult e;
  e.rs = root_system_from_json(field(j, "rs"));
  e.label = weight_from_json(field(j, "label"));
  e.k = multiplicity_from_json(field(j, "k"), *e.rs);
  e.poly = laurent_from_json(j, e.rs);
  e.spectral = rvec_from_json(field(j, "spectral"));
  return e;
}

Json to_json(const JacobiPoly& p) {
  const auto& rs = p.poly.rs();
  Json j{{"rs", to_json(rs)}, {"label", to_json(p.label)}, {"I", subset_to_json(p.I, rs.rank())}, {"k", to_json(p.k)}};
  j["terms"] = to_json(p.poly)["terms"];
  Json ex = Json::array();
  for (const auto& [mu, c] : p.expansion) ex.push_back(Json{{"mu", to_json(mu)}, {"c", to_string(c)}});
  j["expansion"] = ex;
  j["spectral"] = to_json(p.spectral);
  return j;
}

JacobiPoly jacobi_from_json(const Json& j) {
  JacobiPoly p;
  auto rs = root_system_from_json(field(j, "rs"));
  p.label = weight_from_json(field(j, "label"));
  p.I = subset_from_json(field(j, "I"), rs->rank());
  p.k = multiplicity_from_json(field(j, "k"), *rs);
  p.poly = laurent_from_json(j, rs);
  const auto& ex = field(j, "expansion");
  if (!ex.is_array()) malformed("expansion must be an array");
  for (const auto& e : ex) p.expansion.emplace_back(weight_from_json(field(e, "mu")), rational_from_json(field(e, "c")));
  p.spectral = SpectralVector{p.label, p.k, rvec_from_json(field(j, "spectral"))};
  return p;
}

bool same_jacobi(const JacobiPoly& a, const JacobiPoly& b) {
  return a.label == b.label && a.I == b.I && a.k == b.k && a.poly == b.poly && a.expansion == b.expansion &&
         a.spectral.value == b.spectral.value;
}

Json to_json(const VectorPoly& v) {
  Json comps = Json::array();
  for (const auto& c : v.components) comps.push_back(to_json(c));
  return Json{{"rs", to_json(*v.rs)}, {"I", subset_to_json(v.I, v.rs->rank())}, {"components", comps}};
}

VectorPoly vector_from_json(const Json& j) {
  VectorPoly v;
  v.rs = root_system_from_json(field(j, "rs"));
  v.I = subset_from_json(field(j, "I"), v.rs->rank());
  const auto& comps = field(j, "components");
  if (!comps.is_array()) malformed("components must be an array");
  for (const auto& c : comps) v.components.push_back(laurent_from_json(c, v.rs));
  if (v.size() != v.rs->weyl().min_coset_reps(v.I).size()) malformed("component count differs from |W^I|");
  return v;
}

Json to_json(const RatFunc& f) {
  Json factors = Json::array();
  for (const auto& [g, m] : f.factors()) factors.push_back(Json{{"factor", to_json(g)}, {"mult", m}});
  return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}, {"den_factors", factors}};
}

RatFunc ratfunc_from_json(const Json& j, const RootSystemPtr& rs) {
  LaurentPoly num = laurent_from_json(field(j, "num"), rs);
  std::vector<LaurentPoly> factors;
  if (j.contains("den_factors")) {
    for (const auto& f : j.at("den_factors")) {
      LaurentPoly g = laurent_from_json(field(f, "factor"), rs);
      int m = as_int(field(f, "mult"), "mult");
      if (m < 0) malformed("negative multiplicity");
      for (int e = 0; e < m; ++e) factors.push_back(g);
    }
  } else {
    factors.push_back(laurent_from_json(field(j, "den"), rs));
  }
  return RatFunc::fraction(std::move(num), factors);
}

Json to_json(const MatrixRatOp& m) {
  Json terms = Json::array();
  for (const auto& t : m.terms()) {
    Json r = to_json(t.coeff);
    Json e{{"i", t.i}, {"j", t.j}};
    for (auto it = r.begin(); it != r.end(); ++it) e[it.key()] = it.value();
    e["deriv"] = t.deriv;
    terms.push_back(e);
  }
  return Json{{"rs", to_json(*m.root_system())}, {"size", m.size()}, {"terms", terms}};
}

MatrixRatOp matrix_op_from_json(const Json& j) {
  auto rs = root_system_from_json(field(j, "rs"));
  int size = as_int(field(j, "size"), "size");
  if (size < 1) malformed("size must be positive");
  MatrixRatOp m(rs, size);
  const auto& terms = field(j, "terms");
  if (!terms.is_array()) malformed("terms must be an array");
  for (const auto& t : terms)
    m.add(as_int(field(t, "i"), "i"), as_int(field(t, "j"), "j"), ratfunc_from_json(t, rs), int_list(field(t, "deriv"), "deriv"));
  return m;
}

Json to_json(const ChiPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"exp", e}, {"coeff", to_string(c)}});
  return Json{{"nvars", p.nvars()}, {"terms", terms}};
}

ChiPolynomial chi_from_json(const Json& j) {
  int n = as_int(field(j, "nvars"), "nvars");
  if (n < 1 || n > kMaxRank) malformed("nvars out of range");
  ChiPolynomial p(n);
  const auto& terms = field(j, "terms");
  if (!terms.is_array()) malformed("terms must be an array");
  for (const auto& t : terms) {
    auto e = int_list(field(t, "exp"), "exp");
    if (static_cast<int>(e.size()) != n || std::any_of(e.begin(), e.end(), [](int a) { return a < 0; }))
      malformed("bad χ exponent");
    p.add_term(e, rational_from_json(field(t, "coeff")));
  }
  return p;
}

Json to_json(const ChiMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_json(x));
    rows.push_back(r);
  }
  return rows;
}

ChiMatrix chi_matrix_from_json(const Json& j) {
  if (!j.is_array()) malformed("matrix must be an array of rows");
  ChiMatrix m;
  for (const auto& row : j) {
    if (!row.is_array()) malformed("matrix row must be an array");
    std::vector<ChiPolynomial> r;
    for (const auto& x : row) r.push_back(chi_from_json(x));
    m.push_back(std::move(r));
  }
  return m;
}

Json steinberg_json(const RootSystemPtr& rs, Subset I, const std::vector<Subset>& table_subsets) {
  const int n = rs->rank();
  Json gens = Json::array();
  for (const auto& d : steinberg_generators(rs, I)) {
    Json g{{"v", weyl_to_json(*rs, d.v)}, {"lambda_v", to_json(d.lambda_v)}, {"label", to_json(d.label)}};
    g["phi"] = to_json(d.phi);
    gens.push_back(g);
  }
  Json alt = Json::array();
  for (const auto& d : alt_steinberg(rs, I)) {
    Json g{{"w", weyl_to_json(*rs, d.w)}, {"mu_w", to_json(d.mu_w)}, {"label", to_json(d.label)}};
    g["generator"] = to_json(d.generator);
    alt.push_back(g);
  }
  Json subsets = Json::array();
  for (Subset s : table_subsets) subsets.push_back(subset_to_json(s, n));
  Json rows = Json::array();
  for (const auto& r : steinberg_table(*rs, table_subsets)) {
    Json member = Json::array();
    for (bool b : r.member) member.push_back(b);
    rows.push_back(Json{{"v", weyl_to_json(*rs, r.v)}, {"lambda_v", to_json(r.lambda_v)}, {"label", to_json(r.label)}, {"member", member}});
  }
  return Json{{"rs", to_json(*rs)},
              {"I", subset_to_json(I, n)},
              {"generators", gens},
              {"alternative", alt},
              {"table", Json{{"subsets", subsets}, {"rows", rows}}}};
}

// --- text ------------------------------------------------------------------

namespace {

std::string weight_sum(const Weight& w, const std::string& sym_open, const std::string& sym_close) {
  std::string s;
  for (int i = 0; i < w.rank(); ++i) {
    Rational c = w.coord(i);
    if (c == 0) continue;
    if (c < 0)
      s += "-";
    else if (!s.empty())
      s += "+";
    Rational a = abs(c);
    if (a != 1) s += a.get_str();
    s += sym_open + std::to_string(i + 1) + sym_close;
  }
  return s.empty() ? "0" : s;
}

template <typename Fn>
std::string signed_sum(const std::vector<std::pair<std::string, Rational>>& parts, Fn coeff_fmt) {
  if (parts.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [body, c] : parts) {
    Rational a = abs(c);
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    first = false;
    if (body.empty())
      s += coeff_fmt(a);
    else if (a == 1)
      s += body;
    else
      s += coeff_fmt(a) + (coeff_fmt(a).find('{') == std::string::npos ? "*" : "") + body;
  }
  return s;
}

}  // namespace

std::string weight_text(const Weight& w) { return weight_sum(w, "w", ""); }

std::string to_text(const LaurentPoly& f) {
  std::vector<std::pair<std::string, Rational>> parts;
  for (const auto& [w, c] : f.terms()) parts.emplace_back(w.is_zero() ? "" : "e^(" + weight_text(w) + ")", c);
  return signed_sum(parts, [](const Rational& a) { return a.get_str(); });
}

std::string to_text(const VectorPoly& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_text(v[i]);
  return s + ")";
}

std::string to_text(const RatFunc& f) {
  if (f.factors().empty()) return to_text(f.num());
  std::string d;
  for (const auto& [g, m] : f.factors()) d += "(" + to_text(g) + ")" + (m > 1 ? "^" + std::to_string(m) : "");
  return "(" + to_text(f.num()) + ")/" + d;
}

namespace {

std::string deriv_text(const std::vector<int>& a, bool latex) {
  std::string s;
  for (size_t l = 0; l < a.size(); ++l) {
    if (a[l] == 0) continue;
    if (latex)
      s += "\\partial_{b_{" + std::to_string(l + 1) + "}}" + (a[l] > 1 ? "^{" + std::to_string(a[l]) + "}" : "");
    else
      s += "d" + std::to_string(l + 1) + (a[l] > 1 ? "^" + std::to_string(a[l]) : "");
  }
  return s;
}

std::vector<std::vector<std::vector<const OpTerm*>>> entries(const MatrixRatOp& m) {
  std::vector<std::vector<std::vector<const OpTerm*>>> e(m.size(), std::vector<std::vector<const OpTerm*>>(m.size()));
  for (const auto& t : m.terms()) e[t.i][t.j].push_back(&t);
  return e;
}

}  // namespace

std::string to_text(const MatrixRatOp& m) {
  std::ostringstream os;
  auto e = entries(m);
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) {
      if (e[i][j].empty()) continue;
      os << "[" << i + 1 << "," << j + 1 << "]";
      for (const OpTerm* t : e[i][j]) {
        std::string d = deriv_text(t->deriv, false);
        os << " + " << to_text(t->coeff) << (d.empty() ? "" : " " + d);
      }
      os << "\n";
    }
  return os.str();
}

std::string to_text(const ChiMatrix& m) {
  std::ostringstream os;
  for (const auto& row : m) {
    for (size_t j = 0; j < row.size(); ++j) os << (j ? " | " : "") << row[j].to_string();
    os << "\n";
  }
  return os.str();
}

// --- LaTeX -----------------------------------------------------------------

std::string weight_latex(const Weight& w) {
  std::string s;
  for (int i = 0; i < w.rank(); ++i) {
    Rational c = w.coord(i);
    if (c == 0) continue;
    if (c < 0)
      s += "-";
    else if (!s.empty())
      s += "+";
    Rational a = abs(c);
    if (a != 1) s += to_latex(a);
    s += "\\varpi_{" + std::to_string(i + 1) + "}";
  }
  return s.empty() ? "0" : s;
}

std::string to_latex(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  std::string sign = q < 0 ? "-" : "";
  return sign + "\\frac{" + mpz_class(abs(q.get_num())).get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string to_latex(const LaurentPoly& f) {
  std::vector<std::pair<std::string, Rational>> parts;
  for (const auto& [w, c] : f.terms()) parts.emplace_back(w.is_zero() ? "" : "e^{" + weight_latex(w) + "}", c);
  return signed_sum(parts, [](const Rational& a) { return to_latex(a); });
}

std::string to_latex(const VectorPoly& v) {
  std::string s = "\\begin{pmatrix}";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "\\\\ " : "") + to_latex(v[i]);
  return s + "\\end{pmatrix}";
}

std::string to_latex(const RatFunc& f) {
  if (f.factors().empty()) return to_latex(f.num());
  std::string d;
  for (const auto& [g, m] : f.factors()) d += "(" + to_latex(g) + ")" + (m > 1 ? "^{" + std::to_string(m) + "}" : "");
  return "\\frac{" + to_latex(f.num()) + "}{" + d + "}";
}

std::string to_latex(const MatrixRatOp& m) {
  auto e = entries(m);
  std::string s = "\\begin{pmatrix}";
  for (int i = 0; i < m.size(); ++i) {
    if (i) s += "\\\\ ";
    for (int j = 0; j < m.size(); ++j) {
      if (j) s += " & ";
      if (e[i][j].empty()) {
        s += "0";
        continue;
      }
      bool first = true;
      for (const OpTerm* t : e[i][j]) {
        s += (first ? "" : "+") + to_latex(t->coeff) + deriv_text(t->deriv, true);
        first = false;
      }
    }
  }
  return s + "\\end{pmatrix}";
}

std::string to_latex(const ChiPolynomial& p) {
  std::vector<std::pair<std::string, Rational>> parts;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    std::string body;
    for (size_t i = 0; i < it->first.size(); ++i) {
      int a = it->first[i];
      if (a == 0) continue;
      body += "\\chi_{" + std::to_string(i + 1) + "}" + (a > 1 ? "^{" + std::to_string(a) + "}" : "");
    }
    parts.emplace_back(body, it->second);
  }
  return signed_sum(parts, [](const Rational& a) { return to_latex(a); });
}

std::string to_latex(const ChiMatrix& m) {
  std::string s = "\\begin{pmatrix}";
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) s += "\\\\ ";
    for (size_t j = 0; j < m[i].size(); ++j) s += (j ? " & " : "") + to_latex(m[i][j]);
  }
  return s + "\\end{pmatrix}";
}

}  // namespace pjp
