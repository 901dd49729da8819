#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "pjp/error.hpp"
#include "pjp/io.hpp"
#include "pjp/verify.hpp"

using namespace pjp;

namespace {

enum class Format { Json, Latex, Text };

struct Request {
  std::string rs_name = "A2";
  std::string scale = "1";
  std::string I_text;
  std::string k_text = "1";
  std::string lambda_text;
  std::string sigma_text = "0";
  std::string method = "sym";
  std::string format = "json";
  std::string out;
  // mvop
  std::string what = "all";
  // opapply
  std::string op;
  std::string input;
  bool check = false;
  // verify
  std::string suite = "all";
  std::string kset;
  int jobs = 1;
  int box = 6;
};

struct Output {
  std::string text;
  int code = 0;
};

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

std::vector<std::string> split(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

int to_int(const std::string& s) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    bad("expected an integer, got '" + s + "'");
  }
  if (used != s.size()) bad("expected an integer, got '" + s + "'");
  return v;
}

Format parse_format(const std::string& f) {
  if (f == "json") return Format::Json;
  if (f == "latex") return Format::Latex;
  if (f == "text") return Format::Text;
  bad("unknown format '" + f + "'");
}

// Parsed request data common to most subcommands.
struct Context {
  RootSystemPtr rs;
  Subset I;
  Multiplicity k;
  Format format = Format::Json;
};

Context context(const Request& r) {
  Context c;
  c.rs = build_root_system(r.rs_name, parse_rational(r.scale));
  if (c.rs->scale() <= 0) bad("scale must be positive");
  const int n = c.rs->rank();
  if (r.I_text == "all" || r.I_text == "S") {
    c.I = Subset::full(n);
  } else if (!r.I_text.empty() && r.I_text != "none") {
    for (const auto& s : split(r.I_text)) {
      int i = to_int(s);
      if (i < 1 || i > n) bad("simple reflection index " + s + " out of range 1.." + std::to_string(n));
      c.I.insert(i - 1);
    }
  }
  auto ks = split(r.k_text);
  RVec kv;
  for (const auto& s : ks) kv.push_back(parse_rational(s));
  for (const auto& x : kv)
    if (x < 0) bad("multiplicities must be nonnegative");
  if (kv.size() == 1)
    c.k = Multiplicity::uniform(*c.rs, kv[0]);
  else if (static_cast<int>(kv.size()) == c.rs->num_orbits())
    c.k = Multiplicity(*c.rs, kv);
  else
    bad("--k needs 1 or " + std::to_string(c.rs->num_orbits()) + " values");
  c.format = parse_format(r.format);
  return c;
}

Weight parse_weight(const std::string& text, int rank, const char* flag) {
  if (text.empty()) bad(std::string(flag) + " is required");
  if (text == "0") return Weight(rank);
  auto parts = split(text);
  if (static_cast<int>(parts.size()) != rank)
    bad(std::string(flag) + " needs " + std::to_string(rank) + " fundamental-weight coordinates");
  std::vector<int> c;
  for (const auto& p : parts) c.push_back(to_int(p));
  return Weight::from_coords(c);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// --- subcommands -----------------------------------------------------------

Output run_gens(const Request& r) {
  auto c = context(r);
  const auto& W = c.rs->weyl();
  std::vector<Subset> cols{Subset()};
  if (!c.I.empty()) cols.push_back(c.I);
  if (!(c.I == Subset::full(c.rs->rank()))) cols.push_back(Subset::full(c.rs->rank()));
  if (c.format == Format::Json) return {dump(steinberg_json(c.rs, c.I, cols))};
  auto gens = steinberg_generators(c.rs, c.I);
  auto alt = alt_steinberg(c.rs, c.I);
  auto rows = steinberg_table(*c.rs, cols);
  std::ostringstream os;
  if (c.format == Format::Text) {
    for (const auto& g : gens) os << "phi_" << W.element(g.v).to_string() << " = " << to_text(g.phi) << "\n";
    os << "alternative:\n";
    for (const auto& a : alt) os << "  w=" << W.element(a.w).to_string() << ": " << to_text(a.generator) << "\n";
    os << "table: v | lambda_v | v^-1 lambda_v";
    for (Subset s : cols) os << " | " << subset_to_json(s, c.rs->rank()).dump();
    os << "\n";
    for (const auto& row : rows) {
      os << W.element(row.v).to_string() << " | " << weight_text(row.lambda_v) << " | " << weight_text(row.label);
      for (bool m : row.member) os << " | " << (m ? "*" : "");
      os << "\n";
    }
    return {os.str()};
  }
  os << "\\begin{align*}\n";
  for (const auto& g : gens) {
    std::string v = W.element(g.v).to_string();
    std::erase(v, '*');
    os << "\\phi_{" << v << "} &= " << to_latex(g.phi) << "\\\\\n";
  }
  os << "\\end{align*}\n";
  return {os.str()};
}

Output run_epoly(const Request& r) {
  auto c = context(r);
  Weight lambda = parse_weight(r.lambda_text, c.rs->rank(), "--lambda");
  LaurentPoly e(c.rs);
  if (r.method == "sym") {
    e = e_poly(c.rs, lambda, c.k);
  } else if (r.method == "gs") {
    e = e_poly_gs(c.rs, lambda, c.k);
  } else if (r.method == "both") {
    e = e_poly(c.rs, lambda, c.k);
    if (!(e == e_poly_gs(c.rs, lambda, c.k)))
      throw Error(ErrorCode::InternalInconsistency, "recursion and Gram system disagree at " + lambda.to_string());
  } else {
    bad("unknown method '" + r.method + "'");
  }
  EPolyResult res{c.rs, lambda, c.k, e, spectral(*c.rs, lambda, c.k).value};
  switch (c.format) {
    case Format::Json: return {dump(to_json(res))};
    case Format::Text: return {"E(" + weight_text(lambda) + ") = " + to_text(e) + "\n"};
    case Format::Latex: return {"E(" + weight_latex(lambda) + ",k) = " + to_latex(e) + "\n"};
  }
  return {};
}

Output run_jacobi(const Request& r) {
  auto c = context(r);
  Weight lambda = parse_weight(r.lambda_text, c.rs->rank(), "--lambda");
  JacobiPoly p;
  if (r.method == "sym") {
    p = jacobi_sym(c.rs, c.I, lambda, c.k);
  } else if (r.method == "gs") {
    p = jacobi_gs(c.rs, c.I, lambda, c.k);
  } else if (r.method == "both") {
    p = jacobi_sym(c.rs, c.I, lambda, c.k);
    auto g = jacobi_gs(c.rs, c.I, lambda, c.k);
    if (!(p.poly == g.poly && p.expansion == g.expansion))
      throw Error(ErrorCode::InternalInconsistency, "symmetrization and Gram system disagree at " + lambda.to_string());
  } else {
    bad("unknown method '" + r.method + "'");
  }
  switch (c.format) {
    case Format::Json: return {dump(to_json(p))};
    case Format::Text: return {"p_I(" + weight_text(lambda) + ") = " + to_text(p.poly) + "\n"};
    case Format::Latex: return {"p_I(" + weight_latex(lambda) + ",k) = " + to_latex(p.poly) + "\n"};
  }
  return {};
}

std::string render(const VectorPoly& v, Format f) {
  switch (f) {
    case Format::Json: return dump(to_json(v));
    case Format::Text: return to_text(v) + "\n";
    case Format::Latex: return to_latex(v) + "\n";
  }
  return {};
}

Output run_vec(const Request& r) {
  auto c = context(r);
  Weight lambda = parse_weight(r.lambda_text, c.rs->rank(), "--lambda");
  return {render(big_p(c.rs, c.I, lambda, c.k), c.format)};
}

Json read_json_input(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) bad("cannot read " + path);
    in = &file;
  }
  try {
    return Json::parse(*in);
  } catch (const Json::parse_error& e) {
    bad(std::string("input is not JSON: ") + e.what());
  }
}

Output run_opapply(const Request& r) {
  auto c = context(r);
  VectorPoly v;
  if (!r.input.empty()) {
    v = vector_from_json(read_json_input(r.input));
    if (!v.rs->same_as(*c.rs) || !(v.I == c.I)) bad("input vector lives on a different root system or I");
  } else {
    v = big_p(c.rs, c.I, parse_weight(r.lambda_text, c.rs->rank(), "--lambda"), c.k);
  }
  const auto& kv = c.k.values();
  bool uniform = std::all_of(kv.begin(), kv.end(), [&](const Rational& x) { return x == kv.front(); });
  std::optional<HPoly> q;
  std::optional<MatrixRatOp> m;
  if (r.op == "xi1" || r.op == "xi2" || r.op == "xi3") {
    q = a2_xi(r.op[2] - '0');
  } else if (r.op == "e2" || r.op == "e3") {
    HPoly x1 = a2_xi(1), x2 = a2_xi(2), x3 = a2_xi(3);
    q = r.op == "e2" ? x1 * x2 + x1 * x3 + x2 * x3 : x1 * x2 * x3;
  } else if (r.op == "M1" || r.op == "M2") {
    if (!c.rs->same_as(*a2_spherical()) || !(c.I == a2_spherical_I()))
      bad("M1 and M2 act on A2 at scale 2 with I = {2}");
    if (!uniform) bad("M1 and M2 need a single k");
    auto ops = a2_example_ops(kv.front());
    m = r.op == "M1" ? ops.first : ops.second;
    q = a2_generators(c.I)[r.op == "M1" ? 0 : 1];
  } else {
    bad("unknown operator '" + r.op + "' (xi1, xi2, xi3, e2, e3, M1, M2)");
  }
  if (c.rs->rank() != 2 || c.rs->family() != 'A') bad("named operators are defined for A2");
  VectorPoly result = m ? m->apply(v) : induced_apply(*q, c.k, v);
  Output out{render(result, c.format)};
  if (r.check && m && !(result == induced_apply(*q, c.k, v))) {
    out.code = 1;
    out.text += "check failed: matrix operator differs from the transported operator\n";
  }
  return out;
}

std::string render(const ChiMatrix& m, Format f) {
  switch (f) {
    case Format::Json: return to_json(m).dump();
    case Format::Text: return to_text(m);
    case Format::Latex: return to_latex(m) + "\n";
  }
  return {};
}

Output run_mvop(const Request& r) {
  auto c = context(r);
  const int n = c.rs->rank();
  bool all = r.what == "all";
  if (!all && r.what != "p" && r.what != "w" && r.what != "m") bad("--what must be p, w, m or all");
  Json j{{"rs", to_json(*c.rs)}, {"I", subset_to_json(c.I, n)}, {"k", to_json(c.k)}};
  std::ostringstream os;
  if (all || r.what == "p") {
    if (r.lambda_text.empty()) {
      if (!all) bad("--lambda is required for --what p");
    } else {
      Weight lambda = parse_weight(r.lambda_text, n, "--lambda");
      auto p = script_p(c.rs, c.I, lambda, c.k);
      ChiMatrix col;
      for (const auto& x : p) col.push_back({x});
      j["lambda"] = to_json(lambda);
      j["script_p"] = to_json(col);
      if (c.format != Format::Json) os << "P_I(" << weight_text(lambda) << "):\n" << render(col, c.format);
    }
  }
  if (all || r.what == "w") {
    auto w = weight_matrix(c.rs, c.I);
    j["weight"] = to_json(w);
    if (c.format != Format::Json) os << "W_I:\n" << render(w, c.format);
  }
  if (all || r.what == "m") {
    Weight sigma = parse_weight(r.sigma_text, n, "--sigma");
    auto m = mvop_matrix(c.rs, c.I, sigma, c.k);
    Json labels = Json::array();
    for (const auto& l : mvop_labels(*c.rs, c.I, sigma)) labels.push_back(to_json(l));
    j["sigma"] = to_json(sigma);
    j["labels"] = labels;
    j["mvop"] = to_json(m);
    if (c.format != Format::Json) os << "M_I(" << weight_text(sigma) << "):\n" << render(m, c.format);
  }
  if (c.format == Format::Json) return {dump(j)};
  return {os.str()};
}

Output run_verify(const Request& r) {
  VerifyOptions opts;
  if (!r.kset.empty()) {
    opts.kset.clear();
    for (const auto& s : split(r.kset)) opts.kset.push_back(parse_rational(s));
  }
  if (r.jobs < 1) bad("--jobs must be positive");
  if (r.box < 0 || r.box > 8) bad("--box must be in 0..8");
  opts.jobs = r.jobs;
  opts.box = r.box;
  Format f = parse_format(r.format);
  auto reports = run_suite(suite_criteria(r.suite), opts);
  bool ok = std::all_of(reports.begin(), reports.end(), [](const CriterionReport& x) { return x.pass(); });
  if (f == Format::Json) {
    Json j{{"suite", r.suite}, {"kset", Json::array()}, {"criteria", Json::array()}, {"pass", ok}};
    for (const auto& k : opts.kset) j["kset"].push_back(to_json(k));
    for (const auto& rep : reports) {
      Json cases = Json::array();
      for (const auto& cr : rep.cases) cases.push_back(Json{{"name", cr.name}, {"pass", cr.pass}, {"detail", cr.detail}});
      j["criteria"].push_back(Json{{"id", rep.id}, {"title", rep.title}, {"pass", rep.pass()}, {"cases", cases}});
    }
    return {dump(j), ok ? 0 : 1};
  }
  std::ostringstream os;
  for (const auto& rep : reports) {
    os << "criterion " << rep.id << ": " << (rep.pass() ? "PASS" : "FAIL") << "  " << rep.title << "\n";
    for (const auto& cr : rep.cases) os << "  " << (cr.pass ? "ok   " : "FAIL ") << cr.name << ": " << cr.detail << "\n";
  }
  return {os.str(), ok ? 0 : 1};
}

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidInput:
    case ErrorCode::UnsupportedType:
    case ErrorCode::MismatchedRootSystem:
    case ErrorCode::NotIDominant:
    case ErrorCode::NonIntegerMultiplicity:
    case ErrorCode::NotInvariant:
    case ErrorCode::NotWInvariant:
      return 2;
    default:
      return 1;
  }
}

void print_error(const std::string& code, const std::string& detail) {
  std::cerr << Json{{"error", code}, {"detail", detail}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parabolic Jacobi polynomials, Steinberg bases and matrix-valued orthogonal polynomials"};
  app.require_subcommand(1);
  Request r;

  auto common = [&r](CLI::App* sub, bool with_lambda) {
    sub->add_option("--rs", r.rs_name, "root system, e.g. A1, A2, B2, G2")->capture_default_str();
    sub->add_option("--scale", r.scale, "root scale c (roots of c times the standard system)")->capture_default_str();
    sub->add_option("--I", r.I_text, "simple reflections in I, 1-based, comma separated; 'all' for S");
    sub->add_option("--k", r.k_text, "multiplicity p/q, or one value per root orbit")->capture_default_str();
    if (with_lambda) sub->add_option("--lambda", r.lambda_text, "label weight in fundamental coordinates, e.g. -1,0");
    sub->add_option("--format", r.format, "json|latex|text")->capture_default_str();
    sub->add_option("--out", r.out, "write output to FILE instead of stdout");
  };

  auto* gens = app.add_subcommand("gens", "Steinberg generators, alternative generators and the v / lambda_v table");
  common(gens, false);
  auto* epoly = app.add_subcommand("epoly", "nonsymmetric Jacobi polynomial E(lambda,k)");
  common(epoly, true);
  epoly->add_option("--method", r.method, "sym (recursion) | gs (Gram system) | both")->capture_default_str();
  auto* jacobi = app.add_subcommand("jacobi", "parabolic Jacobi polynomial p_I(lambda,k)");
  common(jacobi, true);
  jacobi->add_option("--method", r.method, "sym | gs | both")->capture_default_str();
  auto* vec = app.add_subcommand("vec", "vector-valued P_I(lambda,k) = Gamma(p_I(lambda,k))");
  common(vec, true);
  auto* opapply = app.add_subcommand("opapply", "apply a named operator to a vector polynomial (A2)");
  common(opapply, true);
  opapply->add_option("--op", r.op, "xi1|xi2|xi3|e2|e3 (transported) or M1|M2 (explicit matrices)")->required();
  opapply->add_option("--input", r.input, "vector polynomial JSON file as written by 'vec' ('-' for stdin)");
  opapply->add_flag("--check", r.check, "compare M1/M2 with the transported operator");
  auto* mvop = app.add_subcommand("mvop", "Steinberg coordinates P, matrix weight W and matrix polynomials M");
  common(mvop, true);
  mvop->add_option("--sigma", r.sigma_text, "dominant weight sigma for M_I(sigma)")->capture_default_str();
  mvop->add_option("--what", r.what, "p|w|m|all")->capture_default_str();
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", r.suite, "all|steinberg|epoly|jacobi|operators|vectorize|mvop or criterion numbers")
      ->capture_default_str();
  verify->add_option("--kset", r.kset, "comma separated multiplicities (default 1/2,1,2,5/3 plus two seeded)");
  verify->add_option("--jobs", r.jobs, "worker threads")->capture_default_str();
  verify->add_option("--box", r.box, "label box bound")->capture_default_str();
  verify->add_option("--format", r.format, "json|text")->capture_default_str();
  verify->add_option("--out", r.out, "write output to FILE instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("InvalidInput", e.what());
    return 2;
  }

  Output out;
  try {
    if (*gens) out = run_gens(r);
    else if (*epoly) out = run_epoly(r);
    else if (*jacobi) out = run_jacobi(r);
    else if (*vec) out = run_vec(r);
    else if (*opapply) out = run_opapply(r);
    else if (*mvop) out = run_mvop(r);
    else if (*verify) out = run_verify(r);
  } catch (const Error& e) {
    print_error(std::string(error_name(e.code())), e.detail());
    return exit_code(e.code());
  } catch (const std::exception& e) {
    print_error("InternalInconsistency", e.what());
    return 1;
  }

  if (r.out.empty()) {
    std::cout << out.text;
  } else {
    std::ofstream f(r.out, std::ios::binary);
    if (!f) {
      print_error("InvalidInput", "cannot write " + r.out);
      return 2;
    }
    f << out.text;
  }
  return out.code;
}
