#include "pjp/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "pjp/error.hpp"
#include "pjp/jacobi.hpp"
#include "pjp/mvop.hpp"
#include "pjp/parabolic.hpp"
#include "pjp/vectorize.hpp"

namespace pjp {

namespace {

using Task = std::function<CaseResult()>;

Weight wt(std::vector<int> c) { return Weight::from_coords(c); }

std::vector<Weight> box(int rank, int b) {
  std::vector<Weight> out;
  std::vector<int> c(rank, -b);
  for (;;) {
    out.push_back(wt(c));
    int i = 0;
    while (i < rank && ++c[i] > b) c[i++] = -b;
    if (i == rank) break;
  }
  return out;
}

std::vector<Weight> dominant_box(const RootSystem& rs, Subset I, int b) {
  std::vector<Weight> out;
  for (const auto& w : box(rs.rank(), b))
    if (is_dominant(rs, w, I)) out.push_back(w);
  return out;
}

const std::vector<Subset>& a2_subsets() {
  static const std::vector<Subset> s{Subset(), Subset::of({1}), Subset::full(2)};
  return s;
}

std::string subset_name(Subset I, int rank) {
  std::string s = "I={";
  bool first = true;
  for (int i : I.indices(rank)) {
    s += (first ? "s" : ",s") + std::to_string(i + 1);
    first = false;
  }
  return s + "}";
}

std::string kname(const Rational& k) { return "k=" + k.get_str(); }

// Wraps a check: exceptions become failures carrying the error text.
Task make_case(std::string name, std::function<std::string()> body) {
  return [name = std::move(name), body = std::move(body)]() {
    CaseResult r{name, false, {}};
    try {
      r.detail = body();
      r.pass = true;
    } catch (const Error& e) {
      r.detail = std::string(error_name(e.code())) + ": " + e.detail();
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    return r;
  };
}

// Thrown by checks; carries the failure description.
struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw CheckFailed(what);
}

// --- 1: Steinberg data ---------------------------------------------------------

std::vector<Task> steinberg_cases() {
  std::vector<Task> t;
  t.push_back(make_case("generators A2 I={s2}", [] {
    auto rs = build_root_system("A2");
    const auto& W = rs->weyl();
    auto gens = steinberg_generators(rs, Subset::of({1}));
    require(gens.size() == 3, "expected 3 generators");
    const char* names[] = {"e", "s1", "s2*s1"};
    LaurentPoly expect[] = {LaurentPoly::constant(rs, 1),
                            LaurentPoly::monomial(rs, wt({-1, 1})) + LaurentPoly::monomial(rs, wt({0, -1})),
                            LaurentPoly::monomial(rs, wt({-1, 0}))};
    for (int i = 0; i < 3; ++i) {
      require(W.element(gens[i].v).to_string() == names[i], "generator order");
      require(gens[i].phi == expect[i], std::string("phi_") + names[i]);
    }
    return std::string("phi_e, phi_s1, phi_s2s1 exact");
  }));
  t.push_back(make_case("v, lambda_v table", [] {
    auto rs = build_root_system("A2");
    const auto& W = rs->weyl();
    auto rows = steinberg_table(*rs, a2_subsets());
    struct Row {
      const char* v;
      std::vector<int> lambda_v, label;
      std::vector<bool> member;
    };
    const Row expected[] = {
        {"e", {0, 0}, {0, 0}, {true, true, true}},          {"s1", {1, 0}, {-1, 1}, {true, true, false}},
        {"s2", {0, 1}, {1, -1}, {true, false, false}},      {"s2*s1", {0, 1}, {-1, 0}, {true, true, false}},
        {"s1*s2", {1, 0}, {0, -1}, {true, false, false}},   {"s1*s2*s1", {1, 1}, {-1, -1}, {true, false, false}},
    };
    require(rows.size() == 6, "6 rows");
    for (const auto& e : expected) {
      const auto& r = rows[W.parse(e.v)];
      require(r.lambda_v == wt(e.lambda_v), std::string("lambda_v at ") + e.v);
      require(r.label == wt(e.label), std::string("v^-1 lambda_v at ") + e.v);
      require(r.member == e.member, std::string("membership at ") + e.v);
    }
    return std::string("6 rows, 3 membership columns");
  }));
  t.push_back(make_case("alternative generators", [] {
    auto rs = build_root_system("A2");
    auto alt = alt_steinberg(rs, Subset::of({1}));
    require(alt.size() == 3, "expected 3 generators");
    require(alt[0].generator == LaurentPoly::constant(rs, 1), "1");
    require(alt[1].generator == LaurentPoly::monomial(rs, wt({1, -1})) + LaurentPoly::monomial(rs, wt({0, 1})),
            "e^{w1-w2}+e^{w2}");
    require(alt[2].generator == LaurentPoly::monomial(rs, wt({1, 0})), "e^{w1}");
    return std::string("1, e^{w1-w2}+e^{w2}, e^{w1}");
  }));
  return t;
}

// --- 2: f_I bijection ------------------------------------------------------

std::vector<Task> fi_cases(const VerifyOptions& o) {
  std::vector<Task> t;
  for (Subset I : a2_subsets())
    t.push_back(make_case("A2 " + subset_name(I, 2), [I, b = o.box] {
      auto rs = build_root_system("A2");
      const auto& W = rs->weyl();
      auto labels = dominant_box(*rs, I, b);
      for (const auto& mu : labels) {
        auto [v, sigma] = f_I_inverse(*rs, I, mu);
        require(W.is_min_coset_rep(v, I) && is_dominant(*rs, sigma, Subset::full(2)), "preimage outside W^I x P+");
        require(f_I(*rs, I, v, sigma) == mu, "f_I(f_I^-1(mu)) != mu at " + mu.to_string());
      }
      std::set<Weight> images;
      size_t n = 0;
      for (int v : W.min_coset_reps(I))
        for (const auto& s : dominant_box(*rs, Subset::full(2), b)) {
          Weight mu = f_I(*rs, I, v, s);
          require(is_dominant(*rs, mu, I), "image not I-dominant");
          require(images.insert(mu).second, "f_I not injective at " + mu.to_string());
          auto back = f_I_inverse(*rs, I, mu);
          require(back.first == v && back.second == s, "f_I^-1(f_I(v,s)) != (v,s)");
          ++n;
        }
      return std::to_string(labels.size()) + " labels, " + std::to_string(n) + " preimages";
    }));
  return t;
}

// --- 3: e_poly vs Gram -----------------------------------------------------

std::vector<Task> epoly_cases(const VerifyOptions& o) {
  std::vector<Task> t;
  for (const char* name : {"A1", "A2"})
    for (int kv : {1, 2})
      t.push_back(make_case(std::string(name) + " k=" + std::to_string(kv), [name, kv, b = o.box] {
        auto rs = build_root_system(name);
        auto k = Multiplicity::uniform(*rs, kv);
        auto labels = box(rs->rank(), b);
        for (const auto& lam : labels)
          require(e_poly(rs, lam, k) == e_poly_gs(rs, lam, k), "E(" + lam.to_string() + ") differs");
        return std::to_string(labels.size()) + " labels";
      }));
  t.push_back(make_case("A1 closed forms", [ks = o.kset] {
    auto rs = build_root_system("A1");
    for (const auto& kk : ks) {
      auto k = Multiplicity::uniform(*rs, kk);
      Rational c = kk / (1 + kk);
      require(e_poly(rs, wt({-1}), k) == LaurentPoly::monomial(rs, wt({-1})) + LaurentPoly::monomial(rs, wt({1}), c),
              "E(-w) at " + kname(kk));
      require(e_poly(rs, wt({2}), k) == LaurentPoly::monomial(rs, wt({2})) + LaurentPoly::constant(rs, c),
              "E(2w) at " + kname(kk));
    }
    return std::to_string(ks.size()) + " values of k";
  }));
  return t;
}

// --- 4, 5: Jacobi construction and orthogonality ---------------------------

std::vector<Task> jacobi_cases(const VerifyOptions& o) {
  std::vector<Task> t;
  for (int kv : {1, 2})
    for (Subset I : a2_subsets())
      t.push_back(make_case(subset_name(I, 2) + " k=" + std::to_string(kv), [I, kv, b = o.box] {
        auto rs = build_root_system("A2");
        auto k = Multiplicity::uniform(*rs, kv);
        auto labels = dominant_box(*rs, I, b);
        for (const auto& lam : labels) {
          auto a = jacobi_sym(rs, I, lam, k), g = jacobi_gs(rs, I, lam, k);
          require(a.poly == g.poly && a.expansion == g.expansion, "p_I(" + lam.to_string() + ") differs");
        }
        return std::to_string(labels.size()) + " labels";
      }));
  return t;
}

std::vector<Task> gram_cases(const VerifyOptions& o) {
  std::vector<Task> t;
  for (int kv : {1, 2})
    for (Subset I : a2_subsets())
      t.push_back(make_case(subset_name(I, 2) + " k=" + std::to_string(kv), [I, kv, b = o.box] {
        auto rs = build_root_system("A2");
        auto k = Multiplicity::uniform(*rs, kv);
        auto labels = dominant_box(*rs, I, b);
        auto G = gram_matrix(rs, I, k, labels);
        size_t incomparable = 0;
        for (size_t i = 0; i < labels.size(); ++i)
          for (size_t j = 0; j < labels.size(); ++j) {
            if (i == j) {
              require(G[i][i] > 0, "non-positive norm at " + labels[i].to_string());
              continue;
            }
            require(G[i][j] == 0, "<p(" + labels[i].to_string() + "),p(" + labels[j].to_string() + ")> != 0");
            if (i < j && !leq(*rs, I, labels[i], labels[j], Order::I) && !leq(*rs, I, labels[j], labels[i], Order::I))
              ++incomparable;
          }
        return std::to_string(labels.size()) + " labels, " + std::to_string(incomparable) + " incomparable pairs";
      }));
  return t;
}

// --- 6, 11: spectral data --------------------------------------------------

std::vector<Task> spectral_cases(const VerifyOptions& o) {
  std::vector<Task> t;
  for (const auto& kk : o.kset)
    for (Subset I : a2_subsets())
      t.push_back(make_case(subset_name(I, 2) + " " + kname(kk), [I, kk, b = o.box] {
        auto rs = build_root_system("A2");
        auto k = Multiplicity::uniform(*rs, kk);
        auto gens = a2_generators(I);
        auto labels = dominant_box(*rs, I, b);
        for (const auto& lam : labels) {
          RVec d = spectral_definition(*rs, lam, k);
          require(d == spectral_epsilon(*rs, lam, k), "epsilon form differs at " + lam.to_string());
          require(d == spectral_lemma(*rs, I, lam, k), "w0 form differs at " + lam.to_string());
          spectral_data(jacobi_sym(rs, I, lam, k), gens);
        }
        return std::to_string(labels.size()) + " labels, generators " + gens[0].to_string() + "; " +
               gens[1].to_string();
      }));
  return t;
}

std::vector<Task> separation_cases(const VerifyOptions& o) {
  std::vector<Task> t;
  for (const auto& kk : o.kset)
    for (Subset I : a2_subsets())
      t.push_back(make_case(subset_name(I, 2) + " " + kname(kk), [I, kk, b = o.box] {
        auto rs = build_root_system("A2");
        auto k = Multiplicity::uniform(*rs, kk);
        // generators of S(h)^{W_I}; for I = {} the pair xi1, e2 does not generate
        auto pair = a2_generators(I);
        auto gens = I.empty() ? std::vector<HPoly>{a2_xi(1), a2_xi(2)} : pair;
        auto labels = dominant_box(*rs, I, b);
        std::map<std::pair<Rational, Rational>, Weight> seen;
        std::set<std::pair<Rational, Rational>> pair_seen;
        std::set<RVec> coords;
        size_t pair_collisions = 0;
        for (const auto& lam : labels) {
          RVec s = spectral(*rs, I, lam, k).value;
          std::pair key{gens[0].at(*rs, s), gens[1].at(*rs, s)};
          auto [it, fresh] = seen.emplace(key, lam);
          require(fresh, "eigenvalues of " + lam.to_string() + " and " + it->second.to_string() + " coincide");
          require(coords.insert(s).second, "spectral vectors coincide at " + lam.to_string());
          if (!pair_seen.insert({pair[0].at(*rs, s), pair[1].at(*rs, s)}).second) ++pair_collisions;
        }
        std::string d = std::to_string(labels.size()) + " distinct eigenvalue pairs";
        if (I.empty()) d += " for (xi1, xi2); (xi1, e2) collides " + std::to_string(pair_collisions) + " times";
        return d;
      }));
  return t;
}

// --- 7, 8: operators -------------------------------------------------------

std::vector<Task> operator_cases(const VerifyOptions& o) {
  std::vector<Task> t;
  for (const auto& kk : o.kset)
    t.push_back(make_case(kname(kk), [kk, b = o.box] {
      auto rs = a2_spherical();
      Subset I = a2_spherical_I();
      auto k = Multiplicity::uniform(*rs, kk);
      auto gens = a2_generators(I);
      auto ops = a2_example_ops(kk);
      auto printed = a2_example_ops(kk, Transcription::Printed);
      auto tests = invariant_test_set(rs, I, b);
      size_t printed_fail = 0;
      for (const auto& v : tests) {
        require(ops.first.apply(v) == induced_apply(gens[0], k, v), "beta(gamma(xi1)) differs on a test vector");
        auto want = induced_apply(gens[1], k, v);
        require(ops.second.apply(v) == want, "beta(gamma(e2)) differs on a test vector");
        try {
          if (!(printed.second.apply(v) == want)) ++printed_fail;
        } catch (const Error&) {
          ++printed_fail;
        }
      }
      return std::to_string(tests.size()) + " vectors; literal printed off-diagonals fail on " +
             std::to_string(printed_fail);
    }));
  return t;
}

std::vector<Task> shimeno_cases(const VerifyOptions& o) {
  std::vector<Task> t;
  t.push_back(make_case("rational-function identities", [] {
    for (auto [i, j] : {std::pair{1, 2}, {2, 3}, {1, 3}}) {
      require(check_identity_coth(sigma_root(i, j)), "coth identity");
      require(check_identity_sh2(sigma_root(i, j)), "1/sh^2 identity");
    }
    return std::string("both identities for the three roots");
  }));
  int bound = std::min(o.box, 3);
  auto psi_tests = [bound] {
    auto rs = a2_spherical();
    auto tau = t_exponents();
    MatrixRatOp tinv(rs, 3);
    for (int i = 0; i < 3; ++i) tinv.add(i, i, RatFunc(LaurentPoly::monomial(rs, -tau[i])));
    std::vector<VectorPoly> out;
    for (const auto& v : invariant_test_set(rs, a2_spherical_I(), bound)) out.push_back(tinv.apply(v));
    return out;
  };
  for (const auto& kk : o.kset) {
    t.push_back(make_case("M2 " + kname(kk), [kk, psi_tests] {
      auto rs = a2_spherical();
      auto tau = t_exponents();
      auto [m1, m2] = a2_example_ops(kk);
      auto [d1, d2] = shimeno_ops(kk);
      MatrixRatOp rhs = d2 - d1 - MatrixRatOp::identity(rs, 3) * (4 * kk * kk + ratio(1, 3));
      auto conj = m2.conjugate_diag(tau);
      require(conj == rhs, "T^-1 M2 T != D2 - D1 - 4k^2 - 1/3 as operators");
      auto rep = operators_equal_on(conj, rhs, psi_tests());
      require(rep.equal, rep.diagnostic);
      return std::string("T^-1 M2 T = D2 - D1 - 4k^2 - 1/3");
    }));
    t.push_back(make_case("M1 " + kname(kk), [kk, psi_tests] {
      auto rs = a2_spherical();
      auto tau = t_exponents();
      auto [m1, m2] = a2_example_ops(kk);
      auto [d1, d2] = shimeno_ops(kk);
      auto conj = m1.conjugate_diag(tau);
      if (conj == d1) {
        auto rep = operators_equal_on(conj, d1, psi_tests());
        require(rep.equal, rep.diagnostic);
        return std::string("T^-1 M1 T = D1");
      }
      std::vector<Weight> neg;
      for (const auto& w : tau) neg.push_back(-w);
      bool literal = m1.conjugate_diag(neg) == d1;
      auto id = MatrixRatOp::identity(rs, 3);
      std::string residual = conj == d1 + id * ratio(2, 3) ? "residual T^-1 M1 T - D1 = (2/3) Id exactly"
                                                          : "residual is not a scalar";
      throw CheckFailed("T^-1 M1 T != D1; " + residual + (literal ? "" : "; literal T M1 T^-1 != D1 as well"));
    }));
  }
  return t;
}

// --- 9: Γ unitarity --------------------------------------------------------

LaurentPoly random_invariant(const RootSystemPtr& rs, Subset I, std::mt19937_64& rng, int bound, int terms) {
  std::uniform_int_distribution<int> co(-bound, bound), cf(-3, 3);
  LaurentPoly f(rs);
  while (static_cast<int>(f.terms().size()) < 1 || terms-- > 0) {
    std::vector<int> c(rs->rank());
    for (auto& x : c) x = co(rng);
    Weight w = wt(c);
    if (!is_dominant(*rs, w, I)) continue;
    f += orbit_sum(rs, I, w) * Rational(cf(rng));
  }
  return f;
}

std::vector<Task> unitarity_cases(const VerifyOptions&) {
  std::vector<Task> t;
  for (int kv : {1, 2})
    for (Subset I : a2_subsets())
      t.push_back(make_case(subset_name(I, 2) + " k=" + std::to_string(kv), [I, kv] {
        auto rs = build_root_system("A2");
        InnerProduct ip(rs, Multiplicity::uniform(*rs, kv));
        std::mt19937_64 rng(kVerifySeed + 97 * kv + I.bits());
        Rational order(static_cast<long>(rs->weyl().min_coset_reps(I).size()));
        const int pairs = 20;
        for (int n = 0; n < pairs; ++n) {
          auto f = random_invariant(rs, I, rng, 2, 3), g = random_invariant(rs, I, rng, 2, 3);
          require(vec_inner(gamma(f, I), gamma(g, I), ip) == order * ip(f, g), "unitarity fails on a random pair");
        }
        return std::to_string(pairs) + " random pairs, |W^I| = " + order.get_str();
      }));
  t.push_back(make_case("Psi vectors and T-images", [] {
    auto psi = psi_vectors();
    auto printed = psi_vectors_printed();
    require(psi.omega1 == printed.omega1 && psi.omega12 == printed.omega12 && psi.omega2 == printed.omega2,
            "Psi differs from the display");
    auto T = t_matrix();
    auto img = t_images_printed();
    require(T.apply(psi.omega1) == img.omega1 && T.apply(psi.omega12) == img.omega12 &&
                T.apply(psi.omega2) == img.omega2,
            "T Psi differs from the display");
    return std::string("3 vectors and 3 images");
  }));
  return t;
}

// --- 10: Steinberg freeness and matrix-valued polynomials -------------------

std::vector<Subset> all_subsets(int rank) {
  std::vector<Subset> out;
  for (unsigned b = 0; b < (1u << rank); ++b) {
    Subset s;
    for (int i = 0; i < rank; ++i)
      if (b >> i & 1u) s.insert(i);
    out.push_back(s);
  }
  return out;
}

std::vector<Task> mvop_cases(const VerifyOptions&) {
  std::vector<Task> t;
  t.push_back(make_case("determinants A1, A2", [] {
    int n = 0;
    for (const char* name : {"A1", "A2"}) {
      auto rs = build_root_system(name);
      for (Subset I : all_subsets(rs->rank())) {
        auto s = steinberg_matrix(rs, I);
        LaurentPoly prod = LaurentPoly::constant(rs, 1);
        for (int r = 0; r < rs->num_positive_roots(); ++r) {
          Weight h = rs->positive_roots()[r].weight.half();
          auto f = LaurentPoly::monomial(rs, h) - LaurentPoly::monomial(rs, -h);
          for (int e = 0; e < pair_count(*rs, I, r); ++e) prod = prod * f;
        }
        require(s.det == prod || s.det == -prod, std::string("det mismatch in ") + name);
        ++n;
      }
    }
    return std::to_string(n) + " subsets";
  }));
  t.push_back(make_case("freeness on 200 random vectors", [] {
    std::mt19937_64 rng(kVerifySeed ^ 0xf7eeULL);
    struct Setting {
      RootSystemPtr rs;
      Subset I;
    };
    std::vector<Setting> settings;
    for (const char* name : {"A1", "A2", "B2"}) {
      auto rs = build_root_system(name);
      for (Subset I : all_subsets(rs->rank())) settings.push_back({rs, I});
    }
    const int total = 200;
    for (int n = 0; n < total; ++n) {
      const auto& [rs, I] = settings[n % settings.size()];
      auto gens = steinberg_generators(rs, I);
      VectorPoly v = zero_vector(rs, I);
      std::vector<LaurentPoly> f;
      for (const auto& g : gens) {
        f.push_back(random_invariant(rs, Subset::full(rs->rank()), rng, 1, 2));
        v = v + gamma(g.phi * f.back(), I);
      }
      require(steinberg_coords(v) == f, "coordinates not recovered");
    }
    return std::to_string(total) + " vectors over A1, A2, B2 and all I";
  }));
  for (int kv : {1, 2})
    t.push_back(make_case("M_I(sigma) A2 I={s2} k=" + std::to_string(kv), [kv] {
      auto rs = build_root_system("A2");
      Subset I = Subset::of({1});
      auto k = Multiplicity::uniform(*rs, kv);
      InnerProduct ip(rs, k);
      std::vector<VectorPoly> pulled;
      size_t chi_checked = 0;
      auto check_chi = [&](const ChiPolynomial& p) {
        require(to_chi(p.substitute(rs)) == p, "chi rewrite not inverse to substitution");
        ++chi_checked;
      };
      for (const auto& sigma : dominant_box(*rs, Subset::full(2), 1)) {
        auto m = mvop_matrix(rs, I, sigma, k);
        auto labels = mvop_labels(*rs, I, sigma);
        for (size_t j = 0; j < m.size(); ++j) {
          auto col = column(m, j);
          for (const auto& p : col) check_chi(p);
          auto v = pull_back(col, rs, I);
          require(v == big_p(rs, I, labels[j], k), "Phi_I P(chi) != P_I at " + labels[j].to_string());
          pulled.push_back(v);
        }
      }
      auto w = weight_matrix(rs, I);
      for (const auto& row : w)
        for (const auto& p : row) check_chi(p);
      for (size_t a = 0; a < pulled.size(); ++a)
        for (size_t b = 0; b < pulled.size(); ++b) {
          Rational x = vec_inner(pulled[a], pulled[b], ip);
          require(a == b ? x > 0 : x == 0, "columns " + std::to_string(a) + "," + std::to_string(b) + " not orthogonal");
        }
      return std::to_string(pulled.size()) + " columns, " + std::to_string(chi_checked) + " chi polynomials";
    }));
  return t;
}

std::vector<Task> cases_for(int id, const VerifyOptions& o) {
  switch (id) {
    case 1: return steinberg_cases();
    case 2: return fi_cases(o);
    case 3: return epoly_cases(o);
    case 4: return jacobi_cases(o);
    case 5: return gram_cases(o);
    case 6: return spectral_cases(o);
    case 7: return operator_cases(o);
    case 8: return shimeno_cases(o);
    case 9: return unitarity_cases(o);
    case 10: return mvop_cases(o);
    case 11: return separation_cases(o);
  }
  throw Error(ErrorCode::InvalidInput, "no criterion " + std::to_string(id));
}

}  // namespace

std::vector<Rational> default_kset(std::uint64_t seed) {
  std::vector<Rational> ks{ratio(1, 2), Rational(1), Rational(2), ratio(5, 3)};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> den(2, 9);
  while (ks.size() < 6) {
    int d = den(rng);
    std::uniform_int_distribution<int> num(1, 3 * d);
    Rational k = ratio(num(rng), d);
    if (std::find(ks.begin(), ks.end(), k) == ks.end()) ks.push_back(k);
  }
  return ks;
}

bool CriterionReport::pass() const {
  return !cases.empty() && std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

std::string CriterionReport::summary() const {
  for (const auto& c : cases)
    if (!c.pass) return c.name + ": " + c.detail;
  return std::to_string(cases.size()) + " cases";
}

std::string criterion_title(int id) {
  static const char* titles[] = {"",
                                 "Steinberg generators, v / lambda_v table, alternative generators",
                                 "f_I bijection",
                                 "E(lambda,k): recursion = Gram system, closed forms",
                                 "p_I(lambda,k): symmetrization = Gram system",
                                 "orthogonality of p_I",
                                 "spectral vectors and eigen-equations",
                                 "transported operator matrices",
                                 "Shimeno conjugation identities",
                                 "Gamma unitarity, Psi vectors",
                                 "Steinberg determinant, freeness, matrix-valued polynomials",
                                 "separation of joint eigenvalues"};
  if (id < 1 || id > kNumCriteria) throw Error(ErrorCode::InvalidInput, "no criterion " + std::to_string(id));
  return titles[id];
}

std::vector<int> suite_criteria(const std::string& suite) {
  static const std::map<std::string, std::vector<int>> named{
      {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}},
      {"steinberg", {1, 2}},
      {"epoly", {3}},
      {"jacobi", {4, 5, 6, 11}},
      {"operators", {7, 8}},
      {"vectorize", {9}},
      {"mvop", {10}},
  };
  if (auto it = named.find(suite); it != named.end()) return it->second;
  std::vector<int> ids;
  std::stringstream ss(suite);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::InvalidInput, "unknown suite '" + suite + "'");
    int id = std::stoi(item);
    if (id < 1 || id > kNumCriteria) throw Error(ErrorCode::InvalidInput, "no criterion " + item);
    ids.push_back(id);
  }
  if (ids.empty()) throw Error(ErrorCode::InvalidInput, "empty suite");
  return ids;
}

std::vector<CaseResult> run_cases(const std::vector<Task>& tasks, int jobs) {
  std::vector<CaseResult> out(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next.fetch_add(1)) < tasks.size();) out[i] = tasks[i]();
  };
  int n = std::clamp(jobs, 1, static_cast<int>(std::max<size_t>(tasks.size(), 1)));
  if (n == 1) {
    worker();
    return out;
  }
  std::vector<std::jthread> pool;
  for (int i = 0; i < n; ++i) pool.emplace_back(worker);
  pool.clear();
  return out;
}

CriterionReport run_criterion(int id, const VerifyOptions& opts) {
  if (opts.kset.empty()) throw Error(ErrorCode::InvalidInput, "empty k-set");
  for (const auto& k : opts.kset)
    if (k <= 0) throw Error(ErrorCode::InvalidInput, "k must be positive, got " + to_string(k));
  CriterionReport r{id, criterion_title(id), {}, 0};
  auto t0 = std::chrono::steady_clock::now();
  r.cases = run_cases(cases_for(id, opts), opts.jobs);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CriterionReport> run_suite(const std::vector<int>& ids, const VerifyOptions& opts) {
  std::vector<CriterionReport> out;
  for (int id : ids) out.push_back(run_criterion(id, opts));
  return out;
}

}  // namespace pjp
