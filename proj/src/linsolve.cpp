#include "pjp/linsolve.hpp"

#include <cstdint>
#include <optional>

#include "pjp/error.hpp"

namespace pjp {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

const std::vector<u64>& primes() {
  static const std::vector<u64> ps = [] {
    std::vector<u64> out;
    mpz_class p = mpz_class(1) << 62;
    for (int i = 0; i < 4096; ++i) {
      mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
      out.push_back(p.get_ui());
    }
    return out;
  }();
  return ps;
}

u64 reduce(const mpz_class& z, u64 p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  // mpz_fdiv_r_ui returns the remainder in [0, p)
  return r.get_ui();
}

// Solution mod p, or nullopt when A is singular mod p.
std::optional<std::vector<u64>> solve_mod(const std::vector<std::vector<mpz_class>>& A, const std::vector<mpz_class>& b,
                                          u64 p) {
  const size_t n = b.size();
  std::vector<std::vector<u64>> M(n, std::vector<u64>(n + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) M[i][j] = reduce(A[i][j], p);
    M[i][n] = reduce(b[i], p);
  }
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && M[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(M[piv], M[c]);
    u64 inv = powmod(M[c][c], p - 2, p);
    for (size_t j = c; j <= n; ++j) M[c][j] = mulmod(M[c][j], inv, p);
    for (size_t i = 0; i < n; ++i) {
      if (i == c || M[i][c] == 0) continue;
      u64 f = M[i][c];
      for (size_t j = c; j <= n; ++j) {
        u64 t = mulmod(f, M[c][j], p);
        M[i][j] = M[i][j] >= t ? M[i][j] - t : M[i][j] + p - t;
      }
    }
  }
  std::vector<u64> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = M[i][n];
  return x;
}

// a/b ≡ r mod m with |a|, b ≤ sqrt(m/2)
std::optional<Rational> reconstruct(const mpz_class& r, const mpz_class& m) {
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = r, t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    mpz_class t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rational q(r1, t1);
  q.canonicalize();
  return q;
}

bool check(const RMatrix& A, const RVec& b, const RVec& x) {
  for (size_t i = 0; i < A.size(); ++i) {
    Rational s = 0;
    for (size_t j = 0; j < x.size(); ++j)
      if (A[i][j] != 0 && x[j] != 0) s += A[i][j] * x[j];
    if (s != b[i]) return false;
  }
  return true;
}

}  // namespace

RVec solve_gauss(RMatrix A, RVec b) {
  const size_t n = b.size();
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && A[piv][c] == 0) ++piv;
    if (piv == n) throw Error(ErrorCode::SingularGram, "singular linear system of size " + std::to_string(n));
    std::swap(A[piv], A[c]);
    std::swap(b[piv], b[c]);
    for (size_t i = c + 1; i < n; ++i) {
      if (A[i][c] == 0) continue;
      Rational f = A[i][c] / A[c][c];
      for (size_t j = c; j < n; ++j) A[i][j] -= f * A[c][j];
      b[i] -= f * b[c];
    }
  }
  RVec x(n);
  for (size_t i = n; i-- > 0;) {
    Rational s = b[i];
    for (size_t j = i + 1; j < n; ++j) s -= A[i][j] * x[j];
    x[i] = s / A[i][i];
  }
  return x;
}

RVec solve_exact(const RMatrix& A, const RVec& b) {
  const size_t n = b.size();
  if (n == 0) return {};
  // integer rows: scale each equation by the lcm of its denominators
  std::vector<std::vector<mpz_class>> Z(n, std::vector<mpz_class>(n));
  std::vector<mpz_class> zb(n);
  for (size_t i = 0; i < n; ++i) {
    mpz_class l = b[i].get_den();
    for (size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), A[i][j].get_den_mpz_t());
    for (size_t j = 0; j < n; ++j) Z[i][j] = A[i][j].get_num() * (l / A[i][j].get_den());
    zb[i] = b[i].get_num() * (l / b[i].get_den());
  }
  mpz_class modulus = 1;
  std::vector<mpz_class> residues(n);
  int singular_hits = 0, since_check = 0, step = 1;
  for (u64 p : primes()) {
    auto xs = solve_mod(Z, zb, p);
    if (!xs) {
      if (++singular_hits >= 3) break;
      continue;
    }
    // CRT: x ≡ residues mod modulus, x ≡ xs mod p
    mpz_class pz(static_cast<unsigned long>(p)), inv;
    mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
    for (size_t i = 0; i < n; ++i) {
      mpz_class diff = mpz_class(static_cast<unsigned long>((*xs)[i])) - residues[i];
      mpz_class t = (diff * inv) % pz;
      if (t < 0) t += pz;
      residues[i] += modulus * t;
    }
    modulus *= pz;
    if (++since_check < step) continue;
    since_check = 0;
    step = std::min(step * 2, 16);
    RVec x(n);
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i) {
      auto q = reconstruct(residues[i], modulus);
      if (!q) ok = false;
      else x[i] = *q;
    }
    if (ok && check(A, b, x)) return x;
  }
  return solve_gauss(A, b);
}

}  // namespace pjp
