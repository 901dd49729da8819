#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace pjp {

using Rational = mpq_class;
using RVec = std::vector<Rational>;

// Always "p/q", also for integers ("3/1").
std::string to_string(const Rational& q);

// Accepts "p/q" or "p"; throws Error(InvalidInput).
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

// Canonicalized n/d (the two-argument mpq_class constructor does not reduce).
inline Rational ratio(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace pjp
