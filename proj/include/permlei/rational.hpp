#pragma once

#include <gmpxx.h>

#include <string>

namespace permlei {

// Ground field: exact rationals. mpq_class keeps values in lowest terms
// with positive denominator after canonicalize(), which is the invariant
// the whole library relies on.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "p" or "p/q" with q > 0, as in fixture files.
Rational rat_parse(const std::string& s);

// Lowest terms, "/1" omitted.
std::string rat_str(const Rational& q);

}  // namespace permlei
