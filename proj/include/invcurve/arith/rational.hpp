#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace invcurve::arith {

using Integer = mpz_class;
// gmp keeps mpq_class canonical: gcd(num, den) = 1 and den > 0.
using Rational = mpq_class;

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline std::string to_string(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational parse_rational(std::string_view num, std::string_view den = "1");

// Content gcd helper; gcd(0, 0) = 0.
inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace invcurve::arith
