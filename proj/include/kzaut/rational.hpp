#pragma once

#include <gmpxx.h>

#include <string>

namespace kzaut {

// Exact rational scalar. GMP keeps values canonical: gcd(|num|, den) = 1,
// den >= 1, zero stored as 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// "a" for integers, "a/b" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace kzaut
