#pragma once

#include "kzaut/polynomial.hpp"

namespace kzaut {

// Polynomial in z alone; houses moduli p and Bezout data.
class ZPoly {
 public:
  ZPoly() = default;
  ZPoly(int c) : value_(c) {}
  explicit ZPoly(Polynomial v);

  const Polynomial& value() const { return value_; }
  int degree() const { return degree_in(value_, Var::z); }
  bool is_zero() const { return value_.is_zero(); }

  friend bool operator==(const ZPoly&, const ZPoly&) = default;

 private:
  Polynomial value_;
};

// Polynomial in z and x (no y); houses a(z, x) and b(z, x).
class ZXPoly {
 public:
  ZXPoly() = default;
  ZXPoly(int c) : value_(c) {}
  explicit ZXPoly(Polynomial v);

  const Polynomial& value() const { return value_; }
  int degree_x() const { return degree_in(value_, Var::x); }
  bool is_zero() const { return value_.is_zero(); }

  friend bool operator==(const ZXPoly&, const ZXPoly&) = default;

 private:
  Polynomial value_;
};

struct ZDivMod {
  ZPoly quotient;
  ZPoly remainder;
};

// Univariate division in Q[z]; b nonzero.
ZDivMod divmod_z(const ZPoly& a, const ZPoly& b);

// Every z-coefficient replaced by its remainder mod p; the result has
// z-degree < deg p in each x-coefficient. Requires deg p >= 1.
ZXPoly reduce_mod_p(const ZXPoly& q, const ZPoly& p);

struct ExtGcdResult {
  ZPoly g;  // monic gcd
  ZPoly u;
  ZPoly v;  // u*a + v*b = g
};

// Extended Euclid in Q[z]; inputs not both zero.
ExtGcdResult ext_gcd(const ZPoly& a, const ZPoly& b);

struct BezoutPair {
  ZPoly c;
  ZPoly d;  // d*a1 - c*p = 1, deg d < deg p
};

// Witnesses that a1 is a unit mod p; NotCoprimeError when gcd(a1, p) != 1.
BezoutPair bezout_cd(const ZPoly& a1, const ZPoly& p);

// Squarefree part p / gcd(p, p'), monic; p nonzero.
ZPoly radical(const ZPoly& p);

// True iff a(b(x)) and b(a(x)) both reduce to x mod p.
bool check_inverse_pair(const ZXPoly& a, const ZXPoly& b, const ZPoly& p);

// The inverse b of a in (k[z]/(p))[x], reduced mod p. a must reduce to
// unit*x + shift modulo radical(p) with the unit coprime to p; otherwise
// NotInvertibleError. Found by a Newton lift from the affine inverse over
// the reduced quotient.
ZXPoly invert_mod_p(const ZXPoly& a, const ZPoly& p);

}  // namespace kzaut
