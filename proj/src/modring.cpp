#include "kzaut/modring.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace kzaut {

namespace {

void require_no_y(const Polynomial& v, bool allow_x, const char* what) {
  for (const auto& [m, c] : v.terms()) {
    if (m.exponent(Var::y) != 0)
      throw std::invalid_argument(std::string(what) + ": variable y not allowed");
    if (!allow_x && m.exponent(Var::x) != 0)
      throw std::invalid_argument(std::string(what) + ": variable x not allowed");
  }
}

std::vector<Rational> to_dense(const ZPoly& p) {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(0, p.degree() + 1)));
  for (const auto& [m, q] : p.value().terms()) c[m.exponent(Var::z)] = q;
  return c;
}

ZPoly from_dense(const std::vector<Rational>& c) {
  Polynomial out;
  for (std::size_t i = 0; i < c.size(); ++i)
    out += Polynomial::term(c[i], Monomial::variable(Var::z, static_cast<int>(i)));
  return ZPoly(out);
}

ZPoly make_monic(const ZPoly& p) {
  if (p.is_zero()) return p;
  return ZPoly(Polynomial(Rational(1) / p.value().leading_coefficient()) * p.value());
}

int ceil_log2(int n) {
  int k = 0;
  while ((1 << k) < n) ++k;
  return k;
}

// Inverse of the z-polynomial w0 modulo p; gcd(w0, p) must be 1.
ZPoly invert_scalar_mod_p(const ZPoly& w0, const ZPoly& p) {
  if (w0.is_zero()) throw NotInvertibleError("zero is not a unit mod p");
  ExtGcdResult eg = ext_gcd(w0, p);
  if (!(eg.g == ZPoly(1)))
    throw NotInvertibleError("coefficient shares a factor with the modulus");
  return divmod_z(eg.u, p).remainder;
}

// Reciprocal of a unit w of (k[z]/(p))[x]: Newton iteration t <- t(2 - w t),
// seeded with the inverse of w's x-constant coefficient. A unit has that
// coefficient invertible and all higher x-coefficients nilpotent mod p.
ZXPoly invert_unit_mod_p(const ZXPoly& w, const ZPoly& p) {
  const ZPoly w0(w.value().coefficient_in(Var::x, 0));
  ZXPoly t(invert_scalar_mod_p(w0, p).value());
  const int cap = ceil_log2(std::max(2, p.degree())) + 3;
  for (int i = 0; i <= cap; ++i) {
    const ZXPoly prod = reduce_mod_p(ZXPoly(w.value() * t.value()), p);
    if (prod.value() == Polynomial(1)) return t;
    if (i == cap) break;
    t = reduce_mod_p(ZXPoly(t.value() * (Polynomial(2) - prod.value())), p);
  }
  throw NotInvertibleError("not a unit modulo p");
}

}  // namespace

ZPoly::ZPoly(Polynomial v) : value_(std::move(v)) {
  require_no_y(value_, /*allow_x=*/false, "ZPoly");
}

ZXPoly::ZXPoly(Polynomial v) : value_(std::move(v)) {
  require_no_y(value_, /*allow_x=*/true, "ZXPoly");
}

ZDivMod divmod_z(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("divmod_z: zero divisor");
  const int da = a.degree();
  const int db = b.degree();
  if (da < db) return {ZPoly(), a};
  std::vector<Rational> r = to_dense(a);
  const std::vector<Rational> bb = to_dense(b);
  std::vector<Rational> q(static_cast<std::size_t>(da - db + 1));
  for (int i = da; i >= db; --i) {
    if (r[i] == 0) continue;
    const Rational f = r[i] / bb[db];
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * bb[j];
  }
  r.resize(static_cast<std::size_t>(db));
  return {from_dense(q), from_dense(r)};
}

ZXPoly reduce_mod_p(const ZXPoly& q, const ZPoly& p) {
  if (p.degree() < 1)
    throw ConstantModulusError("modulus must have z-degree >= 1");
  Polynomial out;
  const int dx = q.degree_x();
  for (int k = 0; k <= dx; ++k) {
    const ZPoly ck(q.value().coefficient_in(Var::x, k));
    const ZPoly rk = divmod_z(ck, p).remainder;
    out += rk.value() * Polynomial::variable(Var::x, k);
  }
  return ZXPoly(out);
}

ExtGcdResult ext_gcd(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() && b.is_zero())
    throw std::invalid_argument("ext_gcd: both arguments zero");
  Polynomial r0 = a.value(), r1 = b.value();
  Polynomial s0(1), s1(0), t0(0), t1(1);
  while (!r1.is_zero()) {
    const ZDivMod dm = divmod_z(ZPoly(r0), ZPoly(r1));
    const Polynomial& q = dm.quotient.value();
    Polynomial r2 = dm.remainder.value();
    Polynomial s2 = s0 - q * s1;
    Polynomial t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const Rational lc = r0.leading_coefficient();
  const Polynomial scale(Rational(1) / lc);
  return {ZPoly(scale * r0), ZPoly(scale * s0), ZPoly(scale * t0)};
}

BezoutPair bezout_cd(const ZPoly& a1, const ZPoly& p) {
  if (p.degree() < 1)
    throw ConstantModulusError("modulus must have z-degree >= 1");
  if (a1.is_zero()) throw NotCoprimeError("gcd(0, p) = p is not 1");
  const ExtGcdResult eg = ext_gcd(a1, p);
  if (!(eg.g == ZPoly(1)))
    throw NotCoprimeError("linear coefficient shares a factor with the modulus");
  const ZPoly d = divmod_z(eg.u, p).remainder;
  // d*a1 = 1 (mod p), so the correction c is exact.
  const ZPoly c(exact_div(d.value() * a1.value() - Polynomial(1), p.value()));
  return {c, d};
}

ZPoly radical(const ZPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("radical: zero argument");
  const ZPoly dp(partial(p.value(), Var::z));
  if (dp.is_zero()) return ZPoly(1);  // nonzero constant
  const ZPoly g = ext_gcd(p, dp).g;
  return make_monic(ZPoly(exact_div(p.value(), g.value())));
}

bool check_inverse_pair(const ZXPoly& a, const ZXPoly& b, const ZPoly& p) {
  const Polynomial xvar = Polynomial::variable(Var::x);
  const ZXPoly ab(substitute_var(a.value(), Var::x, b.value()));
  if (!(reduce_mod_p(ab, p).value() == xvar)) return false;
  const ZXPoly ba(substitute_var(b.value(), Var::x, a.value()));
  return reduce_mod_p(ba, p).value() == xvar;
}

ZXPoly invert_mod_p(const ZXPoly& a, const ZPoly& p) {
  if (p.degree() < 1)
    throw ConstantModulusError("modulus must have z-degree >= 1");
  const ZPoly rad = radical(p);
  const ZXPoly ar = reduce_mod_p(a, rad);
  if (ar.degree_x() != 1)
    throw NotInvertibleError("reduction mod radical(p) is not affine in x");
  const ZPoly u(ar.value().coefficient_in(Var::x, 1));
  const ZPoly v(ar.value().coefficient_in(Var::x, 0));
  const ZPoly u_inv = invert_scalar_mod_p(u, p);

  // Affine inverse over the reduced quotient, then Newton lift mod p.
  const Polynomial xvar = Polynomial::variable(Var::x);
  ZXPoly b = reduce_mod_p(ZXPoly(u_inv.value() * (xvar - v.value())), p);
  const Polynomial da = partial(a.value(), Var::x);
  const int cap = ceil_log2(std::max(2, p.degree())) + 3;
  for (int i = 0; i <= cap; ++i) {
    const ZXPoly err =
        reduce_mod_p(ZXPoly(substitute_var(a.value(), Var::x, b.value()) - xvar), p);
    if (err.is_zero()) {
      if (!check_inverse_pair(a, b, p))
        throw NotInvertibleError("lift converged one-sided only");
      return b;
    }
    if (i == cap) break;
    const ZXPoly deriv = reduce_mod_p(ZXPoly(substitute_var(da, Var::x, b.value())), p);
    const ZXPoly dinv = invert_unit_mod_p(deriv, p);
    b = reduce_mod_p(ZXPoly(b.value() - err.value() * dinv.value()), p);
  }
  throw NotInvertibleError("Newton lift did not converge");
}

}  // namespace kzaut
