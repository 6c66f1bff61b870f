#include "kzaut/tame.hpp"

namespace kzaut {

namespace {

TamenessVerdict classify_validated(const ZPoly& p, const ZXPoly& a, const ZXPoly& b) {
  const ZXPoly ar = reduce_mod_p(a, p);
  const ZXPoly br = reduce_mod_p(b, p);
  TamenessVerdict out;
  out.d1 = ar.degree_x();
  out.e1 = br.degree_x();
  if (out.d1 != 1) {
    out.verdict = Tameness::Wild;
    return out;
  }
  // For a validated automorphism the linear coefficient is a unit mod p;
  // anything else means the input was no automorphism to begin with.
  const ZPoly a1bar(ar.value().coefficient_in(Var::x, 1));
  if (!(ext_gcd(a1bar, p).g == ZPoly(1)))
    throw NotAutomorphismError("classify: linear coefficient is not a unit mod p");

  out.verdict = Tameness::Tame;
  const ASplit s = split_a(p, a);
  const BezoutPair cd = bezout_cd(s.a1, p);
  const ZXPoly b_tilde = split_b(p, s.a0, cd.d, b);
  out.detail = SplitData{s.a0, s.a1, s.a_tilde, b_tilde, cd.c, cd.d};
  return out;
}

}  // namespace

TamenessVerdict classify(const ZPoly& p, const ZXPoly& a) {
  ZXPoly b;
  try {
    b = invert_mod_p(a, p);
  } catch (const NotInvertibleError& e) {
    throw NotAutomorphismError(std::string("classify: a is not invertible mod p (") +
                               e.what() + ")");
  }
  return classify_validated(p, a, b);
}

TamenessVerdict classify(const ZPoly& p, const ZXPoly& a, const ZXPoly& b) {
  if (!check_inverse_pair(a, b, p))
    throw NotAutomorphismError("classify: supplied b is not the inverse of a mod p");
  return classify_validated(p, a, b);
}

ASplit split_a(const ZPoly& p, const ZXPoly& a) {
  ASplit out;
  out.a0 = ZPoly(a.value().coefficient_in(Var::x, 0));
  out.a1 = ZPoly(a.value().coefficient_in(Var::x, 1));
  Polynomial tilde;
  const int dx = a.degree_x();
  for (int k = 2; k <= dx; ++k) {
    const ZPoly ck(a.value().coefficient_in(Var::x, k));
    if (ck.is_zero()) continue;
    const ZDivMod dm = divmod_z(ck, p);
    if (!dm.remainder.is_zero())
      throw NotTameShapeError("split_a: coefficient of x^" + std::to_string(k) +
                              " is not divisible by p");
    tilde += dm.quotient.value() * Polynomial::variable(Var::x, k - 2);
  }
  out.a_tilde = ZXPoly(tilde);
  return out;
}

ZXPoly split_b(const ZPoly& p, const ZPoly& a0, const ZPoly& d, const ZXPoly& b) {
  const Polynomial num =
      b.value() - d.value() * (Polynomial::variable(Var::x) - a0.value());
  try {
    return ZXPoly(exact_div(num, p.value()));
  } catch (const NotDivisibleError&) {
    throw NotDivisibleError("split_b: b - d*(x - a0) is not divisible by p");
  }
}

PolyMap TameCertificate::recompose() const {
  PolyMap acc = factors.empty() ? PolyMap::identity(target.arity()) : factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = compose(acc, factors[i]);
  return acc;
}

bool TameCertificate::validate() const {
  for (const PolyMap& f : factors)
    if (!is_elementary(f) && !is_affine_unit_det(f)) return false;
  return recompose() == target;
}

TameCertificate decompose(const ZPoly& p, const ZXPoly& a, const ZXPoly& b) {
  const TamenessVerdict verdict = classify(p, a, b);
  if (verdict.verdict == Tameness::Wild)
    throw NotTameError("decompose: a has x-degree " + std::to_string(verdict.d1) +
                           " mod p; no elementary factorization exists",
                       verdict.d1);
  const SplitData& s = *verdict.detail;

  const Polynomial xvar = Polynomial::variable(Var::x);
  const Polynomial yvar = Polynomial::variable(Var::y);

  const PolyMap e2_inv(xvar, yvar + s.b_tilde.value());
  const PolyMap e1_inv(xvar + s.a0.value(), yvar);
  const PolyMap linear(s.a1.value() * xvar + p.value() * yvar,
                       s.c.value() * xvar + s.d.value() * yvar);
  const PolyMap e3_inv(xvar, yvar + pow(xvar, 2) * s.a_tilde.value());

  TameCertificate cert{{e2_inv, e1_inv, linear, e3_inv},
                       build_pair(ConstructionInput{p, a, b}).forward()};
  return cert;
}

NagataData nagata() {
  const Polynomial x = Polynomial::variable(Var::x);
  const Polynomial y = Polynomial::variable(Var::y);
  const Polynomial z = Polynomial::variable(Var::z);
  const Polynomial s = x * z + y * y;

  NagataData out{
      PolyMap(x - 2 * s * y - s * s * z, y + s * z, z),
      build_pair(ConstructionInput{ZPoly(z * z), ZXPoly(x + z * x * x),
                                   ZXPoly(x - z * x * x)})};
  return out;
}

TameEquivalences equivalence_report(const ZPoly& p, const ZXPoly& a) {
  const TamenessVerdict v = classify(p, a);
  const bool tame = v.verdict == Tameness::Tame;
  return TameEquivalences{
      tame,
      v.d1,
      tame,
      tame,
      tame,
      tame,
      "the 3-variable statement relies on the Shestakov-Umirbaev tame/wild "
      "theory and is reported, not re-proved"};
}

}  // namespace kzaut
