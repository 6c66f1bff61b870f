#include "kzaut/construct.hpp"

#include "kzaut/textio.hpp"

namespace kzaut {

ConstructionResult build_pair(const ConstructionInput& in) {
  const ZPoly& p = in.p;
  if (p.degree() < 1)
    throw ConstantModulusError("build_pair: p must have z-degree >= 1");

  // Validate the congruence a(b(x)) = x = b(a(x)) mod p up front; the
  // witness is the remainder of b(a(x)) - x.
  if (!check_inverse_pair(in.a, in.b, p)) {
    const ZXPoly ba(substitute_var(in.b.value(), Var::x, in.a.value()));
    const ZXPoly rem = reduce_mod_p(
        ZXPoly(ba.value() - Polynomial::variable(Var::x)), p);
    throw CongruenceFailedError("build_pair: a and b are not mutually inverse mod p",
                                print_canonical(rem.value()));
  }

  const Polynomial yvar = Polynomial::variable(Var::y);
  const Polynomial xvar = Polynomial::variable(Var::x);

  ConstructionResult out;
  out.input = in;
  out.f1 = p.value() * yvar + in.a.value();
  out.f2 = exact_div(substitute_var(in.b.value(), Var::x, out.f1) - xvar, p.value());
  out.g1 = in.b.value() - p.value() * yvar;
  out.g2 = exact_div(xvar - substitute_var(in.a.value(), Var::x, out.g1), p.value());
  return out;
}

ConstructionResult build_pair(const ZPoly& p, const ZXPoly& a) {
  return build_pair(ConstructionInput{p, a, invert_mod_p(a, p)});
}

PolyMap embed_3var(const PolyMap& f) {
  if (f.arity() != 2)
    throw ArityMismatchError("embed_3var: expected a 2-component map");
  return PolyMap(f[0], f[1], Polynomial::variable(Var::z));
}

}  // namespace kzaut
