#include "kzaut/polymap.hpp"

#include <utility>

namespace kzaut {

namespace {

void check_arity(std::size_t n) {
  if (n != 2 && n != 3)
    throw ArityError("polynomial maps have 2 or 3 components, got " + std::to_string(n));
}

}  // namespace

PolyMap::PolyMap(std::vector<Polynomial> components) : comps_(std::move(components)) {
  check_arity(comps_.size());
}

PolyMap::PolyMap(Polynomial c1, Polynomial c2) {
  comps_.push_back(std::move(c1));
  comps_.push_back(std::move(c2));
}

PolyMap::PolyMap(Polynomial c1, Polynomial c2, Polynomial c3) {
  comps_.push_back(std::move(c1));
  comps_.push_back(std::move(c2));
  comps_.push_back(std::move(c3));
}

PolyMap PolyMap::identity(int arity) {
  check_arity(static_cast<std::size_t>(arity));
  std::vector<Polynomial> comps;
  for (int i = 0; i < arity; ++i) comps.push_back(Polynomial::variable(kVars[i]));
  return PolyMap(std::move(comps));
}

PolyMap compose(const PolyMap& f, const PolyMap& g) {
  if (f.arity() != g.arity())
    throw ArityMismatchError("compose: maps have different arity");
  Substitution s;
  s.set(Var::x, g[0]).set(Var::y, g[1]);
  if (f.arity() == 3) s.set(Var::z, g[2]);
  std::vector<Polynomial> comps;
  for (int i = 0; i < f.arity(); ++i) comps.push_back(substitute(f[i], s));
  return PolyMap(std::move(comps));
}

bool verify_inverse(const PolyMap& f, const PolyMap& g) {
  if (f.arity() != g.arity())
    throw ArityMismatchError("verify_inverse: maps have different arity");
  const PolyMap id = PolyMap::identity(f.arity());
  return compose(f, g) == id && compose(g, f) == id;
}

std::optional<ElementaryMap> is_elementary(const PolyMap& f) {
  int target = -1;
  for (int i = 0; i < f.arity(); ++i) {
    if (f[i] == Polynomial::variable(PolyMap::slot_var(i))) continue;
    if (target >= 0) return std::nullopt;  // more than one component moved
    target = i;
  }
  if (target < 0) return std::nullopt;

  const Var v = PolyMap::slot_var(target);
  const Polynomial& q = f[target];
  if (degree_in(q, v) != 1) return std::nullopt;
  const Polynomial lin = q.coefficient_in(v, 1);
  if (!lin.is_constant()) return std::nullopt;  // unit must lie in k*
  const Rational unit = lin.constant_term();
  Polynomial shift = q - Polynomial::term(unit, Monomial::variable(v));
  return ElementaryMap{target, unit, std::move(shift)};
}

bool is_affine_unit_det(const PolyMap& f) {
  if (f.arity() != 2) return false;
  for (int i = 0; i < 2; ++i)
    for (const auto& [m, c] : f[i].terms())
      if (m.exponent(Var::x) + m.exponent(Var::y) > 1) return false;
  const Polynomial det = f[0].coefficient_in(Var::x, 1) * f[1].coefficient_in(Var::y, 1) -
                         f[0].coefficient_in(Var::y, 1) * f[1].coefficient_in(Var::x, 1);
  return det.is_constant() && !det.is_zero();
}

}  // namespace kzaut
