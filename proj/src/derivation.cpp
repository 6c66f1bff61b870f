#include "kzaut/derivation.hpp"

#include <stdexcept>

namespace kzaut {

Derivation jacobian_derivation(const Polynomial& f) {
  return Derivation{partial(f, Var::y), -partial(f, Var::x), Polynomial()};
}

Polynomial apply(const Derivation& d, const Polynomial& g) {
  return d.image_x * partial(g, Var::x) + d.image_y * partial(g, Var::y) +
         d.image_z * partial(g, Var::z);
}

NilpotencyReport lnd_check(const Derivation& d, int bound) {
  if (bound < 1) throw std::invalid_argument("lnd_check: bound must be >= 1");
  if (!d.image_z.is_zero())
    throw UnsupportedDerivationError("lnd_check: derivation must fix z (image_z = 0)");
  for (Var v : {Var::x, Var::y}) {
    Polynomial it = Polynomial::variable(v);
    for (int step = 0; step < bound && !it.is_zero(); ++step) it = apply(d, it);
    if (!it.is_zero()) return NilpotencyReport{false, bound, std::pair{v, it}};
  }
  return NilpotencyReport{true, bound, std::nullopt};
}

PolyMap exp_map(const Derivation& d, const Polynomial& s, int max_steps) {
  if (!d.image_z.is_zero())
    throw UnsupportedDerivationError("exp_map: derivation must fix z (image_z = 0)");
  if (!apply(d, s).is_zero())
    throw KernelViolationError("exp_map: s is not in the kernel of D");

  std::vector<Polynomial> comps;
  for (Var v : kVars) {
    Polynomial sum = Polynomial::variable(v);
    Polynomial iterate = sum;
    Polynomial s_power(1);
    Integer n_factorial(1);
    int n = 0;
    while (true) {
      iterate = apply(d, iterate);
      if (iterate.is_zero()) break;
      if (++n > max_steps)
        throw NotLocallyNilpotentError(
            "exp_map: generator iterate did not vanish within the step cap");
      s_power *= s;
      n_factorial *= n;
      sum += Polynomial(make_rational(Integer(1), n_factorial)) * s_power * iterate;
    }
    comps.push_back(std::move(sum));
  }
  return PolyMap(std::move(comps));
}

}  // namespace kzaut
