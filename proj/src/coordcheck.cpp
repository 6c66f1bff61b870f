#include "kzaut/coordcheck.hpp"

#include <algorithm>

namespace kzaut {

namespace {

CoordinateReport run_test(const Polynomial& f, std::size_t spair_cap) {
  const Polynomial fx = partial(f, Var::x);
  const Polynomial fy = partial(f, Var::y);
  const int d = std::max({degree_in(fx, Var::x), degree_in(fx, Var::y),
                          degree_in(fy, Var::x), degree_in(fy, Var::y)});
  const int bound = d + 2;  // complete for Jacobian derivations of coordinates

  const Derivation jac = jacobian_derivation(f);
  const NilpotencyReport nil = lnd_check(jac, bound);
  const bool unimodular = contains_one({fx, fy}, spair_cap);

  return CoordinateReport{nil.is_lnd, unimodular,
                          nil.is_lnd && unimodular ? CoordinateVerdict::Coordinate
                                                   : CoordinateVerdict::NotCoordinate,
                          bound, nil};
}

}  // namespace

CoordinateReport coordinate_test_z(const Polynomial& f, std::size_t spair_cap) {
  if (f.is_constant()) throw ConstantInputError("coordinate_test_z: constant input");
  return run_test(f, spair_cap);
}

CoordinateReport coordinate_test_2var(const Polynomial& f, std::size_t spair_cap) {
  if (degree_in(f, Var::z) > 0)
    throw HasZVariableError("coordinate_test_2var: input mentions z");
  if (f.is_constant())
    throw ConstantInputError("coordinate_test_2var: constant input");
  return run_test(f, spair_cap);
}

Polynomial fiber_slice(const Polynomial& f, const Rational& b) {
  return substitute_var(f, Var::z, Polynomial(b));
}

SliceTestReport slice_test(const Polynomial& f, const Rational& a,
                           std::size_t spair_cap) {
  const CoordinateReport slice = coordinate_test_2var(fiber_slice(f, a), spair_cap);
  const CoordinateReport full = coordinate_test_z(f, spair_cap);
  return SliceTestReport{
      a,
      slice.is_coordinate(),
      full.is_coordinate(),
      "assumes, without verifying, that the quotient ring modulo f is a "
      "polynomial ring in two variables; the z-test certificate is "
      "independently sufficient",
      slice,
      full};
}

}  // namespace kzaut
