#pragma once

#include <string>

#include "kzaut/derivation.hpp"
#include "kzaut/groebner.hpp"

namespace kzaut {

enum class CoordinateVerdict { Coordinate, NotCoordinate };

// Outcome of the two-part coordinate criterion: the Jacobian derivation
// f_y d/dx - f_x d/dy must be locally nilpotent and 1 must lie in the ideal
// (f_x, f_y). Coordinate iff both hold.
struct CoordinateReport {
  bool lnd_ok;
  bool unimodular_ok;
  CoordinateVerdict verdict;
  int degree_bound;  // d + 2, d = max of the x and y degrees of f_x, f_y
  NilpotencyReport nilpotency;

  bool is_coordinate() const { return verdict == CoordinateVerdict::Coordinate; }
};

// Decides whether f is a k[z]-coordinate of k[z][x, y]. ConstantInputError
// for constant f; StepLimitExceededError propagates from the ideal test.
CoordinateReport coordinate_test_z(const Polynomial& f,
                                   std::size_t spair_cap = kDefaultSPairCap);

// Same criterion for f in k[x, y]; HasZVariableError when f mentions z.
CoordinateReport coordinate_test_2var(const Polynomial& f,
                                      std::size_t spair_cap = kDefaultSPairCap);

// f with z replaced by the constant b.
Polynomial fiber_slice(const Polynomial& f, const Rational& b);

// Combined report: the z = a slice tested as a 2-variable coordinate plus
// the full k[z]-coordinate test. The hypothesis that the quotient by f is a
// polynomial ring in two variables is recorded as assumed, never verified;
// the z-test certificate is independently sufficient.
struct SliceTestReport {
  Rational slice_value;
  bool slice_coordinate_ok;
  bool z_coordinate_ok;
  std::string hypothesis_note;
  CoordinateReport slice_report;
  CoordinateReport z_report;
};

SliceTestReport slice_test(const Polynomial& f, const Rational& a,
                           std::size_t spair_cap = kDefaultSPairCap);

}  // namespace kzaut
