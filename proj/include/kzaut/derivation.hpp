#pragma once

#include <optional>
#include <utility>

#include "kzaut/polymap.hpp"
#include "kzaut/polynomial.hpp"

namespace kzaut {

// Derivation of k[x,y,z] given by the images of the generators; extends to
// the whole ring by the Leibniz rule.
struct Derivation {
  Polynomial image_x;
  Polynomial image_y;
  Polynomial image_z;
};

// f_y d/dx - f_x d/dy (z-constant).
Derivation jacobian_derivation(const Polynomial& f);

Polynomial apply(const Derivation& d, const Polynomial& g);

struct NilpotencyReport {
  bool is_lnd;
  int bound_used;
  // When not locally nilpotent within the bound: the generator whose
  // iterate survived, and that iterate.
  std::optional<std::pair<Var, Polynomial>> witness;
};

// Decides local nilpotency by iterating the generators x and y: with
// image_z = 0 that suffices for the whole algebra. bound >= 1;
// UnsupportedDerivationError when image_z != 0.
NilpotencyReport lnd_check(const Derivation& d, int bound);

// exp(sD) as a 3-component map: components sum s^n D^n(v) / n! for each
// generator v. Requires image_z = 0, D(s) = 0 (KernelViolationError) and
// generator iterates vanishing within max_steps (NotLocallyNilpotentError).
// The inverse is exp_map(d, -s).
PolyMap exp_map(const Derivation& d, const Polynomial& s, int max_steps = 64);

}  // namespace kzaut
