#pragma once

#include "kzaut/modring.hpp"
#include "kzaut/polymap.hpp"

namespace kzaut {

// (p, a, b) with p not constant and a, b mutually inverse mod p.
struct ConstructionInput {
  ZPoly p;
  ZXPoly a;
  ZXPoly b;
};

// The automorphism pair built from a one-variable automorphism over
// k[z]/(p):
//   f1 = p*y + a(z, x)        p*f2 = b(z, f1) - x
//   g1 = b(z, x) - p*y        p*g2 = x - a(z, g1)
// with (g1, g2) the exact inverse of (f1, f2).
struct ConstructionResult {
  Polynomial f1, f2, g1, g2;
  ConstructionInput input;

  PolyMap forward() const { return PolyMap(f1, f2); }
  PolyMap inverse() const { return PolyMap(g1, g2); }
};

// CongruenceFailedError (with the offending remainder as witness) when a, b
// are not mutually inverse mod p.
ConstructionResult build_pair(const ConstructionInput& in);

// Convenience overload computing b = invert_mod_p(a, p).
ConstructionResult build_pair(const ZPoly& p, const ZXPoly& a);

// Appends the component z: (f1; f2) -> (f1; f2; z).
PolyMap embed_3var(const PolyMap& f);

}  // namespace kzaut
