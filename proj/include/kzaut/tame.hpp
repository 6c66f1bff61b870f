#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kzaut/construct.hpp"
#include "kzaut/modring.hpp"
#include "kzaut/polymap.hpp"

namespace kzaut {

enum class Tameness { Tame, Wild };

// The exact split a = a0 + a1*x + p*x^2*a_tilde together with the Bezout
// pair d*a1 - c*p = 1 and the cofactor b = d*(x - a0) + p*b_tilde.
struct SplitData {
  ZPoly a0;
  ZPoly a1;
  ZXPoly a_tilde;
  ZXPoly b_tilde;
  ZPoly c;
  ZPoly d;
};

// Tame iff d1 = 1; when Wild, d1 >= 2. e1 (x-degree of b mod p) is a
// diagnostic with no algorithmic role.
struct TamenessVerdict {
  Tameness verdict;
  int d1;
  std::optional<int> e1;
  std::optional<SplitData> detail;  // present when Tame
};

// Classifies the automorphism x -> a(z, x) of (k[z]/(p))[x]. The overload
// without b validates via invert_mod_p; the other validates the supplied b
// with check_inverse_pair. NotAutomorphismError when validation fails.
TamenessVerdict classify(const ZPoly& p, const ZXPoly& a);
TamenessVerdict classify(const ZPoly& p, const ZXPoly& a, const ZXPoly& b);

struct ASplit {
  ZPoly a0;
  ZPoly a1;
  ZXPoly a_tilde;
};

// a = a0 + a1*x + p*x^2*a_tilde exactly; NotTameShapeError when some
// coefficient of x^i, i >= 2, is not divisible by p.
ASplit split_a(const ZPoly& p, const ZXPoly& a);

// b_tilde with b = d*(x - a0) + p*b_tilde exactly; NotDivisibleError for an
// inconsistent pair.
ZXPoly split_b(const ZPoly& p, const ZPoly& a0, const ZPoly& d, const ZXPoly& b);

// Ordered factor list whose left-to-right composition equals the target
// exactly; each factor is elementary or affine with unit determinant.
struct TameCertificate {
  std::vector<PolyMap> factors;
  PolyMap target;

  PolyMap recompose() const;
  bool validate() const;
};

// Factors [E2^-1, E1^-1, L, E3^-1] with
//   E1^-1 = (x + a0, y)   E2^-1 = (x, y + b_tilde(x))
//   L = (a1*x + p*y, c*x + d*y)   E3^-1 = (x, y + x^2*a_tilde(x))
// composing to (f1, f2); L has determinant a1*d - p*c = 1.
// NotTameError (carrying d1) for wild inputs.
TameCertificate decompose(const ZPoly& p, const ZXPoly& a, const ZXPoly& b);

// The classical wild automorphism of k[x,y,z] together with the 2-variable
// construction it conjugates to (p = z^2, a = x + z*x^2, b = x - z*x^2).
struct NagataData {
  PolyMap sigma;  // (x - 2sy - s^2 z, y + sz, z), s = xz + y^2
  ConstructionResult construction;
};

NagataData nagata();

// The four equivalent tameness statements for the constructed maps; all
// share the truth value of classify. The 3-variable statement rests on the
// Shestakov-Umirbaev tame/wild theory and is reported, not re-proved.
struct TameEquivalences {
  bool tame;
  int d1;
  bool aut3_tame;      // (f1, f2, z) tame over k
  bool aut2_tame;      // (f1, f2) tame over k[z]
  bool one_var_tame;   // a tame in Aut of (k[z]/(p))[x]
  bool degree_one;     // deg_x of a mod p equals 1
  std::string annotation;
};

TameEquivalences equivalence_report(const ZPoly& p, const ZXPoly& a);

}  // namespace kzaut
