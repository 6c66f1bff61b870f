#pragma once

#include <optional>
#include <vector>

#include "kzaut/polynomial.hpp"

namespace kzaut {

// Polynomial endomorphism given by component polynomials, composed by
// substitution. Arity counts the acted-on variables: 2-ary maps act on
// (x, y) with z carried along as an inert coefficient variable, 3-ary maps
// act on (x, y, z).
class PolyMap {
 public:
  explicit PolyMap(std::vector<Polynomial> components);
  PolyMap(Polynomial c1, Polynomial c2);
  PolyMap(Polynomial c1, Polynomial c2, Polynomial c3);

  static PolyMap identity(int arity);

  int arity() const { return static_cast<int>(comps_.size()); }
  const Polynomial& operator[](int i) const { return comps_[i]; }
  const std::vector<Polynomial>& components() const { return comps_; }

  // The variable slot i acts on: x, y (, z).
  static Var slot_var(int i) { return kVars[i]; }

  friend bool operator==(const PolyMap&, const PolyMap&) = default;

 private:
  std::vector<Polynomial> comps_;
};

// (F o G)_i = F_i(G): G's components are substituted into each F_i.
// For arity 2, z maps to itself.
PolyMap compose(const PolyMap& f, const PolyMap& g);

// True iff F o G and G o F are both the identity.
bool verify_inverse(const PolyMap& f, const PolyMap& g);

// One variable replaced by unit * variable + shift, unit in k*, shift free
// of the target variable.
struct ElementaryMap {
  int target_index;
  Rational unit;
  Polynomial shift;
};

// Recognizes maps where exactly one component differs from its variable and
// that component is unit * var + shift as above. The identity map has no
// differing component and is not recognized.
std::optional<ElementaryMap> is_elementary(const PolyMap& f);

// 2-ary maps of the form (a*x + b*y + e, c*x + d*y + h) with a..d, e, h in
// k[z] and determinant a*d - b*c a nonzero constant.
bool is_affine_unit_det(const PolyMap& f);

}  // namespace kzaut
