#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>

#include "kzaut/errors.hpp"
#include "kzaut/monomial.hpp"
#include "kzaut/rational.hpp"

namespace kzaut {

// Sparse multivariate polynomial over Q in the ordered variables (x, y, z).
// Terms are stored in descending canonical order with no zero coefficients,
// so structural equality is mathematical equality. Values are immutable in
// spirit: every operation returns a fresh polynomial.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, DescendingMonomial>;

  Polynomial() = default;  // zero
  Polynomial(int c) : Polynomial(Rational(c)) {}
  Polynomial(const Rational& c);

  static Polynomial variable(Var v, int power = 1);
  static Polynomial term(const Rational& c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }

  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  // Leading data in the canonical order; polynomial must be nonzero.
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial::one()); }

  // The polynomial coefficient of v^k (v is removed from the result).
  Polynomial coefficient_in(Var v, int k) const;

  int total_degree() const;  // -1 for the zero polynomial

  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Polynomial& q);

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

Polynomial pow(const Polynomial& p, int n);

// Largest exponent of v across terms; -1 for the zero polynomial.
int degree_in(const Polynomial& p, Var v);

// Formal partial derivative with respect to v.
Polynomial partial(const Polynomial& p, Var v);

// Variable images for substitution; unmapped variables map to themselves.
struct Substitution {
  std::array<std::optional<Polynomial>, 3> images;

  Substitution& set(Var v, Polynomial p) {
    images[static_cast<int>(v)] = std::move(p);
    return *this;
  }
  const std::optional<Polynomial>& image(Var v) const {
    return images[static_cast<int>(v)];
  }
};

Polynomial substitute(const Polynomial& p, const Substitution& s);
Polynomial substitute_var(const Polynomial& p, Var v, const Polynomial& image);

// Exact quotient p / q; throws NotDivisibleError when q does not divide p.
Polynomial exact_div(const Polynomial& p, const Polynomial& q);

}  // namespace kzaut
