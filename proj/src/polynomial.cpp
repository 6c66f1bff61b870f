#include "kzaut/polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace kzaut {

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial::one(), c);
}

Polynomial Polynomial::variable(Var v, int power) {
  if (power < 0) throw std::invalid_argument("variable power must be non-negative");
  if (power == 0) return Polynomial(1);
  Polynomial p;
  p.terms_.emplace(Monomial::variable(v, power), Rational(1));
  return p;
}

Polynomial Polynomial::term(const Rational& c, const Monomial& m) {
  Polynomial p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::coefficient_in(Var v, int k) const {
  const int vi = static_cast<int>(v);
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    if (m.e[vi] != k) continue;
    Monomial rest = m;
    rest.e[vi] = 0;
    out.terms_.emplace(rest, c);
  }
  return out;
}

int Polynomial::total_degree() const {
  // Leading term first, and the order is graded: its degree is maximal.
  return terms_.empty() ? -1 : terms_.begin()->first.total_degree();
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, Rational(-c));
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  Polynomial out;
  Rational prod;
  for (const auto& [mp, cp] : p.terms_) {
    for (const auto& [mq, cq] : q.terms_) {
      prod = cp * cq;
      out.add_term(mp * mq, prod);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& q) {
  *this = *this * q;
  return *this;
}

Polynomial operator-(const Polynomial& p) {
  Polynomial out;
  for (const auto& [m, c] : p.terms_) out.terms_.emplace(m, Rational(-c));
  return out;
}

Polynomial pow(const Polynomial& p, int n) {
  if (n < 0) throw std::invalid_argument("pow: negative exponent");
  Polynomial acc(1);
  Polynomial base = p;
  while (n > 0) {
    if (n & 1) acc *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return acc;
}

int degree_in(const Polynomial& p, Var v) {
  const int vi = static_cast<int>(v);
  int deg = -1;
  for (const auto& [m, c] : p.terms())
    if (m.e[vi] > deg) deg = m.e[vi];
  return deg;
}

Polynomial partial(const Polynomial& p, Var v) {
  const int vi = static_cast<int>(v);
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    if (m.e[vi] == 0) continue;
    Monomial d = m;
    d.e[vi] -= 1;
    out += Polynomial::term(c * m.e[vi], d);
  }
  return out;
}

namespace {

// Powers of the image of one variable, grown on demand.
class PowerTable {
 public:
  explicit PowerTable(const Polynomial& base) : base_(base) {
    powers_.push_back(Polynomial(1));
  }
  const Polynomial& get(int k) {
    while (static_cast<int>(powers_.size()) <= k)
      powers_.push_back(powers_.back() * base_);
    return powers_[k];
  }

 private:
  Polynomial base_;
  std::vector<Polynomial> powers_;
};

}  // namespace

Polynomial substitute(const Polynomial& p, const Substitution& s) {
  std::array<std::optional<PowerTable>, 3> tables;
  for (int i = 0; i < 3; ++i)
    if (s.images[i]) tables[i].emplace(*s.images[i]);

  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Monomial untouched = m;
    for (int i = 0; i < 3; ++i)
      if (tables[i]) untouched.e[i] = 0;
    Polynomial t = Polynomial::term(c, untouched);
    for (int i = 0; i < 3; ++i)
      if (tables[i] && m.e[i] > 0) t *= tables[i]->get(m.e[i]);
    out += t;
  }
  return out;
}

Polynomial substitute_var(const Polynomial& p, Var v, const Polynomial& image) {
  Substitution s;
  s.set(v, image);
  return substitute(p, s);
}

Polynomial exact_div(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw NotDivisibleError("exact_div: division by zero polynomial");
  const Monomial& qm = q.leading_monomial();
  const Rational& qc = q.leading_coefficient();
  Polynomial rem = p;
  Polynomial quot;
  while (!rem.is_zero()) {
    const Monomial& rm = rem.leading_monomial();
    if (!qm.divides(rm))
      throw NotDivisibleError("exact_div: divisor does not divide dividend");
    Polynomial t = Polynomial::term(rem.leading_coefficient() / qc, exact_quotient(rm, qm));
    quot += t;
    rem -= t * q;
  }
  return quot;
}

}  // namespace kzaut
