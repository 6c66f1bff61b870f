#include "kzaut/groebner.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace kzaut {

namespace {

Polynomial times_term(const Rational& c, const Monomial& m, const Polynomial& p) {
  return Polynomial::term(c, m) * p;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm_monomial;
};

// Normal selection strategy: smallest lcm in the term order, ties by index.
bool pair_before(const Pair& a, const Pair& b) {
  if (!(a.lcm_monomial == b.lcm_monomial))
    return monomial_less(a.lcm_monomial, b.lcm_monomial);
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       MonomialOrder) {
  for (const Polynomial& g : basis)
    if (g.is_zero()) throw std::invalid_argument("normal_form: zero basis member");
  Polynomial h = f;
  Polynomial remainder;
  while (!h.is_zero()) {
    bool reduced = false;
    for (const Polynomial& g : basis) {
      if (!g.leading_monomial().divides(h.leading_monomial())) continue;
      h -= times_term(h.leading_coefficient() / g.leading_coefficient(),
                      exact_quotient(h.leading_monomial(), g.leading_monomial()), g);
      reduced = true;
      break;
    }
    if (!reduced) {
      const Polynomial lt =
          Polynomial::term(h.leading_coefficient(), h.leading_monomial());
      remainder += lt;
      h -= lt;
    }
  }
  return remainder;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("s_polynomial: zero argument");
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  return times_term(Rational(1) / f.leading_coefficient(),
                    exact_quotient(l, f.leading_monomial()), f) -
         times_term(Rational(1) / g.leading_coefficient(),
                    exact_quotient(l, g.leading_monomial()), g);
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, MonomialOrder order,
                         std::size_t spair_cap) {
  std::vector<Polynomial> basis;
  for (const Polynomial& g : gens)
    if (!g.is_zero()) basis.push_back(g);
  if (basis.empty())
    throw std::invalid_argument("buchberger: generators are all zero");

  const auto unit_basis = [&] {
    return GroebnerBasis{{Polynomial(1)}, order};
  };
  for (const Polynomial& g : basis)
    if (g.is_constant()) return unit_basis();

  std::vector<Pair> queue;
  const auto push_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      queue.push_back(
          Pair{i, j, lcm(basis[i].leading_monomial(), basis[j].leading_monomial())});
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

  std::size_t processed = 0;
  while (!queue.empty()) {
    const auto it = std::min_element(queue.begin(), queue.end(), pair_before);
    const Pair pair = *it;
    queue.erase(it);
    if (++processed > spair_cap)
      throw StepLimitExceededError("buchberger: S-pair cap exceeded (" +
                                   std::to_string(spair_cap) + ")");
    // Coprime leading monomials reduce to zero (product criterion).
    if (pair.lcm_monomial ==
        basis[pair.i].leading_monomial() * basis[pair.j].leading_monomial())
      continue;
    const Polynomial r =
        normal_form(s_polynomial(basis[pair.i], basis[pair.j]), basis);
    if (r.is_zero()) continue;
    if (r.is_constant()) return unit_basis();
    basis.push_back(r);
    push_pairs_for(basis.size() - 1);
  }

  // Minimalize: drop generators whose leading monomial another one divides;
  // among equal leading monomials the first occurrence survives.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Monomial& lmi = basis[i].leading_monomial();
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const Monomial& lmj = basis[j].leading_monomial();
      if (lmj.divides(lmi) && (!(lmj == lmi) || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Interreduce to the unique reduced basis; leading terms are already
  // pairwise non-divisible, so one pass with updated members suffices.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = normal_form(minimal[i], others);
    minimal[i] =
        Polynomial(Rational(1) / minimal[i].leading_coefficient()) * minimal[i];
  }

  std::sort(minimal.begin(), minimal.end(),
            [](const Polynomial& a, const Polynomial& b) {
              return monomial_less(b.leading_monomial(), a.leading_monomial());
            });
  return GroebnerBasis{std::move(minimal), order};
}

bool contains_one(const std::vector<Polynomial>& gens, std::size_t spair_cap) {
  std::vector<Polynomial> nonzero;
  for (const Polynomial& g : gens)
    if (!g.is_zero()) nonzero.push_back(g);
  if (nonzero.empty()) return false;
  const GroebnerBasis b = buchberger(nonzero, MonomialOrder{}, spair_cap);
  return b.generators.size() == 1 && b.generators.front() == Polynomial(1);
}

}  // namespace kzaut
