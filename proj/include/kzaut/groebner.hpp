#pragma once

#include <cstddef>
#include <vector>

#include "kzaut/polynomial.hpp"

namespace kzaut {

// The single term order of the toolkit (graded, ties lexicographic,
// x > y > z); kept as a type so bases carry their order.
struct MonomialOrder {
  bool less(const Monomial& a, const Monomial& b) const { return monomial_less(a, b); }
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

// Reduced basis: generators monic, no term of any generator divisible by
// the leading term of another, sorted descending by leading monomial.
struct GroebnerBasis {
  std::vector<Polynomial> generators;
  MonomialOrder order;
};

inline constexpr std::size_t kDefaultSPairCap = 100000;

// Remainder of multivariate division of f by the basis members (taken in
// list order); no remainder term is divisible by any basis leading term.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       MonomialOrder order = {});

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        MonomialOrder order = {});

// Buchberger with normal pair selection (smallest lcm first); result is the
// unique reduced basis. StepLimitExceededError once spair_cap S-pairs were
// processed.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, MonomialOrder order = {},
                         std::size_t spair_cap = kDefaultSPairCap);

// True iff the ideal generated by gens is the whole ring.
bool contains_one(const std::vector<Polynomial>& gens,
                  std::size_t spair_cap = kDefaultSPairCap);

}  // namespace kzaut
