#pragma once

#include <array>
#include <cstddef>

namespace kzaut {

enum class Var : int { x = 0, y = 1, z = 2 };

inline constexpr std::array<Var, 3> kVars{Var::x, Var::y, Var::z};

inline constexpr char var_name(Var v) {
  switch (v) {
    case Var::x:
      return 'x';
    case Var::y:
      return 'y';
    default:
      return 'z';
  }
}

// Exponent triple (e_x, e_y, e_z), componentwise non-negative.
struct Monomial {
  std::array<int, 3> e{0, 0, 0};

  static Monomial one() { return {}; }
  static Monomial variable(Var v, int k = 1) {
    Monomial m;
    m.e[static_cast<int>(v)] = k;
    return m;
  }

  int exponent(Var v) const { return e[static_cast<int>(v)]; }
  int total_degree() const { return e[0] + e[1] + e[2]; }
  bool is_one() const { return e[0] == 0 && e[1] == 0 && e[2] == 0; }

  bool divides(const Monomial& m) const {
    return e[0] <= m.e[0] && e[1] <= m.e[1] && e[2] <= m.e[2];
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return Monomial{{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2]}};
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// num / den; caller guarantees den.divides(num).
inline Monomial exact_quotient(const Monomial& num, const Monomial& den) {
  return Monomial{{num.e[0] - den.e[0], num.e[1] - den.e[1], num.e[2] - den.e[2]}};
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < 3; ++i) m.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
  return m;
}

// The single term order used everywhere (term storage, printing, Groebner):
// total degree first, ties broken lexicographically with x > y > z.
inline bool monomial_less(const Monomial& a, const Monomial& b) {
  const int da = a.total_degree();
  const int db = b.total_degree();
  if (da != db) return da < db;
  return a.e < b.e;
}

// std::map comparator placing the leading monomial at begin().
struct DescendingMonomial {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return monomial_less(b, a);
  }
};

}  // namespace kzaut
