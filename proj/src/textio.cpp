#include "kzaut/textio.hpp"

#include <cctype>
#include <limits>
#include <vector>

namespace kzaut {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Polynomial parse_whole_poly() {
    Polynomial p = parse_poly();
    skip_ws();
    if (!eof()) fail("unexpected trailing input");
    return p;
  }

  PolyMap parse_whole_map() {
    skip_ws();
    expect('(');
    std::vector<Polynomial> comps;
    comps.push_back(parse_poly());
    skip_ws();
    while (!eof() && peek() == ';') {
      ++pos_;
      comps.push_back(parse_poly());
      skip_ws();
    }
    expect(')');
    skip_ws();
    if (!eof()) fail("unexpected trailing input");
    if (comps.size() != 2 && comps.size() != 3)
      throw ArityError("map must have 2 or 3 components, got " +
                       std::to_string(comps.size()));
    return PolyMap(std::move(comps));
  }

 private:
  bool eof() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(ParseDiagnostic{pos_, message});
  }

  void expect(char c) {
    skip_ws();
    if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Integer parse_nat() {
    skip_ws();
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a number");
    const std::size_t start = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(src_.substr(start, pos_ - start)), 10);
  }

  int parse_exponent() {
    const std::size_t at = pos_;
    Integer n = parse_nat();
    if (!n.fits_sint_p()) throw ParseError(ParseDiagnostic{at, "exponent out of range"});
    return static_cast<int>(n.get_si());
  }

  // poly := ['-'] term (('+'|'-') term)*
  Polynomial parse_poly() {
    skip_ws();
    bool negate = false;
    if (!eof() && peek() == '-') {
      negate = true;
      ++pos_;
    }
    Polynomial acc = parse_term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      if (eof()) break;
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial t = parse_term();
      if (c == '+')
        acc += t;
      else
        acc -= t;
    }
    return acc;
  }

  // term := factor ('*' factor)*
  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    for (;;) {
      skip_ws();
      if (eof() || peek() != '*') break;
      ++pos_;
      acc *= parse_factor();
    }
    return acc;
  }

  // factor := base ['^' nat]
  Polynomial parse_factor() {
    Polynomial base = parse_base();
    skip_ws();
    if (!eof() && peek() == '^') {
      ++pos_;
      return pow(base, parse_exponent());
    }
    return base;
  }

  // base := rational | var | '(' poly ')'
  Polynomial parse_base() {
    skip_ws();
    if (eof()) fail("expected a polynomial");
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = parse_poly();
      expect(')');
      return p;
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      return Polynomial::variable(c == 'x' ? Var::x : c == 'y' ? Var::y : Var::z);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = parse_nat();
      skip_ws();
      if (!eof() && peek() == '/') {
        ++pos_;
        skip_ws();
        const std::size_t den_at = pos_;
        Integer den = parse_nat();
        if (den == 0) throw ParseError(ParseDiagnostic{den_at, "zero denominator"});
        return Polynomial(make_rational(num, den));
      }
      return Polynomial(make_rational(num, Integer(1)));
    }
    fail("expected a number, variable or '('");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Monomial& m) {
  std::string out;
  for (Var v : kVars) {
    const int e = m.exponent(v);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(v);
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

}  // namespace

Polynomial parse_poly(std::string_view src) { return Parser(src).parse_whole_poly(); }

PolyMap parse_map(std::string_view src) { return Parser(src).parse_whole_map(); }

std::string print_canonical(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = abs(c);
    if (m.is_one()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += monomial_text(m);
    } else {
      out += to_string(mag);
      out += '*';
      out += monomial_text(m);
    }
  }
  return out;
}

std::string print_canonical(const PolyMap& f) {
  std::string out = "(";
  for (int i = 0; i < f.arity(); ++i) {
    if (i > 0) out += "; ";
    out += print_canonical(f[i]);
  }
  out += ')';
  return out;
}

}  // namespace kzaut
