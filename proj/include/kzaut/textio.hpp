#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "kzaut/polymap.hpp"
#include "kzaut/polynomial.hpp"

namespace kzaut {

struct ParseDiagnostic {
  std::size_t position = 0;  // character offset into the input
  std::string message;
};

struct ParseError : std::runtime_error {
  explicit ParseError(ParseDiagnostic d)
      : std::runtime_error(d.message + " at offset " + std::to_string(d.position)),
        diagnostic(std::move(d)) {}
  ParseDiagnostic diagnostic;
};

// Grammar (whitespace ignored, explicit '*' required between factors):
//   poly     := ['-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ['^' nat]
//   base     := rational | var | '(' poly ')'
//   rational := nat ['/' nat]
//   var      := 'x' | 'y' | 'z'
Polynomial parse_poly(std::string_view src);

// "(poly; poly)" or "(poly; poly; poly)"; other component counts raise
// ArityError.
PolyMap parse_map(std::string_view src);

// Terms in descending canonical order; coefficient 1 omitted before a
// variable part; exponent 1 omitted; rationals printed a/b; zero prints "0".
std::string print_canonical(const Polynomial& p);

// "(c1; c2)" / "(c1; c2; c3)" with canonical components; parses back with
// parse_map.
std::string print_canonical(const PolyMap& f);

}  // namespace kzaut
