#pragma once

#include <string>
#include <vector>

#include "ellfib/multipoly.hpp"

namespace ellfib {

// Parses the textual polynomial grammar into canonical expanded form.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' integer)?
//   primary := number | variable | '(' expr ')'
//   number  := integer ('/' integer)?     (a rational literal, e.g. 2/27)
//
// Whitespace is insignificant. '/' only forms rational literals; there is no
// general division. Exponents are non-negative integer literals. Throws
// ParseError (with position) on syntax errors and unknown variables.
MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& variables);

}  // namespace ellfib
