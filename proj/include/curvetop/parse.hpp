#pragma once

#include "curvetop/bipoly.hpp"

#include <string>

namespace curvetop {

/// Parses integer-coefficient polynomials in x and y with + - * ^,
/// parentheses and unary minus. Multiplication must be explicit and
/// exponents are non-negative integer literals. Whitespace is ignored.
/// Throws ParseError carrying the 0-based offset of the problem.
BiPoly parse_poly(const std::string& text);

}  // namespace curvetop
