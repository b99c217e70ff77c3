#pragma once

// Polynomial text grammar shared by scenario files and the CLI:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := integer | variable | 't' | '(' expr ')'
//
// Whitespace is ignored. Division is only by nonzero constants, so "1/2*z1"
// and "(t+1)/t*x0" are fine. 't' is the transcendental of a tadic field.
// Domain variables are z1..zm (plain "z" is accepted when m = 1), ambient
// variables x0..xM.

#include <string>
#include <string_view>
#include <vector>

#include "nevan/polynomial.hpp"

namespace nevan {

/// Throws ParseError with a 1-based column on malformed input.
Polynomial parse_polynomial(std::string_view text, const Field& field, const std::vector<std::string>& names);

/// Polynomial in z1..zm.
Polynomial parse_domain(std::string_view text, const Field& field, std::size_t m);
/// Homogeneous-coordinate polynomial in x0..x{ambient}.
Polynomial parse_ambient(std::string_view text, const Field& field, std::size_t ambient_dim);

/// A field element written in the same grammar with no variables.
Scalar parse_scalar(std::string_view text, const Field& field);

/// "a", "-a", "a/b"; throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace nevan
