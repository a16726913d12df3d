#pragma once

#include <string_view>

#include "ringforge/poly.hpp"

namespace ringforge {

// Ring-spec grammar (whitespace insignificant):
//   ring := base ( "x" base )*
//   base := "Z" nat
//         | "GF(" nat ")"
//         | "GF(" nat "," polylit ")"
//         | "Z" nat "[x]/(" polylit ")"
// GF(q) without a modulus resolves the default table; q must be a prime
// power; the quotient base must be prime.
// Errors: ParseError (with byte offset), SemanticError.
RingSpec parse_ring_spec(std::string_view text);

// Polynomial grammar over a constructed ring: signed sum of terms
//   coeff "*"? "x" ("^" nat)?   or a bare coeff.
// Coefficients are ring-element literals: integers (reduced modulo the
// characteristic), generator literals like t, 2*t^3 or (1+t), bracketed
// digit vectors like [1,0,1], and tuples (a,b,...) for products.
// Errors: ParseError, CoefficientOutOfRing.
Poly parse_poly(std::string_view text, const RingPtr& ring);

// A single ring-element literal (the coefficient grammar above, with bare
// generator sums like 1+t also accepted at top level).
Ring::Elem parse_element(std::string_view text, const RingPtr& ring);

}  // namespace ringforge
