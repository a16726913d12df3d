#pragma once

#include <string>

#include "ringforge/poly.hpp"

namespace ringforge {

// Canonical renderings. These round-trip through the parsers: the polynomial
// indeterminate is always `x`, the generator of a quotient-style ring is
// always `t`, product elements are parenthesized tuples.
std::string format_ring_spec(const RingSpec& spec);
std::string format_element(const Ring& ring, Ring::Elem e);
std::string format_poly(const Poly& f);

}  // namespace ringforge
