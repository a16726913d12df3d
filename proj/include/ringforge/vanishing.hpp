#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "ringforge/poly.hpp"

namespace ringforge {

// True iff f evaluates to zero at every ring element. Exhaustive and exact.
bool is_vanishing(const Poly& f);

// Falling-factorial criterion over Z_n: rewrite f in the basis
// (x)_k = x(x-1)...(x-k+1) by repeated synthetic division (exact integers)
// and test n | c_k * k! for every k.
struct ZnCriterion {
  bool vanishing;
  std::vector<mpz_class> falling_coefficients;
};
ZnCriterion zn_vanishing_criterion(const Poly& f);

// The monic degree-q generator V(x) = prod (x - a) over all field elements;
// every vanishing polynomial over the field is a multiple of it.
// Errors: NotAField.
Poly field_generator(const RingPtr& field);

// The unique F with g = F * V over a field; decided by the exact remainder.
// Errors: NotAField, NotVanishing.
Poly generator_quotient(const Poly& g);

// Coefficient split over Z_p[x]/(x^2): each coefficient C_i = D_i*t + E_i
// contributes E_i to J and D_i to K, both over Z_p, so that
// g(y) = J(y) + t * K(y) coefficient-wise.
// Errors: WrongRingShape.
struct JkSplit {
  Poly j;
  Poly k;
};
JkSplit zp_x2_split(const Poly& g);

// g vanishes over Z_p[x]/(x^2) iff J, K and J' all vanish over Z_p.
// Errors: WrongRingShape.
bool zp_x2_criterion(const Poly& g);

// Smallest m admitting a monic vanishing polynomial of degree m, searched by
// testing whether r -> r^m is realized below degree m; the witness is x^m
// minus that realization.
// Errors: BudgetExceeded (reports the largest m fully excluded).
struct MonicVanishing {
  std::size_t degree;
  Poly witness;
};
struct MonicSearchOptions {
  std::uint64_t max_tuples = std::uint64_t(1) << 28;
};
MonicVanishing minimal_monic_vanishing_degree(const RingPtr& ring,
                                              const MonicSearchOptions& opts = {});

}  // namespace ringforge
