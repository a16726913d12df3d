#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "ringforge/poly.hpp"

namespace ringforge {

// Table of r -> r^m over the canonical enumeration, with r^0 = 1.
FunctionTable power_table(const RingPtr& ring, std::uint64_t m);

enum class SMethod { exhaustive, prime_field_linear_algebra };
const char* smethod_name(SMethod m);

// One row per examined exponent; together these certify which coefficient
// spaces were fully excluded before the witness degree.
struct SearchRow {
  unsigned m;
  std::uint64_t nominal_space;  // |alphabet|^m before pruning
  std::uint64_t nodes;          // search-tree nodes actually visited
  bool witness_found;
};

// The minimal m with r -> r^m realized by a polynomial of degree < m,
// together with the realizing witness. Every returned result re-verifies its
// own invariants (witness degree < value, witness table = m-th power table)
// independently of the search path.
struct SNumberResult {
  unsigned value;
  Poly witness;
  SMethod method;
  unsigned search_bound;  // largest m fully excluded (= value - 1)
  std::vector<SearchRow> transcript;
};

struct SearchOptions {
  unsigned max_m = 16;
  std::uint64_t max_tuples = std::uint64_t(1) << 28;
};

// Exhaustive coefficient search over the whole ring, ascending m, tuples in
// lexicographic order with pivot pruning.
// Errors: BudgetExceeded, NotFoundWithin.
SNumberResult s_of_ring(const RingPtr& ring, const SearchOptions& opts = {});

// The same minimum with coefficients restricted to the prime subring
// (the additive closure of 1). When the characteristic is prime the answer
// is decided by elimination over F_p; otherwise by exhaustive search over
// prime-subring tuples. Both paths are exposed for cross-validation.
SNumberResult s_subring(const RingPtr& ring, const SearchOptions& opts = {});
SNumberResult s_subring_brute(const RingPtr& ring, const SearchOptions& opts = {});
SNumberResult s_subring_linear(const RingPtr& ring, const SearchOptions& opts = {});

// Builds Z_2[x]/(x^a + x^{a+1}) and exhaustively checks that
//   Q(y) = x^(a-3) y^4 + (x^(a-3) + x^(a-2)) y^2 + x^(a-2) y
// vanishes on the whole ring.
// Errors: InvalidA (a < 3).
bool check_eq1_identity(unsigned a);

// The exact inner quantity n = (x!)^((2x)^x * x) of the subring bound.
// The lcm(n) + n outer bound is deliberately not computed.
// Errors: TooLarge.
mpz_class bound_n(unsigned x);

}  // namespace ringforge
