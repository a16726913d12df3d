#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "ringforge/poly.hpp"
#include "ringforge/ringspec.hpp"

namespace ringforge {

// Exhaustive root collection: {a : f(a) = 0}, ascending.
struct RootScan {
  std::uint64_t count;
  std::vector<Ring::Elem> roots;
};
RootScan count_roots(const Poly& f);

// Attainable non-root counts over a product with factor orders n_i when
// factor i can realize the non-root counts in A_i: the inclusion-exclusion
// expression collapses to n - prod(n_i - a_i).
// Errors: InvalidNonRootSet.
std::set<std::uint64_t> achievable_nonroot_counts(
    const std::vector<std::uint64_t>& factor_orders,
    const std::vector<std::set<std::uint64_t>>& nonroot_sets);

enum class RootMethod { formula, brute_force };
const char* root_method_name(RootMethod m);

struct RootCountReport {
  RingSpec ring;
  std::uint64_t order;
  std::set<std::uint64_t> achievable;
  std::set<std::uint64_t> unachievable;  // complement within [0, order]
  RootMethod method;
  std::map<std::uint64_t, Poly> witnesses;  // optional, per achieved count
};

// Squarefree n = p_1...p_k: every function over each prime factor is
// polynomial, so the achievable root counts are exactly the products of
// per-factor counts.
// Errors: NotSquarefree.
RootCountReport feasible_root_counts_squarefree(std::uint64_t n);

// Enumerates every polynomial function over the ring (all polynomials of
// degree below the minimal monic vanishing degree) and counts roots.
// Errors: BudgetExceeded.
struct BruteRootOptions {
  std::uint64_t max_tuples = std::uint64_t(1) << 24;
  bool keep_witnesses = false;       // forced on for order <= 16
};
RootCountReport brute_force_root_counts(const RingPtr& ring,
                                        const BruteRootOptions& opts = {});

struct ZeroDivisorScan {
  bool found;
  Ring::Elem a;
  Ring::Elem b;
};
ZeroDivisorScan has_zero_divisors(const Ring& ring);

}  // namespace ringforge
