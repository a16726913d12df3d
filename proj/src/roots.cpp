#include "ringforge/roots.hpp"

#include <string>

#include "ringforge/vanishing.hpp"
#include "search.hpp"

namespace ringforge {

RootScan count_roots(const Poly& f) {
  const Ring& ring = *f.ring();
  RootScan out{0, {}};
  for (Ring::Elem e = 0; e < ring.order(); ++e)
    if (eval(f, e) == 0) out.roots.push_back(e);
  out.count = out.roots.size();
  return out;
}

const char* root_method_name(RootMethod m) {
  return m == RootMethod::formula ? "formula" : "brute-force";
}

std::set<std::uint64_t> achievable_nonroot_counts(
    const std::vector<std::uint64_t>& factor_orders,
    const std::vector<std::set<std::uint64_t>>& nonroot_sets) {
  if (factor_orders.size() != nonroot_sets.size() || factor_orders.empty())
    fail(errc::invalid_non_root_set,
         "need one non-root set per factor, at least one factor");
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < factor_orders.size(); ++i) {
    n *= factor_orders[i];
    for (std::uint64_t a : nonroot_sets[i])
      if (a > factor_orders[i])
        fail(errc::invalid_non_root_set,
             "non-root count " + std::to_string(a) + " exceeds factor order");
  }
  // walk the Cartesian product of the per-factor sets; the alternating-sign
  // inclusion-exclusion sum collapses to n - prod(n_i - a_i)
  std::set<std::uint64_t> out;
  std::vector<std::set<std::uint64_t>::const_iterator> its;
  for (const auto& s : nonroot_sets) {
    if (s.empty()) return out;
    its.push_back(s.begin());
  }
  while (true) {
    std::uint64_t prod = 1;
    for (std::size_t i = 0; i < its.size(); ++i) prod *= factor_orders[i] - *its[i];
    out.insert(n - prod);
    std::size_t i = its.size();
    while (i-- > 0) {
      if (++its[i] != nonroot_sets[i].end()) break;
      its[i] = nonroot_sets[i].begin();
      if (i == 0) return out;
    }
  }
}

namespace {

std::set<std::uint64_t> complement_in_range(const std::set<std::uint64_t>& s,
                                            std::uint64_t order) {
  std::set<std::uint64_t> out;
  for (std::uint64_t v = 0; v <= order; ++v)
    if (!s.count(v)) out.insert(v);
  return out;
}

}  // namespace

RootCountReport feasible_root_counts_squarefree(std::uint64_t n) {
  if (n < 2) fail(errc::not_squarefree, "n must be a squarefree integer >= 2");
  std::vector<std::uint64_t> primes;
  std::uint64_t rest = n;
  for (std::uint64_t d = 2; d * d <= rest; ++d) {
    if (rest % d == 0) {
      rest /= d;
      if (rest % d == 0)
        fail(errc::not_squarefree, std::to_string(n) + " is divisible by " +
                                       std::to_string(d * d));
      primes.push_back(d);
    }
  }
  if (rest > 1) primes.push_back(rest);
  // every function over Z_p is polynomial, so any per-factor root count in
  // [0, p] is realizable and the product set is exact
  std::set<std::uint64_t> counts{1};
  for (std::uint64_t p : primes) {
    std::set<std::uint64_t> next;
    for (std::uint64_t c : counts)
      for (std::uint64_t r = 0; r <= p; ++r) next.insert(c * r);
    counts = std::move(next);
  }
  RootCountReport report;
  report.ring = RingSpec::zn(n);
  report.order = n;
  report.achievable = std::move(counts);
  report.unachievable = complement_in_range(report.achievable, n);
  report.method = RootMethod::formula;
  return report;
}

RootCountReport brute_force_root_counts(const RingPtr& ring,
                                        const BruteRootOptions& opts) {
  const std::uint64_t order = ring->order();
  MonicSearchOptions monic_opts;
  monic_opts.max_tuples = opts.max_tuples;
  const std::size_t bound = minimal_monic_vanishing_degree(ring, monic_opts).degree;
  std::uint64_t space = detail::nominal_space(order, unsigned(bound));
  if (space > opts.max_tuples)
    throw SearchError(errc::budget_exceeded,
                      "enumerating " + std::to_string(order) + "^" +
                          std::to_string(bound) + " polynomials exceeds the budget",
                      unsigned(bound));
  const bool keep = opts.keep_witnesses || order <= 16;

  RootCountReport report;
  report.ring = ring->spec();
  report.order = order;
  report.method = RootMethod::brute_force;

  detail::MonomialTables mono(ring);
  for (std::size_t i = 0; i < bound; ++i) mono.table(i);
  std::vector<std::vector<Ring::Elem>> partial(
      bound + 1, std::vector<Ring::Elem>(order, 0));
  std::vector<Ring::Elem> chosen(bound, 0);

  // depth-first over all coefficient tuples; every polynomial function over
  // the ring is induced by exactly the degree-below-bound candidates
  auto descend = [&](auto&& self, std::size_t level) -> void {
    if (level == bound) {
      std::uint64_t zeros = 0;
      for (Ring::Elem v : partial[level])
        if (v == 0) ++zeros;
      auto [it, inserted] = report.achievable.insert(zeros);
      if (inserted && keep)
        report.witnesses.emplace(zeros, Poly(ring, chosen));
      return;
    }
    const auto& mt = mono.table(level);
    for (Ring::Elem c = 0; c < order; ++c) {
      for (std::uint64_t e = 0; e < order; ++e)
        partial[level + 1][e] = ring->add(partial[level][e], ring->mul(c, mt[e]));
      chosen[level] = c;
      self(self, level + 1);
    }
  };
  descend(descend, 0);
  report.unachievable = complement_in_range(report.achievable, order);
  return report;
}

ZeroDivisorScan has_zero_divisors(const Ring& ring) {
  for (Ring::Elem a = 1; a < ring.order(); ++a)
    for (Ring::Elem b = a; b < ring.order(); ++b)
      if (ring.mul(a, b) == 0) return {true, a, b};
  return {false, 0, 0};
}

}  // namespace ringforge
