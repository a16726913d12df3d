#include "ringforge/snumber.hpp"

#include <cmath>
#include <string>

#include "fp_solve.hpp"
#include "search.hpp"

namespace ringforge {

FunctionTable power_table(const RingPtr& ring, std::uint64_t m) {
  if (ring->order() > (std::uint64_t(1) << 26))
    fail(errc::too_large, "power table of a ring this large is not supported");
  FunctionTable table{ring, std::vector<Ring::Elem>(ring->order())};
  for (Ring::Elem e = 0; e < ring->order(); ++e) table.values[e] = ring->pow(e, m);
  return table;
}

const char* smethod_name(SMethod m) {
  return m == SMethod::exhaustive ? "exhaustive" : "prime-field-linear-algebra";
}

namespace {

void self_check(const RingPtr& ring, const SNumberResult& result,
                bool subring_coefficients) {
  const Poly& w = result.witness;
  if (w.degree() && *w.degree() >= result.value)
    throw std::logic_error("s-number witness degree not below the value");
  if (function_table(w).values != power_table(ring, result.value).values)
    throw std::logic_error("s-number witness does not realize the power table");
  if (subring_coefficients) {
    auto sub = prime_subring(*ring);
    for (Ring::Elem c : w.coeffs())
      if (!std::binary_search(sub.begin(), sub.end(), c))
        throw std::logic_error("s-number witness coefficient outside the prime subring");
  }
}

// Shared ascending-m exhaustive search over the given coefficient alphabet.
SNumberResult exhaustive_s_search(const RingPtr& ring,
                                  const std::vector<Ring::Elem>& alphabet,
                                  const SearchOptions& opts,
                                  bool subring_coefficients) {
  detail::MonomialTables mono(ring);
  std::vector<SearchRow> transcript;
  for (unsigned m = 1; m <= opts.max_m; ++m) {
    std::uint64_t space = detail::nominal_space(alphabet.size(), m);
    if (space > opts.max_tuples)
      throw SearchError(errc::budget_exceeded,
                        "coefficient space " + std::to_string(alphabet.size()) +
                            "^" + std::to_string(m) +
                            " exceeds the tuple budget",
                        m - 1);
    const auto& target = mono.table(m);
    detail::RealizationSearch search(*ring, mono, m, target, alphabet);
    auto coeffs = search.run();
    transcript.push_back({m, space, search.nodes(), coeffs.has_value()});
    if (coeffs) {
      SNumberResult out{m, Poly(ring, std::move(*coeffs)), SMethod::exhaustive,
                        m - 1, std::move(transcript)};
      self_check(ring, out, subring_coefficients);
      return out;
    }
  }
  throw SearchError(errc::not_found_within,
                    "no power representation found for m <= " +
                        std::to_string(opts.max_m),
                    opts.max_m);
}

// Additive F_p coordinates for rings of prime characteristic: digits for
// quotient-style rings, the residue for Z_p, concatenation for products.
void fp_digits(const Ring& ring, Ring::Elem e, std::vector<unsigned>& out) {
  switch (ring.kind()) {
    case Ring::Kind::zn:
      out.push_back(unsigned(e));
      break;
    case Ring::Kind::gf:
    case Ring::Kind::quot: {
      auto d = ring.digits(e);
      out.insert(out.end(), d.begin(), d.end());
      break;
    }
    case Ring::Kind::product:
      for (std::size_t i = 0; i < ring.factor_count(); ++i)
        fp_digits(*ring.factor(i), ring.project(e, i), out);
      break;
  }
}

}  // namespace

SNumberResult s_of_ring(const RingPtr& ring, const SearchOptions& opts) {
  std::vector<Ring::Elem> alphabet(ring->order());
  for (Ring::Elem e = 0; e < ring->order(); ++e) alphabet[e] = e;
  return exhaustive_s_search(ring, alphabet, opts, false);
}

SNumberResult s_subring_brute(const RingPtr& ring, const SearchOptions& opts) {
  return exhaustive_s_search(ring, prime_subring(*ring), opts, true);
}

SNumberResult s_subring_linear(const RingPtr& ring, const SearchOptions& opts) {
  if (!zp::is_prime(ring->characteristic()))
    fail(errc::not_prime,
         "the elimination path requires a prime characteristic");
  if (ring->order() > (std::uint64_t(1) << 16))
    fail(errc::too_large, "ring too large for the elimination path");
  const unsigned p = unsigned(ring->characteristic());
  detail::MonomialTables mono(ring);
  auto flatten = [&](const std::vector<Ring::Elem>& table) {
    std::vector<unsigned> out;
    for (Ring::Elem v : table) fp_digits(*ring, v, out);
    return out;
  };
  std::vector<std::vector<unsigned>> columns;  // flattened power tables
  std::vector<SearchRow> transcript;
  for (unsigned m = 1; m <= opts.max_m; ++m) {
    columns.push_back(flatten(mono.table(m - 1)));
    std::vector<unsigned> rhs = flatten(mono.table(m));
    const std::size_t rows = rhs.size();
    std::vector<std::vector<unsigned>> a(rows, std::vector<unsigned>(m));
    for (std::size_t r = 0; r < rows; ++r)
      for (unsigned i = 0; i < m; ++i) a[r][i] = columns[i][r];
    auto solution = detail::fp_solve(p, std::move(a), std::move(rhs));
    transcript.push_back({m, detail::nominal_space(p, m), rows * m,
                          solution.has_value()});
    if (solution) {
      std::vector<Ring::Elem> coeffs(m);
      for (unsigned i = 0; i < m; ++i)
        coeffs[i] = ring->from_integer(std::int64_t((*solution)[i]));
      SNumberResult out{m, Poly(ring, std::move(coeffs)),
                        SMethod::prime_field_linear_algebra, m - 1,
                        std::move(transcript)};
      self_check(ring, out, true);
      return out;
    }
  }
  throw SearchError(errc::not_found_within,
                    "no prime-subring representation found for m <= " +
                        std::to_string(opts.max_m),
                    opts.max_m);
}

SNumberResult s_subring(const RingPtr& ring, const SearchOptions& opts) {
  if (zp::is_prime(ring->characteristic()) &&
      ring->order() <= (std::uint64_t(1) << 16))
    return s_subring_linear(ring, opts);
  return s_subring_brute(ring, opts);
}

bool check_eq1_identity(unsigned a) {
  if (a < 3) fail(errc::invalid_a, "the identity requires a >= 3");
  zp::Poly modulus(a + 2, 0);
  modulus[a] = 1;
  modulus[a + 1] = 1;
  RingPtr ring = build_ring(RingSpec::quot(2, modulus));
  Ring::Elem x = ring->generator();
  Ring::Elem xa3 = ring->pow(x, a - 3);
  Ring::Elem xa2 = ring->pow(x, a - 2);
  // Q(y) = x^(a-3) y^4 + (x^(a-3) + x^(a-2)) y^2 + x^(a-2) y
  Poly q(ring, {0, xa2, ring->add(xa3, xa2), 0, xa3});
  for (Ring::Elem e = 0; e < ring->order(); ++e)
    if (eval(q, e) != 0) return false;
  return true;
}

mpz_class bound_n(unsigned x) {
  if (x < 1) fail(errc::semantic_error, "the bound is defined for x >= 1");
  // exponent (2x)^x * x, overflow-checked
  unsigned __int128 exp = 1;
  for (unsigned i = 0; i < x; ++i) {
    exp *= 2 * x;
    if (exp > (unsigned __int128)1 << 80)
      fail(errc::too_large, "bound exponent overflows any feasible size");
  }
  exp *= x;
  // digits ~ exponent * log10(x!)
  double digits = double(exp) * std::lgamma(double(x) + 1.0) / std::log(10.0);
  if (digits > 2e6)
    fail(errc::too_large,
         "bound would have about " + std::to_string(std::uint64_t(digits)) +
             " digits");
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), x);
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), fact.get_mpz_t(), (unsigned long)exp);
  return out;
}

}  // namespace ringforge
