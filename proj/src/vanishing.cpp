#include "ringforge/vanishing.hpp"

#include <string>

#include "search.hpp"

namespace ringforge {

bool is_vanishing(const Poly& f) {
  const Ring& ring = *f.ring();
  for (Ring::Elem e = 0; e < ring.order(); ++e)
    if (eval(f, e) != 0) return false;
  return true;
}

ZnCriterion zn_vanishing_criterion(const Poly& f) {
  const Ring& ring = *f.ring();
  if (ring.kind() != Ring::Kind::zn)
    fail(errc::wrong_ring_shape, "the falling-factorial criterion applies to Z_n");
  mpz_class n(std::to_string(ring.order()));
  // lift to integer coefficients, then peel falling-factorial coefficients by
  // synthetic division with x - 0, x - 1, x - 2, ...; after each pass the
  // head of `work` is the remainder c_k and the tail is the quotient
  std::vector<mpz_class> work;
  for (Ring::Elem c : f.coeffs()) work.emplace_back(std::to_string(c));
  ZnCriterion out{true, {}};
  unsigned k = 0;
  while (!work.empty()) {
    mpz_class carry = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      carry = carry * k + work[i];
      work[i] = carry;
    }
    mpz_class coeff = work.front();
    work.erase(work.begin());
    mpz_class kfact;
    mpz_fac_ui(kfact.get_mpz_t(), k);
    if (!mpz_divisible_p(mpz_class(coeff * kfact).get_mpz_t(), n.get_mpz_t()))
      out.vanishing = false;
    out.falling_coefficients.push_back(coeff);
    ++k;
  }
  return out;
}

Poly field_generator(const RingPtr& field) {
  if (!field->is_field())
    fail(errc::not_a_field, "the vanishing generator exists over fields only");
  auto elems = enumerate_elements(*field);
  return from_roots(field, elems);
}

Poly generator_quotient(const Poly& g) {
  const RingPtr& field = g.ring();
  Poly v = field_generator(field);
  DivRem qr = divrem(g, v);
  if (!qr.remainder.is_zero())
    fail(errc::not_vanishing,
         "polynomial is not a multiple of the field generator");
  return qr.quotient;
}

namespace {

const Ring& require_zp_x2(const Poly& g) {
  const Ring& ring = *g.ring();
  if (ring.kind() != Ring::Kind::quot || ring.coset_modulus() != zp::Poly{0, 0, 1})
    fail(errc::wrong_ring_shape, "expected a ring of the form Z_p[x]/(x^2)");
  return ring;
}

}  // namespace

JkSplit zp_x2_split(const Poly& g) {
  const Ring& ring = require_zp_x2(g);
  RingPtr zp_ring = build_ring(RingSpec::zn(ring.residue_prime()));
  std::vector<Ring::Elem> j, k;
  for (Ring::Elem c : g.coeffs()) {
    auto d = ring.digits(c);
    j.push_back(d[0]);
    k.push_back(d[1]);
  }
  return {Poly(zp_ring, std::move(j)), Poly(zp_ring, std::move(k))};
}

bool zp_x2_criterion(const Poly& g) {
  require_zp_x2(g);
  JkSplit split = zp_x2_split(g);
  return is_vanishing(split.j) && is_vanishing(split.k) &&
         is_vanishing(formal_derivative(split.j));
}

MonicVanishing minimal_monic_vanishing_degree(const RingPtr& ring,
                                              const MonicSearchOptions& opts) {
  const std::uint64_t order = ring->order();
  detail::MonomialTables mono(ring);
  std::vector<Ring::Elem> alphabet(order);
  for (Ring::Elem e = 0; e < order; ++e) alphabet[e] = e;
  // from_roots over all elements is monic vanishing, so degree <= order
  for (unsigned m = 1; m <= order; ++m) {
    std::uint64_t space = detail::nominal_space(order, m);
    if (space > opts.max_tuples)
      throw SearchError(errc::budget_exceeded,
                        "coefficient space " + std::to_string(order) + "^" +
                            std::to_string(m) + " exceeds the tuple budget",
                        m - 1);
    // monic x^m + P vanishes iff P realizes the negated m-th power table
    std::vector<Ring::Elem> target(order);
    const auto& pm = mono.table(m);
    for (std::uint64_t e = 0; e < order; ++e) target[e] = ring->neg(pm[e]);
    detail::RealizationSearch search(*ring, mono, m, target, alphabet);
    if (auto coeffs = search.run()) {
      coeffs->push_back(ring->one());
      MonicVanishing out{m, Poly(ring, std::move(*coeffs))};
      if (!out.witness.is_monic() || *out.witness.degree() != m ||
          !is_vanishing(out.witness))
        throw std::logic_error("monic vanishing witness failed self-check");
      return out;
    }
  }
  throw std::logic_error("no monic vanishing polynomial up to the ring order");
}

}  // namespace ringforge
