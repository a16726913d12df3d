#include "ringforge/poly.hpp"

#include <algorithm>

namespace ringforge {

Poly::Poly(RingPtr ring, std::vector<Ring::Elem> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  for (Ring::Elem c : coeffs_)
    if (c >= ring_->order())
      fail(errc::coefficient_out_of_ring, "coefficient index exceeds ring order");
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::monomial(RingPtr ring, Ring::Elem c, std::size_t exp) {
  std::vector<Ring::Elem> coeffs(exp + 1, 0);
  coeffs[exp] = c;
  return Poly(std::move(ring), std::move(coeffs));
}

Poly Poly::identity(RingPtr ring) {
  Ring::Elem one = ring->one();
  return Poly(std::move(ring), {0, one});
}

Poly Poly::scaled(Ring::Elem c) const {
  std::vector<Ring::Elem> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out[i] = ring_->mul(c, coeffs_[i]);
  return Poly(ring_, std::move(out));
}

Poly operator+(const Poly& a, const Poly& b) {
  ensure_same_ring(*a.ring_, *b.ring_);
  std::vector<Ring::Elem> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = a.ring_->add(a.coeff(i), b.coeff(i));
  return Poly(a.ring_, std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::operator-() const {
  std::vector<Ring::Elem> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = ring_->neg(coeffs_[i]);
  return Poly(ring_, std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
  ensure_same_ring(*a.ring_, *b.ring_);
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.ring_);
  const Ring& ring = *a.ring_;
  std::vector<Ring::Elem> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] = ring.add(out[i + j], ring.mul(a.coeffs_[i], b.coeffs_[j]));
  }
  return Poly(a.ring_, std::move(out));
}

bool operator==(const Poly& a, const Poly& b) {
  return same_ring(*a.ring_, *b.ring_) && a.coeffs_ == b.coeffs_;
}

Ring::Elem eval(const Poly& f, Ring::Elem at) {
  const Ring& ring = *f.ring();
  Ring::Elem acc = 0;
  auto cs = f.coeffs();
  for (std::size_t i = cs.size(); i-- > 0;) acc = ring.add(ring.mul(acc, at), cs[i]);
  return acc;
}

RingElement eval(const Poly& f, const RingElement& at) {
  ensure_same_ring(*f.ring(), *at.ring());
  return {f.ring(), eval(f, at.index())};
}

Poly formal_derivative(const Poly& f) {
  auto cs = f.coeffs();
  if (cs.size() < 2) return Poly::zero(f.ring());
  std::vector<Ring::Elem> out(cs.size() - 1);
  for (std::size_t i = 0; i + 1 < cs.size(); ++i)
    out[i] = f.ring()->scalar(i + 1, cs[i + 1]);
  return Poly(f.ring(), std::move(out));
}

bool operator==(const FunctionTable& a, const FunctionTable& b) {
  return same_ring(*a.ring, *b.ring) && a.values == b.values;
}

FunctionTable function_table(const Poly& f) {
  const Ring& ring = *f.ring();
  if (ring.order() > (std::uint64_t(1) << 26))
    fail(errc::too_large, "function table of a ring this large is not supported");
  FunctionTable table{f.ring(), std::vector<Ring::Elem>(ring.order())};
  for (Ring::Elem e = 0; e < ring.order(); ++e) table.values[e] = eval(f, e);
  return table;
}

DivRem divrem(const Poly& f, const Poly& g) {
  ensure_same_ring(*f.ring(), *g.ring());
  if (!g.is_monic())
    fail(errc::non_monic_divisor, "division requires a monic divisor");
  const Ring& ring = *f.ring();
  const std::size_t dg = *g.degree();
  if (f.is_zero() || *f.degree() < dg)
    return {Poly::zero(f.ring()), f};
  std::vector<Ring::Elem> rem(f.coeffs().begin(), f.coeffs().end());
  std::vector<Ring::Elem> quot(rem.size() - dg, 0);
  for (std::size_t i = rem.size() - 1; i + 1 > dg; --i) {
    Ring::Elem c = rem[i];
    if (c != 0) {
      quot[i - dg] = c;
      for (std::size_t j = 0; j <= dg; ++j)
        rem[i - dg + j] = ring.sub(rem[i - dg + j], ring.mul(c, g.coeff(j)));
    }
    if (i == 0) break;
  }
  return {Poly(f.ring(), std::move(quot)), Poly(f.ring(), std::move(rem))};
}

Poly from_roots(RingPtr ring, std::span<const Ring::Elem> roots) {
  Poly acc = Poly::constant(ring, ring->one());
  for (Ring::Elem r : roots)
    acc = acc * Poly(ring, {ring->neg(r), ring->one()});
  return acc;
}

std::vector<Poly> decompose_over_product(const Poly& f) {
  const Ring& ring = *f.ring();
  if (!ring.is_product())
    fail(errc::not_a_product, "decomposition requires a product ring");
  std::vector<Poly> parts;
  parts.reserve(ring.factor_count());
  for (std::size_t i = 0; i < ring.factor_count(); ++i) {
    std::vector<Ring::Elem> cs(f.coeffs().size());
    for (std::size_t j = 0; j < cs.size(); ++j)
      cs[j] = ring.project(f.coeff(j), i);
    parts.emplace_back(ring.factor(i), std::move(cs));
  }
  return parts;
}

Poly recombine(const RingPtr& product_ring, std::span<const Poly> parts) {
  const Ring& ring = *product_ring;
  if (!ring.is_product())
    fail(errc::not_a_product, "recombination requires a product ring");
  if (parts.size() != ring.factor_count())
    fail(errc::ring_mismatch, "part count does not match factor count");
  std::size_t len = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    ensure_same_ring(*parts[i].ring(), *ring.factor(i));
    len = std::max(len, parts[i].coeffs().size());
  }
  std::vector<Ring::Elem> cs(len, 0);
  std::vector<Ring::Elem> comps(parts.size());
  for (std::size_t j = 0; j < len; ++j) {
    for (std::size_t i = 0; i < parts.size(); ++i) comps[i] = parts[i].coeff(j);
    cs[j] = ring.embed(comps);
  }
  return Poly(product_ring, std::move(cs));
}

}  // namespace ringforge
