#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ringforge/ring.hpp"

namespace ringforge {

// Univariate polynomial over a constructed ring: dense coefficient sequence,
// index = exponent, normalized so the last coefficient is nonzero. The zero
// polynomial has an empty sequence and its degree is the nullopt sentinel,
// never an integer.
class Poly {
 public:
  Poly(RingPtr ring, std::vector<Ring::Elem> coeffs);

  static Poly zero(RingPtr ring) { return Poly(std::move(ring), {}); }
  static Poly constant(RingPtr ring, Ring::Elem c) {
    return Poly(std::move(ring), {c});
  }
  static Poly monomial(RingPtr ring, Ring::Elem c, std::size_t exp);
  static Poly identity(RingPtr ring);  // the polynomial x

  const RingPtr& ring() const { return ring_; }
  std::span<const Ring::Elem> coeffs() const { return coeffs_; }
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const {
    return !coeffs_.empty() && coeffs_.back() == ring_->one();
  }
  Ring::Elem coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : 0;
  }

  Poly scaled(Ring::Elem c) const;  // zero-divisor scaling allowed

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  RingPtr ring_;
  std::vector<Ring::Elem> coeffs_;
};

// Horner evaluation; eval(zero, a) = 0.
Ring::Elem eval(const Poly& f, Ring::Elem at);
RingElement eval(const Poly& f, const RingElement& at);  // checked

// Coefficient-wise derivative (i+1) * a_{i+1}, defined without limits.
Poly formal_derivative(const Poly& f);

// Value of a polynomial at every ring element, canonical enumeration order.
// Two polynomials induce equal functions iff their tables are equal.
struct FunctionTable {
  RingPtr ring;
  std::vector<Ring::Elem> values;
};
bool operator==(const FunctionTable& a, const FunctionTable& b);
inline bool operator!=(const FunctionTable& a, const FunctionTable& b) {
  return !(a == b);
}
FunctionTable function_table(const Poly& f);

// Division by a monic divisor: f = q*g + r with deg r < deg g or r = 0;
// the pair is unique under these constraints.
// Errors: NonMonicDivisor.
struct DivRem {
  Poly quotient;
  Poly remainder;
};
DivRem divrem(const Poly& f, const Poly& g);

// Monic product of (x - r) over the listed roots; duplicates allowed;
// the empty list gives 1.
Poly from_roots(RingPtr ring, std::span<const Ring::Elem> roots);

// Coefficient-wise projection onto the factors of a product ring, and its
// inverse. recombine(decompose(f)) == f.
// Errors: NotAProduct.
std::vector<Poly> decompose_over_product(const Poly& f);
Poly recombine(const RingPtr& product_ring, std::span<const Poly> parts);

}  // namespace ringforge
