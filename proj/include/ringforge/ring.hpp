#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ringforge/errors.hpp"
#include "ringforge/ringspec.hpp"

namespace ringforge {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// A constructed finite commutative ring with identity. Elements are indices
// into the canonical enumeration:
//   Zn        ascending residues,
//   Gf/Quot   base-p digit strings, constant coefficient least significant,
//   Product   row-major over the factor enumerations (last factor fastest).
//
// Handles are immutable after construction and all operations are pure, so
// unrestricted concurrent reads are safe. Multiplication is memoized as a
// full table for rings of order <= memo cutoff; larger rings multiply
// symbolically.
class Ring {
 public:
  using Elem = std::uint64_t;
  enum class Kind { zn, gf, quot, product };

  static constexpr std::uint64_t kDefaultMemoCutoff = 4096;

  const RingSpec& spec() const { return spec_; }
  Kind kind() const { return kind_; }
  std::uint64_t order() const { return order_; }
  std::uint64_t characteristic() const { return char_; }
  bool is_field() const { return field_; }
  bool memoized() const { return !mul_table_.empty(); }

  Elem zero() const { return 0; }
  Elem one() const { return one_; }

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    return mul_table_.empty() ? mul_symbolic(a, b)
                              : Elem(mul_table_[a * order_ + b]);
  }
  Elem pow(Elem a, std::uint64_t k) const;     // a^0 == one
  Elem scalar(std::uint64_t k, Elem a) const;  // k-fold sum of a
  Elem from_integer(std::int64_t v) const;     // (v mod char) * one

  // Product structure.
  bool is_product() const { return kind_ == Kind::product; }
  std::size_t factor_count() const { return factors_.size(); }
  const RingPtr& factor(std::size_t i) const { return factors_[i]; }
  Elem project(Elem a, std::size_t i) const;
  Elem embed(const std::vector<Elem>& components) const;

  // Gf/Quot structure.
  unsigned residue_prime() const { return p_; }
  std::size_t modulus_degree() const { return deg_; }
  const zp::Poly& coset_modulus() const { return modulus_; }
  std::vector<unsigned> digits(Elem a) const;
  Elem from_digits(const std::vector<unsigned>& d) const;
  Elem generator() const;  // the class of x modulo the modulus

 private:
  friend RingPtr build_ring(const RingSpec&, std::uint64_t);
  Ring() = default;

  Elem mul_symbolic(Elem a, Elem b) const;
  void build_mul_table();

  RingSpec spec_;
  Kind kind_ = Kind::zn;
  std::uint64_t order_ = 0;
  std::uint64_t char_ = 0;
  Elem one_ = 0;
  bool field_ = false;

  std::uint64_t n_ = 0;  // zn
  unsigned p_ = 0;       // gf / quot
  std::size_t deg_ = 0;
  zp::Poly modulus_;

  std::vector<RingPtr> factors_;  // product
  std::vector<std::uint64_t> strides_;

  std::vector<std::uint16_t> mul_table_;
};

// Validates the spec and returns an immutable handle.
// Errors: ZeroRing, NotPrime, ReducibleModulus, EmptyProduct, TooLarge.
RingPtr build_ring(const RingSpec& spec,
                   std::uint64_t memo_cutoff = Ring::kDefaultMemoCutoff);

bool same_ring(const Ring& a, const Ring& b);
void ensure_same_ring(const Ring& a, const Ring& b);

// Canonical enumeration, i.e. 0..order-1.
std::vector<Ring::Elem> enumerate_elements(const Ring& ring);

// {y : a*y = 0}, ascending. Always an ideal containing 0.
std::vector<Ring::Elem> annihilator(const Ring& ring, Ring::Elem a);

// Additive closure of 1, ascending; its size equals the characteristic.
std::vector<Ring::Elem> prime_subring(const Ring& ring);

struct AxiomReport {
  bool pass = true;
  std::string violation;  // first violating law with its witness triple
};

// Exhaustive check of the commutative-ring-with-identity laws on explicit
// operations (usable with fault-injected tables in tests).
template <class AddFn, class MulFn, class NegFn>
AxiomReport verify_axioms_with(std::uint64_t order, Ring::Elem zero,
                               Ring::Elem one, AddFn&& add, MulFn&& mul,
                               NegFn&& neg) {
  auto report = [](const char* law, Ring::Elem a, Ring::Elem b, Ring::Elem c) {
    AxiomReport r;
    r.pass = false;
    r.violation = std::string(law) + " at a=" + std::to_string(a) +
                  " b=" + std::to_string(b) + " c=" + std::to_string(c);
    return r;
  };
  for (Ring::Elem a = 0; a < order; ++a) {
    if (add(a, zero) != a) return report("additive identity", a, zero, zero);
    if (mul(a, one) != a) return report("multiplicative identity", a, one, one);
    if (add(a, neg(a)) != zero) return report("additive inverse", a, neg(a), zero);
    for (Ring::Elem b = a; b < order; ++b) {
      if (add(a, b) != add(b, a)) return report("addition commutativity", a, b, b);
      if (mul(a, b) != mul(b, a)) return report("multiplication commutativity", a, b, b);
    }
    for (Ring::Elem b = 0; b < order; ++b)
      for (Ring::Elem c = 0; c < order; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c)))
          return report("addition associativity", a, b, c);
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          return report("multiplication associativity", a, b, c);
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
          return report("distributivity", a, b, c);
      }
  }
  return {};
}

// Errors: TooLarge beyond the cutoff.
AxiomReport verify_ring_axioms(const Ring& ring, std::uint64_t cutoff = 4096);

// Checked element handle for public-facing arithmetic; operations on
// elements of different rings raise RingMismatch.
class RingElement {
 public:
  RingElement(RingPtr ring, Ring::Elem index);
  const RingPtr& ring() const { return ring_; }
  Ring::Elem index() const { return index_; }

  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  RingElement operator-() const;
  friend bool operator==(const RingElement& a, const RingElement& b);

 private:
  RingPtr ring_;
  Ring::Elem index_;
};

}  // namespace ringforge
