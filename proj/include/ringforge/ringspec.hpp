#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "ringforge/zp.hpp"

namespace ringforge {

// Algebraic description of a finite commutative ring with identity:
// a constructor tree over Z_n, GF(p^k), Z_p[x]/(f), and finite products.
struct RingSpec {
  struct Zn {
    std::uint64_t n;
  };
  struct Gf {
    unsigned p;
    unsigned k;
    zp::Poly modulus;  // monic, degree k, irreducible over Z_p
  };
  struct Quot {
    unsigned p;
    zp::Poly modulus;  // monic, degree >= 1, reducibility allowed
  };
  struct Product {
    std::vector<RingSpec> factors;  // nonempty, ordered
  };

  std::variant<Zn, Gf, Quot, Product> node;

  static RingSpec zn(std::uint64_t n) { return {Zn{n}}; }
  static RingSpec gf(unsigned p, unsigned k, zp::Poly modulus) {
    return {Gf{p, k, std::move(modulus)}};
  }
  static RingSpec gf(std::uint64_t q);  // uses the default modulus table
  static RingSpec quot(unsigned p, zp::Poly modulus) {
    return {Quot{p, std::move(modulus)}};
  }
  static RingSpec product(std::vector<RingSpec> factors) {
    return {Product{std::move(factors)}};
  }
};

bool operator==(const RingSpec& a, const RingSpec& b);
inline bool operator!=(const RingSpec& a, const RingSpec& b) { return !(a == b); }

// Fixed table of default irreducible moduli so that GF(q) literals without an
// explicit modulus are reproducible. Covers prime powers q = p^k, k >= 2, up
// to 1024; for prime q the modulus is x.
struct GfParams {
  unsigned p;
  unsigned k;
  zp::Poly modulus;
};
std::optional<GfParams> default_gf_params(std::uint64_t q);

}  // namespace ringforge
