#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ringforge::zp {

// Dense polynomial over Z_p: index = exponent, no trailing zero coefficients.
// The empty vector is the zero polynomial.
using Poly = std::vector<unsigned>;

bool is_prime(std::uint64_t n);

Poly normalized(Poly f, unsigned p);
bool is_zero(const Poly& f);
bool is_monic(const Poly& f);
std::size_t degree(const Poly& f);  // precondition: f nonzero

Poly add(const Poly& a, const Poly& b, unsigned p);
Poly sub(const Poly& a, const Poly& b, unsigned p);
Poly mul(const Poly& a, const Poly& b, unsigned p);
unsigned eval(const Poly& f, unsigned x, unsigned p);

// Division with remainder; g must be nonzero (p prime, so any leading
// coefficient is invertible).
std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g, unsigned p);

// Trial division against all monic polynomials of degree <= deg(f)/2.
bool is_irreducible(const Poly& f, unsigned p);

std::string to_string(const Poly& f, char variable = 'x');

}  // namespace ringforge::zp
