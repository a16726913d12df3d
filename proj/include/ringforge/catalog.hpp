#pragma once

#include <cstdint>
#include <vector>

#include "ringforge/ringspec.hpp"

namespace ringforge {

// Deterministic corpus of constructible ring specs: Z_n, the default Galois
// fields, quotient rings of small prime bases (reducible moduli included),
// and representative products, filtered to order <= max_order.
std::vector<RingSpec> builtin_specs(std::uint64_t max_order);

}  // namespace ringforge
