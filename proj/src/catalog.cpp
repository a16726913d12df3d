#include "ringforge/catalog.hpp"

#include "ringforge/parse.hpp"

namespace ringforge {

std::vector<RingSpec> builtin_specs(std::uint64_t max_order) {
  std::vector<std::pair<std::uint64_t, RingSpec>> entries;
  auto put = [&](std::uint64_t order, const char* text) {
    entries.emplace_back(order, parse_ring_spec(text));
  };

  for (std::uint64_t n = 2; n <= 64; ++n)
    entries.emplace_back(n, RingSpec::zn(n));
  for (std::uint64_t q : {4, 8, 9, 16, 25, 27, 32, 49, 64})
    entries.emplace_back(q, RingSpec::gf(q));

  put(4, "Z2[x]/(x^2)");
  put(4, "Z2[x]/(x^2+x)");  // reducible, isomorphic to Z2 x Z2
  put(8, "Z2[x]/(x^3)");
  put(16, "Z2[x]/(x^4)");
  put(16, "Z2[x]/(x^4+x^3)");
  put(32, "Z2[x]/(x^5+x^4)");
  put(9, "Z3[x]/(x^2)");
  put(27, "Z3[x]/(x^3)");
  put(25, "Z5[x]/(x^2)");
  put(49, "Z7[x]/(x^2)");

  put(4, "Z2 x Z2");
  put(6, "Z3 x Z2");
  put(6, "Z2 x Z3");
  put(8, "Z2 x Z4");
  put(8, "Z2 x Z2 x Z2");
  put(8, "Z2 x GF(4)");
  put(8, "Z2 x Z2[x]/(x^2)");
  put(9, "Z3 x Z3");
  put(12, "Z4 x Z3");
  put(16, "Z2 x Z2 x Z2 x Z2");
  put(16, "GF(4) x GF(4)");
  put(16, "Z2[x]/(x^2) x Z2[x]/(x^2)");
  put(16, "Z2 x GF(8)");
  put(16, "Z4 x Z4");
  put(18, "Z2 x Z9");
  put(24, "Z8 x Z3");
  put(30, "Z2 x Z3 x Z5");
  put(32, "Z2 x Z2[x]/(x^4)");
  put(36, "Z6 x Z6");
  put(36, "Z4 x Z9");
  put(36, "GF(4) x Z9");
  put(48, "GF(16) x Z3");
  put(64, "Z8 x Z8");
  put(64, "GF(4) x GF(16)");
  put(64, "Z2[x]/(x^3) x Z2[x]/(x^3)");

  std::vector<RingSpec> out;
  for (auto& [order, spec] : entries)
    if (order <= max_order) out.push_back(std::move(spec));
  return out;
}

}  // namespace ringforge
