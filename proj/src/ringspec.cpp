#include "ringforge/ringspec.hpp"

#include <map>

#include "ringforge/errors.hpp"

namespace ringforge {

RingSpec RingSpec::gf(std::uint64_t q) {
  auto params = default_gf_params(q);
  if (!params)
    fail(errc::semantic_error,
         "GF(" + std::to_string(q) + "): not a prime power with a default modulus");
  return gf(params->p, params->k, std::move(params->modulus));
}

bool operator==(const RingSpec& a, const RingSpec& b) {
  if (a.node.index() != b.node.index()) return false;
  if (auto* za = std::get_if<RingSpec::Zn>(&a.node))
    return za->n == std::get<RingSpec::Zn>(b.node).n;
  if (auto* ga = std::get_if<RingSpec::Gf>(&a.node)) {
    const auto& gb = std::get<RingSpec::Gf>(b.node);
    return ga->p == gb.p && ga->k == gb.k && ga->modulus == gb.modulus;
  }
  if (auto* qa = std::get_if<RingSpec::Quot>(&a.node)) {
    const auto& qb = std::get<RingSpec::Quot>(b.node);
    return qa->p == qb.p && qa->modulus == qb.modulus;
  }
  const auto& pa = std::get<RingSpec::Product>(a.node);
  const auto& pb = std::get<RingSpec::Product>(b.node);
  if (pa.factors.size() != pb.factors.size()) return false;
  for (std::size_t i = 0; i < pa.factors.size(); ++i)
    if (!(pa.factors[i] == pb.factors[i])) return false;
  return true;
}

std::optional<GfParams> default_gf_params(std::uint64_t q) {
  if (zp::is_prime(q)) return GfParams{unsigned(q), 1, zp::Poly{0, 1}};
  // coefficient lists are ascending by exponent; every entry is validated
  // irreducible by the unit tests
  static const std::map<std::uint64_t, GfParams> table = {
      {4, {2, 2, {1, 1, 1}}},
      {8, {2, 3, {1, 1, 0, 1}}},
      {9, {3, 2, {1, 0, 1}}},
      {16, {2, 4, {1, 1, 0, 0, 1}}},
      {25, {5, 2, {2, 0, 1}}},
      {27, {3, 3, {1, 2, 0, 1}}},
      {32, {2, 5, {1, 0, 1, 0, 0, 1}}},
      {49, {7, 2, {3, 1, 1}}},
      {64, {2, 6, {1, 1, 0, 0, 0, 0, 1}}},
      {81, {3, 4, {2, 0, 0, 2, 1}}},
      {121, {11, 2, {2, 7, 1}}},
      {125, {5, 3, {3, 3, 0, 1}}},
      {128, {2, 7, {1, 0, 0, 1, 0, 0, 0, 1}}},
      {169, {13, 2, {2, 1, 1}}},
      {243, {3, 5, {1, 2, 0, 0, 0, 1}}},
      {256, {2, 8, {1, 1, 0, 1, 1, 0, 0, 0, 1}}},
      {343, {7, 3, {2, 3, 0, 1}}},
      {512, {2, 9, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}}},
      {625, {5, 4, {1, 0, 1, 1, 1}}},
      {1024, {2, 10, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}}},
  };
  auto it = table.find(q);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

}  // namespace ringforge
