#include "ringforge/format.hpp"

#include <sstream>

namespace ringforge {

std::string format_ring_spec(const RingSpec& spec) {
  if (auto* zn = std::get_if<RingSpec::Zn>(&spec.node))
    return "Z" + std::to_string(zn->n);
  if (auto* gf = std::get_if<RingSpec::Gf>(&spec.node)) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < gf->k; ++i) q *= gf->p;
    auto params = default_gf_params(q);
    if (params && params->modulus == gf->modulus)
      return "GF(" + std::to_string(q) + ")";
    return "GF(" + std::to_string(q) + "," + zp::to_string(gf->modulus) + ")";
  }
  if (auto* quot = std::get_if<RingSpec::Quot>(&spec.node))
    return "Z" + std::to_string(quot->p) + "[x]/(" +
           zp::to_string(quot->modulus) + ")";
  const auto& prod = std::get<RingSpec::Product>(spec.node);
  std::string out;
  for (std::size_t i = 0; i < prod.factors.size(); ++i) {
    if (i) out += " x ";
    out += format_ring_spec(prod.factors[i]);
  }
  return out;
}

std::string format_element(const Ring& ring, Ring::Elem e) {
  switch (ring.kind()) {
    case Ring::Kind::zn:
      return std::to_string(e);
    case Ring::Kind::gf:
    case Ring::Kind::quot: {
      auto d = ring.digits(e);
      std::ostringstream out;
      bool first = true;
      for (std::size_t i = d.size(); i-- > 0;) {
        if (!d[i]) continue;
        if (!first) out << '+';
        first = false;
        if (i == 0) {
          out << d[i];
        } else {
          if (d[i] != 1) out << d[i] << '*';
          out << 't';
          if (i > 1) out << '^' << i;
        }
      }
      return first ? "0" : out.str();
    }
    case Ring::Kind::product: {
      std::string out = "(";
      for (std::size_t i = 0; i < ring.factor_count(); ++i) {
        if (i) out += ",";
        out += format_element(*ring.factor(i), ring.project(e, i));
      }
      return out + ")";
    }
  }
  return {};
}

namespace {

// A coefficient is rendered bare when it reparses unambiguously next to
// "*x^k": plain residues and single generator monomials qualify, sums and
// tuples are parenthesized (tuples already carry parentheses).
std::string format_coefficient(const Ring& ring, Ring::Elem c) {
  std::string body = format_element(ring, c);
  if (ring.kind() == Ring::Kind::gf || ring.kind() == Ring::Kind::quot) {
    if (body.find('+') != std::string::npos) return "(" + body + ")";
  }
  return body;
}

}  // namespace

std::string format_poly(const Poly& f) {
  if (f.is_zero()) return "0";
  const Ring& ring = *f.ring();
  std::ostringstream out;
  bool first = true;
  auto cs = f.coeffs();
  for (std::size_t i = cs.size(); i-- > 0;) {
    if (cs[i] == 0) continue;
    if (!first) out << '+';
    first = false;
    if (i == 0) {
      out << format_coefficient(ring, cs[i]);
      continue;
    }
    if (cs[i] != ring.one()) out << format_coefficient(ring, cs[i]) << '*';
    out << 'x';
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

}  // namespace ringforge
