#include "ringforge/parse.hpp"

#include <cctype>
#include <map>
#include <string>

namespace ringforge {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool eof() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool try_consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!try_consume(c))
      error(std::string("expected '") + c + "'");
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  std::uint64_t nat() {
    if (!at_digit()) error("expected a number");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > (std::uint64_t(1) << 62)) error("number too large");
      ++pos_;
    }
    return v;
  }
  std::size_t pos() const { return pos_; }
  void rewind(std::size_t pos) { pos_ = pos; }
  [[noreturn]] void error(const std::string& message) {
    throw ParseError(pos_, message + " at byte " + std::to_string(pos_));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// --- ring-spec grammar ------------------------------------------------------

zp::Poly parse_zp_polylit(Cursor& cur, unsigned p) {
  std::map<std::size_t, std::int64_t> acc;
  std::int64_t sign = 1;
  if (cur.try_consume('-')) sign = -1;
  while (true) {
    std::int64_t coeff = 1;
    std::size_t exp = 0;
    bool have_coeff = false;
    if (cur.at_digit()) {
      coeff = std::int64_t(cur.nat());
      have_coeff = true;
      cur.try_consume('*');
    }
    if (cur.try_consume('x')) {
      exp = cur.try_consume('^') ? std::size_t(cur.nat()) : 1;
    } else if (!have_coeff) {
      cur.error("expected a coefficient or x");
    }
    acc[exp] += sign * coeff;
    if (cur.try_consume('+'))
      sign = 1;
    else if (cur.try_consume('-'))
      sign = -1;
    else
      break;
  }
  zp::Poly out(acc.empty() ? 0 : acc.rbegin()->first + 1, 0);
  for (auto [exp, c] : acc) {
    std::int64_t r = c % std::int64_t(p);
    if (r < 0) r += p;
    out[exp] = unsigned(r);
  }
  return zp::normalized(std::move(out), p);
}

struct PrimePower {
  unsigned p;
  unsigned k;
};

PrimePower prime_power_decomposition(Cursor& cur, std::uint64_t q) {
  if (q < 2) cur.error("prime power must be at least 2");
  std::uint64_t p = 2;
  while (q % p != 0) {
    ++p;
    if (p * p > q) {
      p = q;
      break;
    }
  }
  unsigned k = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1)
    fail(errc::semantic_error,
         "GF(" + std::to_string(q) + "): order is not a prime power");
  return {unsigned(p), k};
}

RingSpec parse_base(Cursor& cur) {
  char c = cur.peek();
  if (c == 'Z') {
    cur.expect('Z');
    std::uint64_t n = cur.nat();
    if (cur.peek() == '[') {
      cur.expect('[');
      cur.expect('x');
      cur.expect(']');
      cur.expect('/');
      cur.expect('(');
      if (!zp::is_prime(n))
        fail(errc::semantic_error,
             "Z" + std::to_string(n) + "[x]/(...): base must be prime");
      zp::Poly modulus = parse_zp_polylit(cur, unsigned(n));
      cur.expect(')');
      if (modulus.size() < 2 || !zp::is_monic(modulus))
        fail(errc::semantic_error, "quotient modulus must be monic of degree >= 1");
      return RingSpec::quot(unsigned(n), std::move(modulus));
    }
    return RingSpec::zn(n);
  }
  if (c == 'G') {
    cur.expect('G');
    cur.expect('F');
    cur.expect('(');
    std::uint64_t q = cur.nat();
    if (cur.try_consume(',')) {
      PrimePower pk = prime_power_decomposition(cur, q);
      zp::Poly modulus = parse_zp_polylit(cur, pk.p);
      cur.expect(')');
      return RingSpec::gf(pk.p, pk.k, std::move(modulus));
    }
    cur.expect(')');
    prime_power_decomposition(cur, q);  // reject non prime powers early
    auto params = default_gf_params(q);
    if (!params)
      fail(errc::semantic_error,
           "GF(" + std::to_string(q) + "): no default modulus for this order");
    return RingSpec::gf(params->p, params->k, std::move(params->modulus));
  }
  cur.error("expected a ring base (Z<n> or GF(..))");
}

// --- element and polynomial grammar ----------------------------------------

Ring::Elem parse_element_expr(Cursor& cur, const RingPtr& ring);

// A single coefficient/element atom; no leading sign, no indeterminate.
Ring::Elem parse_atom(Cursor& cur, const RingPtr& ring) {
  const Ring& r = *ring;
  char c = cur.peek();
  if (c == '(') {
    cur.expect('(');
    if (r.is_product()) {
      std::vector<Ring::Elem> comps;
      for (std::size_t i = 0; i < r.factor_count(); ++i) {
        if (i) cur.expect(',');
        comps.push_back(parse_element_expr(cur, r.factor(i)));
      }
      cur.expect(')');
      return r.embed(comps);
    }
    Ring::Elem e = parse_element_expr(cur, ring);
    cur.expect(')');
    return e;
  }
  if (c == '[') {
    if (r.kind() != Ring::Kind::gf && r.kind() != Ring::Kind::quot)
      fail(errc::coefficient_out_of_ring,
           "digit-vector literals require a quotient-style ring");
    cur.expect('[');
    std::vector<unsigned> digits;
    if (cur.peek() != ']') {
      digits.push_back(unsigned(cur.nat()));
      while (cur.try_consume(',')) digits.push_back(unsigned(cur.nat()));
    }
    cur.expect(']');
    if (digits.size() > r.modulus_degree())
      fail(errc::coefficient_out_of_ring, "digit vector longer than the modulus degree");
    return r.from_digits(digits);
  }
  if (c == 't') {
    if (r.kind() != Ring::Kind::gf && r.kind() != Ring::Kind::quot)
      fail(errc::coefficient_out_of_ring,
           "generator literal t requires a quotient-style ring");
    cur.expect('t');
    std::uint64_t e = cur.try_consume('^') ? cur.nat() : 1;
    return r.pow(r.generator(), e);
  }
  if (cur.at_digit()) {
    std::uint64_t n = cur.nat();
    std::size_t mark = cur.pos();
    bool star = cur.try_consume('*');
    if (cur.peek() == 't') {
      if (r.kind() != Ring::Kind::gf && r.kind() != Ring::Kind::quot)
        fail(errc::coefficient_out_of_ring,
             "generator literal t requires a quotient-style ring");
      cur.expect('t');
      std::uint64_t e = cur.try_consume('^') ? cur.nat() : 1;
      return r.mul(r.from_integer(std::int64_t(n % r.characteristic())),
                   r.pow(r.generator(), e));
    }
    if (star) cur.rewind(mark);  // the '*' belongs to the indeterminate
    return r.from_integer(std::int64_t(n % r.characteristic()));
  }
  cur.error("expected an element literal");
}

Ring::Elem parse_element_expr(Cursor& cur, const RingPtr& ring) {
  const Ring& r = *ring;
  bool negate = false;
  if (cur.try_consume('-'))
    negate = true;
  else
    cur.try_consume('+');
  Ring::Elem acc = parse_atom(cur, ring);
  if (negate) acc = r.neg(acc);
  while (true) {
    char c = cur.peek();
    if (c != '+' && c != '-') break;
    // stop at tuple / bracket boundaries handled by callers
    cur.expect(c);
    Ring::Elem next = parse_atom(cur, ring);
    acc = c == '-' ? r.sub(acc, next) : r.add(acc, next);
  }
  return acc;
}

}  // namespace

RingSpec parse_ring_spec(std::string_view text) {
  Cursor cur(text);
  std::vector<RingSpec> bases;
  bases.push_back(parse_base(cur));
  while (cur.peek() == 'x') {
    cur.expect('x');
    bases.push_back(parse_base(cur));
  }
  if (!cur.eof()) cur.error("unexpected trailing input");
  if (bases.size() == 1) return bases[0];
  return RingSpec::product(std::move(bases));
}

Poly parse_poly(std::string_view text, const RingPtr& ring) {
  const Ring& r = *ring;
  Cursor cur(text);
  std::map<std::size_t, Ring::Elem> acc;
  std::int64_t sign = 1;
  if (cur.try_consume('-')) sign = -1;
  while (true) {
    Ring::Elem coeff;
    std::size_t exp = 0;
    if (cur.peek() == 'x') {
      coeff = r.one();
    } else {
      coeff = parse_atom(cur, ring);
      cur.try_consume('*');
    }
    if (cur.try_consume('x')) exp = cur.try_consume('^') ? std::size_t(cur.nat()) : 1;
    if (sign < 0) coeff = r.neg(coeff);
    auto [it, inserted] = acc.emplace(exp, coeff);
    if (!inserted) it->second = r.add(it->second, coeff);
    if (cur.try_consume('+'))
      sign = 1;
    else if (cur.try_consume('-'))
      sign = -1;
    else
      break;
  }
  if (!cur.eof()) cur.error("unexpected trailing input");
  std::vector<Ring::Elem> coeffs(acc.empty() ? 0 : acc.rbegin()->first + 1, 0);
  for (auto [exp, c] : acc) coeffs[exp] = c;
  return Poly(ring, std::move(coeffs));
}

Ring::Elem parse_element(std::string_view text, const RingPtr& ring) {
  Cursor cur(text);
  Ring::Elem e = parse_element_expr(cur, ring);
  if (!cur.eof()) cur.error("unexpected trailing input");
  return e;
}

}  // namespace ringforge
