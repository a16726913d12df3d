#include "ringforge/ring.hpp"

#include <algorithm>
#include <numeric>

namespace ringforge {

namespace {

std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 r = (unsigned __int128)a * b;
  if (r > UINT64_MAX)
    fail(errc::too_large, "ring order exceeds the representable range");
  return std::uint64_t(r);
}

std::uint64_t checked_pow_u64(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul_u64(r, base);
  return r;
}

}  // namespace

Ring::Elem Ring::add(Elem a, Elem b) const {
  switch (kind_) {
    case Kind::zn: {
      Elem s = a + b;  // order >= 2 so no uint64 overflow for canonical inputs
      return s >= n_ ? s - n_ : s;
    }
    case Kind::gf:
    case Kind::quot: {
      if (p_ == 2) return a ^ b;
      Elem out = 0, stride = 1;
      for (std::size_t i = 0; i < deg_; ++i) {
        unsigned da = unsigned(a % p_), db = unsigned(b % p_);
        a /= p_;
        b /= p_;
        out += stride * ((da + db) % p_);
        stride *= p_;
      }
      return out;
    }
    case Kind::product: {
      Elem out = 0;
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        Elem ai = (a / strides_[i]) % factors_[i]->order();
        Elem bi = (b / strides_[i]) % factors_[i]->order();
        out += strides_[i] * factors_[i]->add(ai, bi);
      }
      return out;
    }
  }
  return 0;
}

Ring::Elem Ring::neg(Elem a) const {
  switch (kind_) {
    case Kind::zn:
      return a == 0 ? 0 : n_ - a;
    case Kind::gf:
    case Kind::quot: {
      if (p_ == 2) return a;
      Elem out = 0, stride = 1;
      for (std::size_t i = 0; i < deg_; ++i) {
        unsigned d = unsigned(a % p_);
        a /= p_;
        out += stride * (d == 0 ? 0 : p_ - d);
        stride *= p_;
      }
      return out;
    }
    case Kind::product: {
      Elem out = 0;
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        Elem ai = (a / strides_[i]) % factors_[i]->order();
        out += strides_[i] * factors_[i]->neg(ai);
      }
      return out;
    }
  }
  return 0;
}

Ring::Elem Ring::mul_symbolic(Elem a, Elem b) const {
  switch (kind_) {
    case Kind::zn:
      return Elem((unsigned __int128)a * b % n_);
    case Kind::gf:
    case Kind::quot: {
      std::vector<unsigned> da = digits(a), db = digits(b);
      std::vector<std::uint64_t> conv(2 * deg_ - 1, 0);
      for (std::size_t i = 0; i < deg_; ++i)
        if (da[i])
          for (std::size_t j = 0; j < deg_; ++j)
            conv[i + j] += std::uint64_t(da[i]) * db[j];
      // reduce modulo the monic modulus, top down
      for (std::size_t i = conv.size(); i-- > deg_;) {
        unsigned c = unsigned(conv[i] % p_);
        if (c)
          for (std::size_t j = 0; j < deg_; ++j)
            conv[i - deg_ + j] =
                (conv[i - deg_ + j] + std::uint64_t(p_ - modulus_[j] % p_) * c) % p_;
      }
      Elem out = 0, stride = 1;
      for (std::size_t i = 0; i < deg_; ++i) {
        out += stride * (conv[i] % p_);
        stride *= p_;
      }
      return out;
    }
    case Kind::product: {
      Elem out = 0;
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        Elem ai = (a / strides_[i]) % factors_[i]->order();
        Elem bi = (b / strides_[i]) % factors_[i]->order();
        out += strides_[i] * factors_[i]->mul(ai, bi);
      }
      return out;
    }
  }
  return 0;
}

Ring::Elem Ring::pow(Elem a, std::uint64_t k) const {
  Elem acc = one_, base = a;
  while (k) {
    if (k & 1) acc = mul(acc, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return acc;
}

Ring::Elem Ring::scalar(std::uint64_t k, Elem a) const {
  k %= char_;
  Elem acc = 0, base = a;
  while (k) {
    if (k & 1) acc = add(acc, base);
    k >>= 1;
    if (k) base = add(base, base);
  }
  return acc;
}

Ring::Elem Ring::from_integer(std::int64_t v) const {
  std::int64_t m = std::int64_t(char_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return scalar(std::uint64_t(r), one_);
}

Ring::Elem Ring::project(Elem a, std::size_t i) const {
  if (kind_ != Kind::product)
    fail(errc::not_a_product, "projection requires a product ring");
  return (a / strides_[i]) % factors_[i]->order();
}

Ring::Elem Ring::embed(const std::vector<Elem>& components) const {
  if (kind_ != Kind::product)
    fail(errc::not_a_product, "embedding requires a product ring");
  if (components.size() != factors_.size())
    fail(errc::ring_mismatch, "component count does not match factor count");
  Elem out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (components[i] >= factors_[i]->order())
      fail(errc::coefficient_out_of_ring, "component exceeds factor order");
    out += strides_[i] * components[i];
  }
  return out;
}

std::vector<unsigned> Ring::digits(Elem a) const {
  std::vector<unsigned> out(deg_);
  for (std::size_t i = 0; i < deg_; ++i) {
    out[i] = unsigned(a % p_);
    a /= p_;
  }
  return out;
}

Ring::Elem Ring::from_digits(const std::vector<unsigned>& d) const {
  Elem out = 0, stride = 1;
  for (std::size_t i = 0; i < deg_; ++i) {
    unsigned v = i < d.size() ? d[i] : 0;
    if (v >= p_)
      fail(errc::coefficient_out_of_ring, "digit exceeds the residue prime");
    out += stride * v;
    stride *= p_;
  }
  return out;
}

Ring::Elem Ring::generator() const {
  if (kind_ != Kind::gf && kind_ != Kind::quot)
    fail(errc::wrong_ring_shape, "only quotient-style rings have a generator");
  if (deg_ >= 2) return Elem(p_);
  return from_integer(-std::int64_t(modulus_[0]));  // x = -c mod (x + c)
}

void Ring::build_mul_table() {
  mul_table_.assign(order_ * order_, 0);
  if (kind_ == Kind::gf || kind_ == Kind::quot) {
    // fill rows through a*b = c0*a + x*(a*floor(b/p)); multiplication by x
    // is one table lookup after the mulx map is prepared
    std::vector<Elem> mulx(order_);
    Elem x = generator();
    for (Elem e = 0; e < order_; ++e) mulx[e] = mul_symbolic(e, x);
    std::vector<Elem> ca(p_);
    for (Elem a = 0; a < order_; ++a) {
      ca[0] = 0;
      for (unsigned c = 1; c < p_; ++c) ca[c] = add(ca[c - 1], a);
      std::uint16_t* row = &mul_table_[a * order_];
      row[0] = 0;
      for (Elem b = 1; b < order_; ++b) {
        unsigned c0 = unsigned(b % p_);
        Elem bp = b / p_;
        row[b] = std::uint16_t(add(ca[c0], mulx[row[bp]]));
      }
    }
  } else {
    for (Elem a = 0; a < order_; ++a)
      for (Elem b = 0; b < order_; ++b)
        mul_table_[a * order_ + b] = std::uint16_t(mul_symbolic(a, b));
  }
}

RingPtr build_ring(const RingSpec& spec, std::uint64_t memo_cutoff) {
  auto ring = std::shared_ptr<Ring>(new Ring());
  ring->spec_ = spec;
  if (auto* zn = std::get_if<RingSpec::Zn>(&spec.node)) {
    if (zn->n < 2) fail(errc::zero_ring, "Z_n requires n >= 2");
    if (zn->n > (std::uint64_t(1) << 62))
      fail(errc::too_large, "Z_n modulus exceeds the supported range");
    ring->kind_ = Ring::Kind::zn;
    ring->n_ = zn->n;
    ring->order_ = zn->n;
    ring->char_ = zn->n;
    ring->one_ = 1;
    ring->field_ = zp::is_prime(zn->n);
  } else if (auto* gf = std::get_if<RingSpec::Gf>(&spec.node)) {
    if (!zp::is_prime(gf->p))
      fail(errc::not_prime, "GF characteristic must be prime");
    zp::Poly mod = zp::normalized(gf->modulus, gf->p);
    if (gf->k < 1 || mod.size() != std::size_t(gf->k) + 1 || !zp::is_monic(mod))
      fail(errc::semantic_error, "GF modulus must be monic of degree k");
    if (!zp::is_irreducible(mod, gf->p))
      fail(errc::reducible_modulus,
           "GF modulus is reducible over Z_" + std::to_string(gf->p));
    ring->kind_ = Ring::Kind::gf;
    ring->p_ = gf->p;
    ring->modulus_ = std::move(mod);
    ring->deg_ = gf->k;
    ring->order_ = checked_pow_u64(gf->p, gf->k);
    ring->char_ = gf->p;
    ring->one_ = 1;
    ring->field_ = true;
  } else if (auto* quot = std::get_if<RingSpec::Quot>(&spec.node)) {
    if (!zp::is_prime(quot->p))
      fail(errc::not_prime, "quotient base prime is composite");
    zp::Poly mod = zp::normalized(quot->modulus, quot->p);
    if (mod.size() < 2 || !zp::is_monic(mod))
      fail(errc::semantic_error, "quotient modulus must be monic of degree >= 1");
    ring->kind_ = Ring::Kind::quot;
    ring->p_ = quot->p;
    ring->deg_ = zp::degree(mod);
    ring->modulus_ = std::move(mod);
    ring->order_ = checked_pow_u64(quot->p, unsigned(ring->deg_));
    ring->char_ = quot->p;
    ring->one_ = 1;
    ring->field_ = zp::is_irreducible(ring->modulus_, quot->p);
  } else {
    const auto& prod = std::get<RingSpec::Product>(spec.node);
    if (prod.factors.empty())
      fail(errc::empty_product, "product requires at least one factor");
    ring->kind_ = Ring::Kind::product;
    ring->order_ = 1;
    ring->char_ = 1;
    for (const auto& f : prod.factors) {
      RingPtr sub = build_ring(f, memo_cutoff);
      ring->order_ = checked_mul_u64(ring->order_, sub->order());
      ring->char_ = std::lcm(ring->char_, sub->characteristic());
      ring->factors_.push_back(std::move(sub));
    }
    ring->strides_.resize(ring->factors_.size());
    std::uint64_t stride = 1;
    for (std::size_t i = ring->factors_.size(); i-- > 0;) {
      ring->strides_[i] = stride;
      stride = checked_mul_u64(stride, ring->factors_[i]->order());
    }
    std::vector<Ring::Elem> ones;
    for (const auto& f : ring->factors_) ones.push_back(f->one());
    ring->one_ = ring->embed(ones);
    ring->field_ = ring->factors_.size() == 1 && ring->factors_[0]->is_field();
  }
  // memory guard: a full table of order 8192 is already 128 MiB
  if (ring->order_ <= std::min<std::uint64_t>(memo_cutoff, 8192))
    ring->build_mul_table();
  return ring;
}

bool same_ring(const Ring& a, const Ring& b) {
  return &a == &b || a.spec() == b.spec();
}

void ensure_same_ring(const Ring& a, const Ring& b) {
  if (!same_ring(a, b))
    fail(errc::ring_mismatch, "operands belong to different rings");
}

std::vector<Ring::Elem> enumerate_elements(const Ring& ring) {
  if (ring.order() > (std::uint64_t(1) << 26))
    fail(errc::too_large, "enumeration of a ring this large is not supported");
  std::vector<Ring::Elem> out(ring.order());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

std::vector<Ring::Elem> annihilator(const Ring& ring, Ring::Elem a) {
  std::vector<Ring::Elem> out;
  for (Ring::Elem y = 0; y < ring.order(); ++y)
    if (ring.mul(a, y) == 0) out.push_back(y);
  return out;
}

std::vector<Ring::Elem> prime_subring(const Ring& ring) {
  std::vector<Ring::Elem> out;
  Ring::Elem cur = 0;
  for (std::uint64_t k = 0; k < ring.characteristic(); ++k) {
    out.push_back(cur);
    cur = ring.add(cur, ring.one());
  }
  std::sort(out.begin(), out.end());
  return out;
}

AxiomReport verify_ring_axioms(const Ring& ring, std::uint64_t cutoff) {
  if (ring.order() > cutoff)
    fail(errc::too_large, "axiom verification cutoff exceeded");
  return verify_axioms_with(
      ring.order(), ring.zero(), ring.one(),
      [&](Ring::Elem a, Ring::Elem b) { return ring.add(a, b); },
      [&](Ring::Elem a, Ring::Elem b) { return ring.mul(a, b); },
      [&](Ring::Elem a) { return ring.neg(a); });
}

RingElement::RingElement(RingPtr ring, Ring::Elem index)
    : ring_(std::move(ring)), index_(index) {
  if (index_ >= ring_->order())
    fail(errc::coefficient_out_of_ring, "element index exceeds ring order");
}

RingElement operator+(const RingElement& a, const RingElement& b) {
  ensure_same_ring(*a.ring_, *b.ring_);
  return {a.ring_, a.ring_->add(a.index_, b.index_)};
}

RingElement operator-(const RingElement& a, const RingElement& b) {
  ensure_same_ring(*a.ring_, *b.ring_);
  return {a.ring_, a.ring_->sub(a.index_, b.index_)};
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  ensure_same_ring(*a.ring_, *b.ring_);
  return {a.ring_, a.ring_->mul(a.index_, b.index_)};
}

RingElement RingElement::operator-() const {
  return {ring_, ring_->neg(index_)};
}

bool operator==(const RingElement& a, const RingElement& b) {
  return same_ring(*a.ring_, *b.ring_) && a.index_ == b.index_;
}

}  // namespace ringforge
