#include "ringforge/zp.hpp"

#include <sstream>

namespace ringforge::zp {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Poly normalized(Poly f, unsigned p) {
  for (auto& c : f) c %= p;
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

bool is_zero(const Poly& f) { return f.empty(); }

bool is_monic(const Poly& f) { return !f.empty() && f.back() == 1; }

std::size_t degree(const Poly& f) { return f.size() - 1; }

Poly add(const Poly& a, const Poly& b, unsigned p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    unsigned v = 0;
    if (i < a.size()) v += a[i];
    if (i < b.size()) v += b[i];
    out[i] = v % p;
  }
  return normalized(std::move(out), p);
}

Poly sub(const Poly& a, const Poly& b, unsigned p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    unsigned v = p;
    if (i < a.size()) v += a[i];
    if (i < b.size()) v -= b[i];
    out[i] = v % p;
  }
  return normalized(std::move(out), p);
}

Poly mul(const Poly& a, const Poly& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> conv(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j)
        conv[i + j] += std::uint64_t(a[i]) * b[j];
  Poly out(conv.size());
  for (std::size_t i = 0; i < conv.size(); ++i) out[i] = unsigned(conv[i] % p);
  return normalized(std::move(out), p);
}

unsigned eval(const Poly& f, unsigned x, unsigned p) {
  std::uint64_t acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
  return unsigned(acc);
}

std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g, unsigned p) {
  Poly r = normalized(f, p);
  if (g.empty() || r.size() < g.size()) return {{}, r};
  // inverse of the leading coefficient mod p
  unsigned inv;
  {
    std::uint64_t base = g.back() % p, e = p - 2, acc = 1;
    while (e) {
      if (e & 1) acc = acc * base % p;
      base = base * base % p;
      e >>= 1;
    }
    inv = unsigned(acc);
  }
  const std::size_t dg = g.size() - 1;
  Poly q(r.size() - dg, 0);
  for (std::size_t i = r.size() - 1; i + 1 > dg; --i) {
    unsigned c = unsigned(std::uint64_t(r[i]) * inv % p);
    if (c) {
      q[i - dg] = c;
      for (std::size_t j = 0; j <= dg; ++j) {
        std::size_t k = i - dg + j;
        r[k] = unsigned((std::uint64_t(r[k]) + std::uint64_t(p - g[j] % p) * c) % p);
      }
    }
    if (i == 0) break;
  }
  return {normalized(std::move(q), p), normalized(std::move(r), p)};
}

bool is_irreducible(const Poly& f, unsigned p) {
  Poly g = normalized(f, p);
  if (g.size() < 2) return false;  // constants and zero are not irreducible
  std::size_t d = degree(g);
  if (d == 1) return true;
  // enumerate monic divisor candidates of degree 1..d/2
  for (std::size_t dd = 1; dd <= d / 2; ++dd) {
    Poly cand(dd + 1, 0);
    cand[dd] = 1;
    std::vector<unsigned> digits(dd, 0);
    while (true) {
      for (std::size_t i = 0; i < dd; ++i) cand[i] = digits[i];
      if (divrem(g, cand, p).second.empty()) return false;
      std::size_t i = 0;
      while (i < dd && ++digits[i] == p) digits[i++] = 0;
      if (i == dd) break;
    }
  }
  return true;
}

std::string to_string(const Poly& f, char variable) {
  if (f.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (!f[i]) continue;
    if (!first) out << '+';
    first = false;
    if (i == 0) {
      out << f[i];
    } else {
      if (f[i] != 1) out << f[i] << '*';
      out << variable;
      if (i > 1) out << '^' << i;
    }
  }
  return out.str();
}

}  // namespace ringforge::zp
