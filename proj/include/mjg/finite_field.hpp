#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mjg/combinatorics.hpp"

namespace mjg {

/// Element of GF(p^e) encoded as the integer sum c_i p^i of its coefficients
/// (c_0 is the constant term). Zero is 0 and one is 1.
using FieldElement = std::uint32_t;

namespace detail {

using Poly = std::vector<std::uint32_t>;  // coefficients, constant term first

inline void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Remainder of a modulo b over GF(p); b must be nonzero.
inline Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  poly_trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = static_cast<std::uint32_t>(powmod(b.back(), p - 2, p));
  while (a.size() > db) {
    const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * b[i]) % p);
    poly_trim(a);
  }
  return a;
}

}  // namespace detail

class FiniteField {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

  /// Builds GF(p^e). The modulus is the monic irreducible of least code; omega is the
  /// primitive element of least code.
  static FiniteField build(std::uint32_t p, unsigned e) {
    if (!is_prime(p)) throw std::invalid_argument("build_field: p is not prime");
    if (e == 0) throw std::invalid_argument("build_field: e must be positive");
    std::uint64_t order = 1;
    for (unsigned i = 0; i < e; ++i) {
      order *= p;
      if (order > kMaxOrder) throw std::invalid_argument("build_field: field too large");
    }
    FiniteField F;
    F.p_ = p;
    F.e_ = e;
    F.order_ = static_cast<std::uint32_t>(order);
    F.place_.resize(e + 1);
    F.place_[0] = 1;
    for (unsigned i = 1; i <= e; ++i) F.place_[i] = F.place_[i - 1] * p;
    F.choose_modulus();
    F.build_tables();
    return F;
  }

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return e_; }
  std::uint32_t order() const { return order_; }
  FieldElement omega() const { return omega_; }
  /// Monic modulus, constant term first, length e + 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement add(FieldElement a, FieldElement b) const {
    if (p_ == 2) return a ^ b;
    if (e_ == 1) return (a + b) % p_;
    if (!add_table_.empty()) return add_table_[std::size_t{a} * order_ + b];
    return add_digits(a, b);
  }

  FieldElement neg(FieldElement a) const {
    if (p_ == 2 || a == 0) return a;
    if (e_ == 1) return p_ - a;
    FieldElement r = 0;
    for (unsigned i = 0; i < e_; ++i) {
      const std::uint32_t c = a / place_[i] % p_;
      r += ((p_ - c) % p_) * place_[i];
    }
    return r;
  }

  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  FieldElement inv(FieldElement a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
  }

  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

  /// a^k by square-and-multiply; 0^0 = 1.
  FieldElement pow(FieldElement a, std::uint64_t k) const {
    FieldElement r = 1;
    while (k > 0) {
      if (k & 1U) r = mul(r, a);
      a = mul(a, a);
      k >>= 1U;
    }
    return r;
  }

  /// The exponent x in [0, order-2] with omega^x = a.
  std::uint32_t dlog(FieldElement a) const {
    check(a);
    if (a == 0) throw std::domain_error("discrete_log of zero");
    return log_[a];
  }

  /// omega^x for any integer exponent x >= 0.
  FieldElement exp(std::uint64_t x) const { return exp_[x % (order_ - 1)]; }

  /// a^(q^i) where q = p^f is the order of a subfield (f divides e).
  FieldElement frobenius_power(FieldElement a, std::uint64_t i, std::uint64_t q) const {
    const auto pp = prime_power(q);
    if (!pp || pp->p != p_ || e_ % pp->e != 0)
      throw std::invalid_argument("frobenius_power: q is not a subfield order");
    if (a == 0) return 0;
    const std::uint64_t k = powmod(q, i, order_ - 1);
    return exp_[(std::uint64_t{log_[a]} * k) % (order_ - 1)];
  }

  std::vector<std::uint32_t> to_coeffs(FieldElement a) const {
    check(a);
    std::vector<std::uint32_t> c(e_);
    for (unsigned i = 0; i < e_; ++i) c[i] = a / place_[i] % p_;
    return c;
  }

  FieldElement from_coeffs(const std::vector<std::uint32_t>& c) const {
    if (c.size() != e_) throw std::invalid_argument("from_coeffs: need exactly e coefficients");
    FieldElement a = 0;
    for (unsigned i = 0; i < e_; ++i) {
      if (c[i] >= p_) throw std::invalid_argument("from_coeffs: coefficient out of range");
      a += c[i] * place_[i];
    }
    return a;
  }

  /// Polynomial notation in t, e.g. "t^2+2t+1".
  std::string to_string(FieldElement a) const {
    if (a == 0) return "0";
    const auto c = to_coeffs(a);
    std::string s;
    for (unsigned i = e_; i-- > 0;) {
      if (c[i] == 0) continue;
      if (!s.empty()) s += "+";
      if (c[i] != 1 || i == 0) s += std::to_string(c[i]);
      if (i >= 1) s += "t";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

  void check(FieldElement a) const {
    if (a >= order_) throw std::out_of_range("element outside field");
  }

 private:
  static constexpr std::uint32_t kAddTableLimit = 1024;

  std::uint32_t p_ = 0;
  unsigned e_ = 0;
  std::uint32_t order_ = 0;
  std::vector<std::uint32_t> place_;
  std::vector<std::uint32_t> modulus_;
  FieldElement omega_ = 0;
  std::vector<FieldElement> exp_;   // length 2(order-1) so log sums need no reduction
  std::vector<std::uint32_t> log_;  // log_[0] unused
  std::vector<FieldElement> add_table_;

  FieldElement add_digits(FieldElement a, FieldElement b) const {
    FieldElement r = 0;
    for (unsigned i = 0; i < e_; ++i) r += (a / place_[i] % p_ + b / place_[i] % p_) % p_ * place_[i];
    return r;
  }

  detail::Poly to_poly(FieldElement a) const {
    detail::Poly c(e_);
    for (unsigned i = 0; i < e_; ++i) c[i] = a / place_[i] % p_;
    return c;
  }

  FieldElement from_poly(const detail::Poly& c) const {
    FieldElement a = 0;
    for (std::size_t i = 0; i < c.size(); ++i) a += c[i] * place_[i];
    return a;
  }

  /// Multiplication straight from the modulus; used only while building tables.
  FieldElement slow_mul(FieldElement a, FieldElement b) const {
    const auto x = to_poly(a), y = to_poly(b);
    detail::Poly prod(2 * e_ - 1, 0);
    for (unsigned i = 0; i < e_; ++i)
      for (unsigned j = 0; j < e_; ++j) prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{x[i]} * y[j]) % p_);
    return from_poly(detail::poly_mod(std::move(prod), modulus_, p_));
  }

  FieldElement slow_pow(FieldElement a, std::uint64_t k) const {
    FieldElement r = 1;
    while (k > 0) {
      if (k & 1U) r = slow_mul(r, a);
      a = slow_mul(a, a);
      k >>= 1U;
    }
    return r;
  }

  bool irreducible(const detail::Poly& f) const {
    // Trial division by every monic polynomial of degree 1..e/2.
    for (unsigned deg = 1; 2 * deg <= e_; ++deg) {
      const std::uint64_t count = ipow(p_, deg);
      for (std::uint64_t low = 0; low < count; ++low) {
        detail::Poly g(deg + 1);
        std::uint64_t v = low;
        for (unsigned i = 0; i < deg; ++i, v /= p_) g[i] = static_cast<std::uint32_t>(v % p_);
        g[deg] = 1;
        if (detail::poly_mod(f, g, p_).empty()) return false;
      }
    }
    return true;
  }

  void choose_modulus() {
    if (p_ == 2 && e_ == 3) {
      modulus_ = {1, 1, 0, 1};  // t^3 + t + 1
      if (!irreducible(modulus_)) throw std::logic_error("GF(8) modulus reducible");
      return;
    }
    for (std::uint64_t low = 0; low < order_; ++low) {
      detail::Poly f(e_ + 1);
      std::uint64_t v = low;
      for (unsigned i = 0; i < e_; ++i, v /= p_) f[i] = static_cast<std::uint32_t>(v % p_);
      f[e_] = 1;
      if (e_ == 1 || (f[0] != 0 && irreducible(f))) {
        modulus_ = std::move(f);
        return;
      }
    }
    throw std::logic_error("no irreducible polynomial found");
  }

  void build_tables() {
    const std::uint32_t m = order_ - 1;
    const auto primes = prime_factors(m);
    omega_ = 0;
    for (FieldElement g = 1; g < order_ && omega_ == 0; ++g) {
      bool primitive = true;
      for (auto r : primes)
        if (slow_pow(g, m / r) == 1) {
          primitive = false;
          break;
        }
      if (primitive) omega_ = g;
    }
    if (omega_ == 0) throw std::logic_error("no primitive element found");
    exp_.assign(2 * std::size_t{m}, 0);
    log_.assign(order_, 0);
    std::vector<bool> seen(order_, false);
    FieldElement x = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
      if (seen[x]) throw std::logic_error("omega is not primitive");
      seen[x] = true;
      exp_[i] = exp_[i + m] = x;
      log_[x] = i;
      x = slow_mul(x, omega_);
    }
    if (x != 1) throw std::logic_error("omega order mismatch");
    if (p_ != 2 && e_ > 1 && order_ <= kAddTableLimit) {
      add_table_.resize(std::size_t{order_} * order_);
      for (FieldElement a = 0; a < order_; ++a)
        for (FieldElement b = 0; b < order_; ++b) add_table_[std::size_t{a} * order_ + b] = add_digits(a, b);
    }
  }
};

inline FiniteField build_field(std::uint32_t p, unsigned e) { return FiniteField::build(p, e); }

}  // namespace mjg
