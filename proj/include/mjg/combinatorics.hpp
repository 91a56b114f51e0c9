#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mjg {

using BigInt = boost::multiprecision::cpp_int;

/// Subsets of a ground set of at most 64 points, bit i = point i (0-based).
using Mask = std::uint64_t;

inline constexpr int kMaxGround = 64;

namespace detail {

inline const std::array<std::array<std::uint64_t, kMaxGround + 1>, kMaxGround + 1>& binomial_table() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, kMaxGround + 1>, kMaxGround + 1> t{};
    for (int n = 0; n <= kMaxGround; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

}  // namespace detail

/// C(n, k) for 0 <= n <= 64; zero when k < 0 or k > n.
inline std::uint64_t binomial(int n, int k) {
  if (n < 0 || n > kMaxGround) throw std::out_of_range("binomial: n outside [0, 64]");
  if (k < 0 || k > n) return 0;
  return detail::binomial_table()[n][k];
}

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt big_pow(unsigned base, unsigned exp) {
  BigInt r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("64-bit overflow");
  return r;
}

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  unsigned __int128 r = 1, b = base % mod;
  while (exp > 0) {
    if (exp & 1U) r = r * b % mod;
    b = b * b % mod;
    exp >>= 1U;
  }
  return static_cast<std::uint64_t>(r);
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct PrimePower {
  std::uint64_t p = 0;
  unsigned e = 0;
};

/// Returns (p, e) with n = p^e, or nothing when n is not a prime power.
inline std::optional<PrimePower> prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return PrimePower{n, 1};
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1) return std::nullopt;
  return PrimePower{p, e};
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask low_mask(int n) { return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1); }

/// Co-lexicographic rank of a k-subset: sum over its sorted elements c_0 < c_1 < ...
/// of C(c_j, j + 1). Rank 0 is {0, ..., k-1}.
inline std::uint64_t colex_rank(Mask m) {
  std::uint64_t r = 0;
  int j = 0;
  while (m != 0) {
    const int c = std::countr_zero(m);
    r += binomial(c, j + 1);
    ++j;
    m &= m - 1;
  }
  return r;
}

inline Mask colex_unrank(std::uint64_t rank, int k) {
  Mask m = 0;
  for (int j = k; j >= 1; --j) {
    int c = j - 1;
    while (binomial(c + 1, j) <= rank) ++c;
    rank -= binomial(c, j);
    m |= Mask{1} << c;
  }
  return m;
}

/// All k-subsets of {0..n-1} in increasing co-lex rank.
inline std::vector<Mask> all_ksubsets(int n, int k) {
  if (n < 0 || n > kMaxGround || k < 0 || k > n)
    throw std::invalid_argument("all_ksubsets: need 0 <= k <= n <= 64");
  std::vector<Mask> out;
  out.reserve(binomial(n, k));
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  Mask m = low_mask(k);
  const Mask limit = n == 64 ? 0 : (Mask{1} << n);
  while (true) {
    out.push_back(m);
    // Gosper's hack: next mask with the same popcount in numeric (= co-lex) order.
    const Mask c = m & (~m + 1);
    const Mask r = m + c;
    if (r == 0) break;
    m = (((r ^ m) >> 2) / c) | r;
    if (limit != 0 && m >= limit) break;
  }
  return out;
}

inline std::string mask_to_string(Mask m) {
  std::string s = "{";
  bool first = true;
  while (m != 0) {
    if (!first) s += ",";
    s += std::to_string(std::countr_zero(m) + 1);
    first = false;
    m &= m - 1;
  }
  return s + "}";
}

}  // namespace mjg
