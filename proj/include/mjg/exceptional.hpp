#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mjg/combinatorics.hpp"
#include "mjg/permgroup.hpp"

namespace mjg {

/// One of the seven exceptional near-fields, described by its multiplicative group G0 <= GL_2(p).
struct ExceptionalSpec {
  std::uint32_t p = 0;
  int variant = 1;          // distinguishes the two near-fields of order 121
  std::string structure;    // 2T, 2O, 2I, 2Tx5, 2Ox11, 2Ix7, 2Ix29
  unsigned polyhedral = 0;  // 3, 4, 5 for 2T, 2O, 2I
  std::uint32_t scalar_order = 1;

  std::uint64_t g0_order() const { return std::uint64_t{p} * p - 1; }
};

inline const std::vector<ExceptionalSpec>& exceptional_specs() {
  static const std::vector<ExceptionalSpec> specs = {
      {5, 1, "2T", 3, 1},       {7, 1, "2O", 4, 1},      {11, 1, "2I", 5, 1},      {11, 2, "2Tx5", 3, 5},
      {23, 1, "2Ox11", 4, 11}, {29, 1, "2Ix7", 5, 7},  {59, 1, "2Ix29", 5, 29}};
  return specs;
}

inline const ExceptionalSpec& exceptional_spec(std::uint32_t p, int variant = 1) {
  for (const auto& s : exceptional_specs())
    if (s.p == p && s.variant == variant) return s;
  throw std::invalid_argument("no exceptional near-field for p = " + std::to_string(p) + " variant " +
                              std::to_string(variant));
}

/// 2x2 matrix over GF(p), row-major; acts on row vectors from the right.
struct Mat2 {
  std::array<std::uint32_t, 4> a{};
  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend auto operator<=>(const Mat2&, const Mat2&) = default;
};

inline Mat2 mat_mul(const Mat2& x, const Mat2& y, std::uint32_t p) {
  auto f = [p](std::uint64_t u, std::uint64_t v, std::uint64_t w, std::uint64_t z) {
    return static_cast<std::uint32_t>((u * v + w * z) % p);
  };
  return Mat2{{f(x.a[0], y.a[0], x.a[1], y.a[2]), f(x.a[0], y.a[1], x.a[1], y.a[3]),
               f(x.a[2], y.a[0], x.a[3], y.a[2]), f(x.a[2], y.a[1], x.a[3], y.a[3])}};
}

inline Mat2 mat_identity() { return Mat2{{1, 0, 0, 1}}; }

/// Multiplicative order of m, or 0 when it exceeds `cap`.
inline std::uint64_t mat_order(const Mat2& m, std::uint32_t p, std::uint64_t cap = 1'000'000) {
  Mat2 x = m;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (x == mat_identity()) return k;
    x = mat_mul(x, m, p);
  }
  return 0;
}

inline std::vector<Mat2> mat_closure(const std::vector<Mat2>& gens, std::uint32_t p, std::size_t cap) {
  std::set<Mat2> seen{mat_identity()};
  std::vector<Mat2> queue{mat_identity()};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const auto& g : gens) {
      const Mat2 x = mat_mul(queue[head], g, p);
      if (seen.insert(x).second) {
        queue.push_back(x);
        if (queue.size() > cap) return queue;
      }
    }
  return queue;
}

/// Histogram element order -> count.
inline std::map<std::uint64_t, std::uint64_t> order_statistics(const std::vector<Mat2>& elems, std::uint32_t p) {
  std::map<std::uint64_t, std::uint64_t> h;
  for (const auto& x : elems) ++h[mat_order(x, p)];
  return h;
}

/// Expected element-order statistics of 2T, 2O, 2I.
inline std::map<std::uint64_t, std::uint64_t> binary_polyhedral_statistics(unsigned m) {
  switch (m) {
    case 3: return {{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}};
    case 4: return {{1, 1}, {2, 1}, {3, 8}, {4, 18}, {6, 8}, {8, 12}};
    case 5: return {{1, 1}, {2, 1}, {3, 20}, {4, 30}, {5, 24}, {6, 20}, {10, 24}};
    default: throw std::invalid_argument("binary_polyhedral_statistics: m must be 3, 4 or 5");
  }
}

struct ExceptionalResult {
  ExceptionalSpec spec;
  std::vector<Mat2> g0_generators;  // s, t and optionally a scalar
  std::vector<Mat2> g0_elements;
  PermutationGroup group;           // degree p^2 on vectors x + p*y
};

namespace detail {

inline bool regular_on_nonzero(const std::vector<Mat2>& elems, std::uint32_t p) {
  // With |G0| = p^2 - 1 it suffices that no element except 1 fixes a nonzero vector.
  if (elems.size() != std::uint64_t{p} * p - 1) return false;
  for (const auto& g : elems) {
    if (g == mat_identity()) continue;
    // Fixed nonzero vector exists iff g - 1 is singular.
    const std::uint64_t a = (g.a[0] + p - 1) % p, d = (g.a[3] + p - 1) % p;
    if ((a * d + p * std::uint64_t{p} - std::uint64_t{g.a[1]} * g.a[2] % p) % p == 0) return false;
  }
  return true;
}

inline std::uint32_t scalar_of_order(std::uint32_t c, std::uint32_t p) {
  for (std::uint32_t x = 2; x < p; ++x) {
    std::uint64_t y = x;
    std::uint32_t k = 1;
    while (y != 1) {
      y = y * x % p;
      ++k;
    }
    if (k == c) return x;
  }
  throw std::logic_error("no scalar of requested order");
}

}  // namespace detail

/// Finds G0 = <s, t> x <scalar> with s of order 4, t of order 6 and st of order 2m,
/// so <s, t> is the binary polyhedral group of type (2,3,m), and builds the
/// sharply 2-transitive group of translations and G0 on GF(p)^2.
inline ExceptionalResult exceptional_group(const ExceptionalSpec& spec) {
  const std::uint32_t p = spec.p;
  const Mat2 s{{0, p - 1, 1, 0}};
  const std::size_t core_order = spec.g0_order() / spec.scalar_order;
  const auto expected = binary_polyhedral_statistics(spec.polyhedral);
  std::vector<Mat2> scalar_gens;
  if (spec.scalar_order > 1) {
    const std::uint32_t lam = detail::scalar_of_order(spec.scalar_order, p);
    scalar_gens.push_back(Mat2{{lam, 0, 0, lam}});
  }
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      for (std::uint32_t c = 0; c < p; ++c) {
        // Trace 1 and determinant 1: t = [[a, b], [c, 1 - a]] with a(1 - a) - bc = 1.
        const std::uint32_t d = (1 + p - a) % p;
        if ((std::uint64_t{a} * d + std::uint64_t{p} * p - std::uint64_t{b} * c) % p != 1) continue;
        const Mat2 t{{a, b, c, d}};
        if (mat_order(mat_mul(s, t, p), p, 2 * spec.polyhedral) != 2 * spec.polyhedral) continue;
        const auto core = mat_closure({s, t}, p, core_order);
        if (core.size() != core_order || order_statistics(core, p) != expected) continue;
        std::vector<Mat2> gens{s, t};
        gens.insert(gens.end(), scalar_gens.begin(), scalar_gens.end());
        auto g0 = mat_closure(gens, p, spec.g0_order());
        if (!detail::regular_on_nonzero(g0, p)) continue;
        const std::uint32_t n = p * p;
        std::vector<Permutation> perms;
        std::vector<Point> img(n);
        for (std::uint32_t shift : {1U, p}) {
          for (std::uint32_t v = 0; v < n; ++v) {
            const std::uint32_t x = v % p, y = v / p;
            img[v] = shift == 1 ? (x + 1) % p + p * y : x + p * ((y + 1) % p);
          }
          perms.push_back(Permutation::from_images(img));
        }
        for (const auto& g : gens) {
          for (std::uint32_t v = 0; v < n; ++v) {
            const std::uint64_t x = v % p, y = v / p;
            img[v] = static_cast<Point>((x * g.a[0] + y * g.a[2]) % p + p * ((x * g.a[1] + y * g.a[3]) % p));
          }
          perms.push_back(Permutation::from_images(img));
        }
        const std::uint64_t order = std::uint64_t{n} * (n - 1);
        auto G = PermutationGroup::from_generators(std::move(perms), order);
        if (G.order() != order) throw std::logic_error("exceptional_group: unexpected order");
        return ExceptionalResult{spec, std::move(gens), std::move(g0), std::move(G)};
      }
  throw std::logic_error("exceptional_group: search failed");
}

}  // namespace mjg
