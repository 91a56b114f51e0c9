#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "mjg/combinatorics.hpp"
#include "mjg/finite_field.hpp"
#include "mjg/near_field.hpp"
#include "mjg/permgroup.hpp"

namespace mjg {

/// A multiply homogeneous group other than A_n and S_n, with the largest k for
/// which it is k-homogeneous (resp. k-transitive), counted only up to k <= n/2.
struct HomogRecord {
  std::string name;
  int degree = 0;
  std::uint64_t order = 0;
  int homogeneity = 0;
  int transitivity = 0;
  std::function<PermutationGroup()> build;  // empty when only listed as data

  bool constructible() const { return static_cast<bool>(build); }
  bool k_transitive(int k) const { return transitivity >= k; }
};

/// An infinite family of the catalog, described by its degrees.
struct FamilyDescriptor {
  std::string name;
  std::string degrees;
  int homogeneity = 0;
};

inline constexpr int kCatalogMaxDegree = 64;

namespace detail {

inline Permutation perm_from_cycles_1based(std::size_t n, const std::vector<std::vector<Point>>& cycles) {
  std::vector<std::vector<Point>> zero;
  for (const auto& c : cycles) {
    zero.emplace_back();
    for (Point x : c) zero.back().push_back(x - 1);
  }
  return Permutation::from_cycles(n, zero);
}

inline std::vector<Point> long_cycle(Point n) {
  std::vector<Point> c(n);
  for (Point i = 0; i < n; ++i) c[i] = i + 1;
  return c;
}

inline PermutationGroup checked_group(std::vector<Permutation> gens, std::uint64_t order, const std::string& name) {
  auto G = PermutationGroup::from_generators(std::move(gens), order);
  if (G.order() != order) throw std::logic_error("catalog: " + name + " has the wrong order");
  return G;
}

inline PermutationGroup mathieu(int n) {
  switch (n) {
    case 11:
    case 12: {
      const auto a11 = perm_from_cycles_1based(n, {long_cycle(11)});
      const auto b11 = perm_from_cycles_1based(n, {{3, 7, 11, 8}, {4, 10, 5, 6}});
      if (n == 11) return checked_group({a11, b11}, 7920, "M11");
      return checked_group(
          {a11, b11, perm_from_cycles_1based(12, {{1, 12}, {2, 11}, {3, 6}, {4, 8}, {5, 9}, {7, 10}})}, 95040, "M12");
    }
    case 23:
    case 24: {
      const auto a23 = perm_from_cycles_1based(n, {long_cycle(23)});
      const auto b23 = perm_from_cycles_1based(
          n, {{3, 17, 10, 7, 9}, {4, 13, 14, 19, 5}, {8, 18, 11, 12, 23}, {15, 20, 22, 21, 16}});
      if (n == 23) return checked_group({a23, b23}, 10200960, "M23");
      const auto c24 = perm_from_cycles_1based(24, {{1, 24}, {2, 23}, {3, 12}, {4, 16}, {5, 18}, {6, 10},
                                                    {7, 20}, {8, 14}, {9, 21}, {11, 17}, {13, 22}, {15, 19}});
      return checked_group({a23, b23, c24}, 244823040, "M24");
    }
    default: throw std::invalid_argument("mathieu: degree must be 11, 12, 23 or 24");
  }
}

enum class ProjectiveKind { PSL, PGL, PGammaL };

/// |PSL_2(q)|, |PGL_2(q)|, |PGammaL_2(q)|.
inline std::uint64_t projective_line_order(std::uint64_t q, ProjectiveKind kind) {
  const auto pp = prime_power(q).value();
  std::uint64_t order = q * (q * q - 1);
  if (kind == ProjectiveKind::PSL && q % 2 == 1) order /= 2;
  if (kind == ProjectiveKind::PGammaL) order *= pp.e;
  return order;
}

/// PSL_2(q) <= G <= PGammaL_2(q) on P^1(F_q): codes 0..q-1 and infinity = q.
inline PermutationGroup projective_line_group(std::uint64_t q, ProjectiveKind kind) {
  const auto pp = prime_power(q).value();
  const auto F = build_field(static_cast<std::uint32_t>(pp.p), pp.e);
  const auto inf = static_cast<Point>(q);
  auto mobius = [&](auto&& f) {
    std::vector<Point> img(q + 1);
    for (Point z = 0; z <= inf; ++z) img[z] = f(z);
    return Permutation::from_images(std::move(img));
  };
  const FieldElement w = kind == ProjectiveKind::PSL ? F.mul(F.omega(), F.omega()) : F.omega();
  std::vector<Permutation> gens{
      mobius([&](Point z) { return z == inf ? inf : F.add(z, 1); }),
      mobius([&](Point z) { return z == inf ? inf : F.mul(z, w); }),
      mobius([&](Point z) -> Point { return z == inf ? 0 : (z == 0 ? inf : F.neg(F.inv(z))); })};
  if (kind == ProjectiveKind::PGammaL && pp.e > 1)
    gens.push_back(mobius([&](Point z) { return z == inf ? inf : F.pow(z, pp.p); }));
  return checked_group(std::move(gens), projective_line_order(q, kind), "projective line group");
}

inline std::uint64_t gl_order(unsigned d, std::uint64_t q) {
  std::uint64_t order = 1, qd = ipow(q, d);
  for (unsigned i = 0; i < d; ++i) order = checked_mul(order, qd - ipow(q, i));
  return order;
}

inline std::uint64_t psl_order(unsigned d, std::uint64_t q) {
  std::uint64_t g = std::gcd(std::uint64_t{d}, q - 1);
  return gl_order(d, q) / (q - 1) / g;
}

/// AGL_d(2) on the 2^d vectors of GF(2)^d (bit i = coordinate i).
inline PermutationGroup affine_binary_group(unsigned d) {
  const Point n = Point{1} << d;
  std::vector<Permutation> gens;
  std::vector<Point> img(n);
  for (unsigned i = 0; i < d; ++i) {
    for (Point x = 0; x < n; ++x) img[x] = x ^ (Point{1} << i);
    gens.push_back(Permutation::from_images(img));
    for (unsigned j = 0; j < d; ++j) {
      if (i == j) continue;
      for (Point x = 0; x < n; ++x) img[x] = ((x >> j) & 1U) != 0 ? x ^ (Point{1} << i) : x;
      gens.push_back(Permutation::from_images(img));
    }
  }
  return checked_group(std::move(gens), checked_mul(n, gl_order(d, 2)), "AGL_d(2)");
}

inline std::vector<HomogRecord> build_catalog() {
  std::vector<HomogRecord> out;
  auto add = [&](std::string name, int degree, std::uint64_t order, int homog, int trans,
                 std::function<PermutationGroup()> build = {}) {
    out.push_back(HomogRecord{std::move(name), degree, order, std::min(homog, degree / 2),
                              std::min(trans, degree / 2), std::move(build)});
  };
  // Sporadic examples.
  add("M11", 11, 7920, 4, 4, [] { return mathieu(11); });
  add("M11 (degree 12)", 12, 7920, 3, 3);
  add("M12", 12, 95040, 5, 5, [] { return mathieu(12); });
  add("M22", 22, 443520, 3, 3);
  add("Aut M22", 22, 887040, 3, 3);
  add("M23", 23, 10200960, 4, 4, [] { return mathieu(23); });
  add("M24", 24, 244823040, 5, 5, [] { return mathieu(24); });
  add("PSL_2(11) (degree 11)", 11, 660, 2, 2);
  add("A_7 (degree 15)", 15, 2520, 2, 2);
  add("PGammaL_2(8) (degree 28)", 28, 1512, 2, 2);
  add("PSU_3(2)", 9, 72, 2, 2);
  add("PSU_3(3)", 28, 6048, 2, 2);
  add("Sp_6(2) (degree 28)", 28, 1451520, 2, 2);
  add("Sp_6(2) (degree 36)", 36, 1451520, 2, 2);
  // Projective lines and affine lines over GF(q).
  for (std::uint64_t q = 3; q < kCatalogMaxDegree; ++q) {
    const auto pp = prime_power(q);
    if (!pp) continue;
    const int deg = static_cast<int>(q) + 1;
    const std::string qs = std::to_string(q);
    const bool even = q % 2 == 0;
    const int psl_homog = (q == 8) ? 4 : ((even || q % 4 == 3) ? 3 : 2);
    add("PSL_2(" + qs + ")", deg, projective_line_order(q, ProjectiveKind::PSL), psl_homog, even ? 3 : 2,
        [q] { return projective_line_group(q, ProjectiveKind::PSL); });
    if (!even)
      add("PGL_2(" + qs + ")", deg, projective_line_order(q, ProjectiveKind::PGL), 3, 3,
          [q] { return projective_line_group(q, ProjectiveKind::PGL); });
    if (pp->e > 1)
      add("PGammaL_2(" + qs + ")", deg, projective_line_order(q, ProjectiveKind::PGammaL), (q == 8 || q == 32) ? 4 : 3,
          3, [q] { return projective_line_group(q, ProjectiveKind::PGammaL); });
  }
  for (std::uint64_t q = 3; q <= kCatalogMaxDegree; ++q) {
    const auto pp = prime_power(q);
    if (!pp) continue;
    const int deg = static_cast<int>(q);
    const std::string qs = std::to_string(q);
    const int special = (q == 8 || q == 32) ? 3 : 2;
    add("AGL_1(" + qs + ")", deg, q * (q - 1), q == 8 ? 3 : 2, 2,
        [q] { return affine_group(field_as_near_field(q), AffineKind::AGL); });
    if (q % 4 == 3)
      add("AHL_1(" + qs + ")", deg, q * (q - 1) / 2, 2, 1,
          [q] { return affine_group(field_as_near_field(q), AffineKind::AHL); });
    if (pp->e > 1)
      add("AGammaL_1(" + qs + ")", deg, q * (q - 1) * pp->e, special, q == 4 ? 3 : 2,
          [q] { return affine_group(field_as_near_field(q), AffineKind::AGammaL); });
  }
  for (unsigned d = 3; (1U << d) <= kCatalogMaxDegree; ++d)
    add("AGL_" + std::to_string(d) + "(2)", 1 << d, checked_mul(std::uint64_t{1} << d, gl_order(d, 2)), 3, 3,
        [d] { return affine_binary_group(d); });
  // Projective spaces of dimension >= 2.
  for (unsigned d = 3; d <= 6; ++d)
    for (std::uint64_t q = 2; q <= 8; ++q) {
      if (!prime_power(q)) continue;
      const std::uint64_t deg = (ipow(q, d) - 1) / (q - 1);
      if (deg > kCatalogMaxDegree) continue;
      add("PSL_" + std::to_string(d) + "(" + std::to_string(q) + ")", static_cast<int>(deg), psl_order(d, q), 2, 2);
    }
  return out;
}

}  // namespace detail

/// All catalog groups of degree <= 64.
inline const std::vector<HomogRecord>& catalog_records() {
  static const std::vector<HomogRecord> records = detail::build_catalog();
  return records;
}

/// The k-homogeneous groups other than A_n, S_n, expanded for degree <= 64.
inline std::vector<HomogRecord> homogeneous_catalog(int k) {
  if (k < 2) throw std::invalid_argument("homogeneous_catalog: k must be at least 2");
  std::vector<HomogRecord> out;
  for (const auto& r : catalog_records())
    if (r.homogeneity >= k) out.push_back(r);
  return out;
}

/// Infinite families contributing k-homogeneous groups beyond degree 64.
inline std::vector<FamilyDescriptor> homogeneous_families(int k) {
  std::vector<FamilyDescriptor> out;
  if (k <= 2) {
    out.push_back({"affine subgroups of AGammaL_d(q)", "q^d", 2});
    out.push_back({"PSL_d(q) <= G <= PGammaL_d(q)", "(q^d-1)/(q-1), d >= 2", 2});
    out.push_back({"PSU_3(q) <= G <= PGammaU_3(q)", "q^3+1", 2});
    out.push_back({"Sp_2d(2)", "2^(d-1)(2^d+1) and 2^(d-1)(2^d-1), d >= 3", 2});
    out.push_back({"Sz(q) <= G <= Aut Sz(q)", "q^2+1, q = 2^e, e odd >= 3", 2});
    out.push_back({"Re(q) <= G <= Aut Re(q)", "q^3+1, q = 3^e, e odd >= 3", 2});
  }
  if (k <= 3) {
    out.push_back({"subgroups of AGammaL_d(2)", "2^d, d >= 3", 3});
    out.push_back({"PSL_2(q) <= G <= PGammaL_2(q)", "q+1", 3});
  }
  return out;
}

/// Membership of n in the degree set D_k of proper k-homogeneous groups (any degree, not only <= 64).
inline bool in_homogeneous_degrees(std::uint64_t n, int k) {
  if (k >= 6) return false;
  if (k == 5) return n == 12 || n == 24;
  if (k == 4) return n == 9 || n == 11 || n == 12 || n == 23 || n == 24 || n == 33;
  if (k == 3) {
    if (n >= 8 && std::has_single_bit(n)) return true;
    if (n >= 3 && prime_power(n - 1)) return true;
    return n == 11 || n == 22 || n == 23;
  }
  if (k != 2) throw std::invalid_argument("in_homogeneous_degrees: k must be at least 2");
  if (prime_power(n)) return true;
  if (n >= 3 && prime_power(n - 1)) return true;
  for (std::uint64_t q = 2; q * q < n * 2; ++q) {
    if (!prime_power(q)) continue;
    for (std::uint64_t deg = 1 + q + q * q; deg <= n; deg = deg * q + 1)
      if (deg == n) return true;
    if (q * q * q + 1 == n) return true;
  }
  for (unsigned d = 3; d < 32; ++d) {
    const std::uint64_t a = std::uint64_t{1} << (d - 1), b = std::uint64_t{1} << d;
    if (a * (b + 1) == n || a * (b - 1) == n) return true;
    if (a * (b - 1) > n) break;
  }
  for (unsigned e = 3; e < 32; e += 2)
    if ((std::uint64_t{1} << (2 * e)) + 1 == n) return true;
  for (std::uint64_t s : {11, 12, 15, 22, 23, 24, 28, 176, 276})
    if (s == n) return true;
  return false;
}

/// Smallest k-subset stabilizer order among catalog groups of degree n, or 0 if none.
inline std::uint64_t catalog_min_stabilizer(int n, int k) {
  std::uint64_t best = 0;
  if (n > kCatalogMaxDegree) return 0;
  const std::uint64_t verts = binomial(n, k);
  for (const auto& r : catalog_records()) {
    if (r.degree != n || r.homogeneity < k) continue;
    if (r.order % verts != 0) throw std::logic_error("catalog: k-homogeneous order not divisible by C(n,k)");
    const auto s = r.order / verts;
    if (best == 0 || s < best) best = s;
  }
  return best;
}

}  // namespace mjg
