#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mjg/catalog.hpp"
#include "mjg/combinatorics.hpp"
#include "mjg/complement.hpp"
#include "mjg/exceptional.hpp"
#include "mjg/johnson.hpp"
#include "mjg/near_field.hpp"
#include "mjg/permgroup.hpp"

namespace mjg {

inline constexpr int kMaxClassifyGround = 1 << 16;
inline constexpr int kMaxClassifyK = 30;

/// Bounds for the decision tables, which do not build the graph.
inline void check_classify_parameters(int n, int k, IndexSet I) {
  if (k < 2 || 2 * k > n || n > kMaxClassifyGround || k > kMaxClassifyK)
    throw std::invalid_argument("need 2 <= k <= n/2, n <= 65536 and k <= 30");
  if (I == 0 || (I & ~full_index_set(k)) != 0) throw std::invalid_argument("need nonempty I within {1..k}");
}

inline BigInt big_binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// |GO^-_{2m}(q)| = 2 q^{m(m-1)} (q^m + 1) prod_{i=1}^{m-1} (q^{2i} - 1).
inline BigInt go_minus_order(unsigned m, unsigned q) {
  BigInt r = 2 * big_pow(q, m * (m - 1)) * (big_pow(q, m) + 1);
  for (unsigned i = 1; i < m; ++i) r *= big_pow(q, 2 * i) - 1;
  return r;
}

inline IndexSet matching_index_set(int k) { return IndexSet{1} << k; }
inline IndexSet co_matching_index_set(int k) { return full_index_set(k - 1); }

struct AutDescriptor {
  int case_id = 0;  // 0 when I = {1..k}, else the clause 1..7
  std::string structure;
  std::optional<BigInt> order;  // absent when too large to expand
};

inline constexpr unsigned kMaxFactorialExpansion = 1000;

inline std::optional<BigInt> bounded_factorial(int n, BigInt factor = 1) {
  if (n > static_cast<int>(kMaxFactorialExpansion)) return std::nullopt;
  return factor * factorial(n);
}

inline AutDescriptor aut_descriptor(int n, int k, IndexSet I) {
  check_classify_parameters(n, k, I);
  const auto N = std::to_string(n);
  const BigInt verts = big_binomial(n, k);
  if (I == full_index_set(k)) {
    std::optional<BigInt> order;
    if (verts <= kMaxFactorialExpansion) order = factorial(static_cast<unsigned>(verts));
    return {0, "Sym(" + verts.str() + ")", order};
  }
  if (2 * k == n) {
    const BigInt e = verts / 2;
    const auto es = e.str();
    if (I == matching_index_set(k) || I == co_matching_index_set(k)) {
      std::optional<BigInt> order;
      if (e <= kMaxFactorialExpansion) {
        const auto ei = static_cast<unsigned>(e);
        order = big_pow(2, ei) * factorial(ei);
      }
      return {7, "S_2 wr S_" + es, order};
    }
    if (index_prime(I, k) == index_double_prime(I, k)) {
      std::optional<BigInt> order;
      if (e <= kMaxFactorialExpansion) order = bounded_factorial(n, big_pow(2, static_cast<unsigned>(e)));
      return {6, "S_2^" + es + " : S_" + N, order};
    }
    return {5, "S_2 x S_" + N, bounded_factorial(n, 2)};
  }
  if (n == 12 && k == 4 && (I == index_set({1, 3}) || I == index_set({2, 4})))
    return {2, "GO^-_10(2)", go_minus_order(5, 2)};
  if (2 * k == n - 1) {
    if (I == index_reflect(I, k)) return {4, "S_" + std::to_string(n + 1), bounded_factorial(n + 1)};
    return {3, "S_" + N, bounded_factorial(n)};
  }
  return {1, "S_" + N, bounded_factorial(n)};
}

/// A near-field of order n: Dickson (q, d) with d = 1 the field, or an exceptional one.
struct NearFieldSpec {
  bool exceptional = false;
  std::uint64_t q = 0;
  unsigned d = 1;
  std::uint32_t p = 0;
  int variant = 1;
  std::string name;
};

inline std::vector<NearFieldSpec> near_fields_of_order(std::uint64_t n) {
  std::vector<NearFieldSpec> out;
  const auto pp = prime_power(n);
  if (!pp) return out;
  for (unsigned d = 1; d <= pp->e; ++d) {
    if (pp->e % d != 0) continue;
    const std::uint64_t q = ipow(pp->p, pp->e / d);
    if (!is_dickson_pair(q, d)) continue;
    out.push_back({false, q, d, 0, 1,
                   d == 1 ? "GF(" + std::to_string(n) + ")"
                          : "Dickson(" + std::to_string(q) + "," + std::to_string(d) + ")"});
  }
  if (pp->e == 2)
    for (const auto& s : exceptional_specs())
      if (s.p == pp->p) out.push_back({true, 0, 1, s.p, s.variant, "exceptional(" + std::to_string(s.p) + "," + s.structure + ")"});
  return out;
}

enum class WitnessKind {
  ahl_near_field,
  agl_near_field,
  exceptional_agl,
  agl_8,
  agammal_32,
  cyclic,
  cyclic_matching,
  agl5_times_s2,
  psl28_complement,
  dihedral,
  dihedral_matching
};

/// How to build a witness group for one regular (r = 1) or 2-regular (r = 2) clause.
struct WitnessRecipe {
  int theorem = 1;
  int case_id = 0;
  WitnessKind kind = WitnessKind::cyclic;
  std::string name;
  NearFieldSpec near_field;
  int delta = 0;

  int r() const { return theorem; }
};

struct CayleyVerdict {
  bool yes = false;
  std::vector<int> cases;
  std::string reason;          // NO reason tag
  bool disconnected = false;   // case 5 with I = {k}: regular group exists, graph is not a Cayley graph
  bool trusted = false;        // NO rests on facts not re-verified here
  std::vector<WitnessRecipe> witnesses;
};

struct TwoRegularVerdict {
  bool yes = false;
  std::vector<int> cases;
  std::string reason;
  bool trusted = false;
  std::vector<WitnessRecipe> witnesses;
};

struct DeficiencyResult {
  bool exact = false;
  BigInt value = 0;          // when exact
  BigInt lower = 0, upper = 0;  // when not exact
  std::string basis;
};

namespace detail {

inline std::string no_reason(int aut_case, bool cayley) {
  switch (aut_case) {
    case 1:
    case 3: return cayley ? "aut-is-Sn-no-sharp-group" : "aut-is-Sn-no-2-regular-group";
    case 2: return cayley ? "GO10-no-regular-subgroup" : "GO10-no-2-regular-subgroup";
    case 4: return "n-odd-half-lemma";
    case 5:
    case 6: return "n2k-lemma";
    default: throw std::logic_error("no_reason: case has a YES verdict");
  }
}

inline bool matching_like(int n, int k, IndexSet I) {
  return 2 * k == n && (I == matching_index_set(k) || I == co_matching_index_set(k));
}

}  // namespace detail

inline CayleyVerdict classify_cayley(int n, int k, IndexSet I) {
  check_classify_parameters(n, k, I);
  CayleyVerdict v;
  const std::string N = big_binomial(n, k).str();
  if (k == 2 && n % 4 == 3 && prime_power(n)) {
    v.cases.push_back(1);
    for (const auto& F : near_fields_of_order(n))
      if (!F.exceptional) v.witnesses.push_back({1, 1, WitnessKind::ahl_near_field, "AHL_1(" + F.name + ")", F, 0});
  }
  if (n == 8 && k == 3) {
    v.cases.push_back(2);
    v.witnesses.push_back({1, 2, WitnessKind::agl_8, "AGL_1(8)", {}, 0});
  }
  if (n == 32 && k == 3) {
    v.cases.push_back(3);
    v.witnesses.push_back({1, 3, WitnessKind::agammal_32, "AGammaL_1(32)", {}, 0});
  }
  if (I == full_index_set(k)) {
    v.cases.push_back(4);
    v.witnesses.push_back({1, 4, WitnessKind::cyclic, "C_" + N, {}, 0});
  }
  if (detail::matching_like(n, k, I)) {
    v.cases.push_back(5);
    v.disconnected = I == matching_index_set(k);
    v.witnesses.push_back({1, 5, WitnessKind::cyclic_matching, "C_" + N, {}, 0});
  }
  v.yes = !v.cases.empty();
  if (!v.yes) {
    const int c = aut_descriptor(n, k, I).case_id;
    v.reason = detail::no_reason(c, true);
    v.trusted = c == 2;
  }
  return v;
}

inline bool is_psl28_index_set(IndexSet I) {
  return I == index_set({1, 4}) || I == index_set({2, 3}) || I == index_set({1, 4, 5}) || I == index_set({2, 3, 5});
}

inline TwoRegularVerdict classify_two_regular(int n, int k, IndexSet I) {
  check_classify_parameters(n, k, I);
  TwoRegularVerdict v;
  const std::string N2 = (2 * big_binomial(n, k)).str();
  if (k == 2 && prime_power(n)) {
    v.cases.push_back(1);
    for (const auto& F : near_fields_of_order(n))
      v.witnesses.push_back(
          {2, 1, F.exceptional ? WitnessKind::exceptional_agl : WitnessKind::agl_near_field, "AGL_1(" + F.name + ")", F, 0});
  }
  if (n == 6 && k == 3) {
    v.cases.push_back(2);
    v.witnesses.push_back({2, 2, WitnessKind::agl5_times_s2, "AGL_1(5) x S_2", {}, 0});
  }
  if (n == 10 && k == 5 && is_psl28_index_set(I)) {
    v.cases.push_back(3);
    for (int delta = 1; delta <= 3; ++delta)
      v.witnesses.push_back(
          {2, 3, WitnessKind::psl28_complement, "PSL_2(8) complement (delta " + std::to_string(delta) + ")", {}, delta});
  }
  if (detail::matching_like(n, k, I)) {
    v.cases.push_back(4);
    v.witnesses.push_back({2, 4, WitnessKind::dihedral_matching, "D_" + N2, {}, 0});
  }
  if (I == full_index_set(k)) {
    v.cases.push_back(5);
    v.witnesses.push_back({2, 5, WitnessKind::dihedral, "D_" + N2, {}, 0});
  }
  v.yes = !v.cases.empty();
  if (!v.yes) {
    const int c = aut_descriptor(n, k, I).case_id;
    v.reason = detail::no_reason(c, false);
    v.trusted = c == 2;
  }
  return v;
}

/// True when A_n and S_n are the only vertex-transitive automorphism groups.
inline bool only_an_sn(int n, int k, IndexSet I) {
  check_classify_parameters(n, k, I);
  if (I == full_index_set(k)) return false;
  const bool below = 2 * k < n - 1;
  if (k > 5 && below) return true;
  if (k > 5 && 2 * k == n - 1 && I != index_reflect(I, k)) return true;
  if (k == 5 && below && n != 12 && n != 24) return true;
  if (k == 4 && below) {
    for (int bad : {9, 11, 12, 23, 24, 33})
      if (n == bad) return false;
    return true;
  }
  return false;
}

/// k!(n-k)!/2, the stabilizer order of a k-subset in A_n.
inline BigInt alternating_stabilizer(int n, int k) { return factorial(k) * factorial(n - k) / 2; }

inline DeficiencyResult cayley_deficiency(int n, int k, IndexSet I) {
  check_classify_parameters(n, k, I);
  DeficiencyResult d;
  auto exact = [&](BigInt value, std::string basis) {
    d.exact = true;
    d.value = std::move(value);
    d.basis = std::move(basis);
    return d;
  };
  if (classify_cayley(n, k, I).yes) return exact(1, "regular group");
  if (classify_two_regular(n, k, I).yes) return exact(2, "2-regular group");
  if (only_an_sn(n, k, I)) return exact(alternating_stabilizer(n, k), "only A_n and S_n");
  BigInt upper = alternating_stabilizer(n, k);
  if (const auto c = catalog_min_stabilizer(n, k); c != 0 && BigInt(c) < upper) upper = c;
  const int aut_case = aut_descriptor(n, k, I).case_id;
  if (upper < 3) throw std::logic_error("cayley_deficiency: catalog bound below 3 without a YES verdict");
  // With Aut J = S_n every vertex-transitive group is k-homogeneous; the list is complete
  // for k >= 4, and for k = 2, 3 when n is not a degree of a proper k-homogeneous group.
  if ((aut_case == 1 || aut_case == 3) && (k >= 4 || !in_homogeneous_degrees(n, k)))
    return exact(upper, "minimum over k-homogeneous groups");
  if (upper == 3) return exact(3, "lower bound 3 attained by catalog group");
  d.lower = 3;
  d.upper = upper;
  d.basis = "not determined; upper bound from k-homogeneous subgroups of S_n";
  return d;
}

struct Verdict {
  int n = 0, k = 0;
  IndexSet I = 0;
  AutDescriptor aut;
  CayleyVerdict cayley;
  TwoRegularVerdict two_regular;
  DeficiencyResult deficiency;
  bool only_an_sn = false;
  bool connected = true;
  BigInt vertices = 0;
};

inline bool is_connected_formula(int n, int k, IndexSet I) { return !(2 * k == n && I == matching_index_set(k)); }

inline Verdict classify(int n, int k, IndexSet I) {
  Verdict v;
  v.n = n;
  v.k = k;
  v.I = I;
  v.aut = aut_descriptor(n, k, I);
  v.cayley = classify_cayley(n, k, I);
  v.two_regular = classify_two_regular(n, k, I);
  v.deficiency = cayley_deficiency(n, k, I);
  v.only_an_sn = only_an_sn(n, k, I);
  v.connected = is_connected_formula(n, k, I);
  v.vertices = big_binomial(n, k);
  return v;
}

// Witness construction.

inline constexpr std::uint64_t kMaxWitnessVertices = std::uint64_t{1} << 22;

struct WitnessGroup {
  WitnessRecipe recipe;
  PermutationGroup group;  // acting on vertex ranks (co-lex order)
};

namespace detail {

/// Labels 0..N-1 for the k-subsets of 2k points so that complements differ by N/2.
inline std::vector<std::uint32_t> matching_labels(int n, int k) {
  const auto verts = all_ksubsets(n, k);
  const auto half = static_cast<std::uint32_t>(verts.size() / 2);
  std::vector<std::uint32_t> label(verts.size());
  std::uint32_t next = 0;
  for (std::size_t v = 0; v < verts.size(); ++v) {
    if ((verts[v] & 1U) == 0) continue;
    label[v] = next;
    label[colex_rank(~verts[v] & low_mask(n))] = next + half;
    ++next;
  }
  return label;
}

/// Transfers a permutation of labels to one of vertices.
inline Permutation relabel(const std::vector<std::uint32_t>& label, const std::vector<std::uint32_t>& label_map) {
  std::vector<Point> vertex_of(label.size());
  for (std::size_t v = 0; v < label.size(); ++v) vertex_of[label[v]] = static_cast<Point>(v);
  std::vector<Point> img(label.size());
  for (std::size_t v = 0; v < label.size(); ++v) img[v] = vertex_of[label_map[label[v]]];
  return Permutation::from_images(std::move(img));
}

inline PermutationGroup on_vertices(const PermutationGroup& G, int n, int k) {
  return induced_action(G, ActionDomain::ksubsets(n, k));
}

inline PermutationGroup near_field_witness(const NearFieldSpec& F, AffineKind kind, int n) {
  if (F.exceptional) return on_vertices(exceptional_group(exceptional_spec(F.p, F.variant)).group, n, 2);
  return on_vertices(affine_group(build_dickson(F.q, F.d), kind), n, 2);
}

}  // namespace detail

inline WitnessGroup build_witness(const WitnessRecipe& recipe, int n, int k) {
  const BigInt verts_big = big_binomial(n, k);
  if (verts_big > kMaxWitnessVertices) throw std::invalid_argument("build_witness: too many vertices");
  const auto N = static_cast<std::uint32_t>(verts_big);
  auto cyclic_maps = [&](bool dihedral) {
    std::vector<std::vector<std::uint32_t>> maps(1, std::vector<std::uint32_t>(N));
    for (std::uint32_t x = 0; x < N; ++x) maps[0][x] = (x + 1) % N;
    if (dihedral) {
      maps.emplace_back(N);
      for (std::uint32_t x = 0; x < N; ++x) maps[1][x] = (N - x) % N;
    }
    return maps;
  };
  auto labelled = [&](bool dihedral, bool matching, std::uint64_t order) {
    std::vector<std::uint32_t> label(N);
    if (matching) {
      label = detail::matching_labels(n, k);
    } else {
      for (std::uint32_t v = 0; v < N; ++v) label[v] = v;
    }
    std::vector<Permutation> gens;
    for (const auto& m : cyclic_maps(dihedral)) gens.push_back(detail::relabel(label, m));
    return PermutationGroup::from_generators(std::move(gens), order);
  };
  switch (recipe.kind) {
    case WitnessKind::ahl_near_field:
      return {recipe, detail::near_field_witness(recipe.near_field, AffineKind::AHL, n)};
    case WitnessKind::agl_near_field:
    case WitnessKind::exceptional_agl:
      return {recipe, detail::near_field_witness(recipe.near_field, AffineKind::AGL, n)};
    case WitnessKind::agl_8:
      return {recipe, detail::on_vertices(affine_group(field_as_near_field(8), AffineKind::AGL), 8, 3)};
    case WitnessKind::agammal_32:
      return {recipe, detail::on_vertices(affine_group(field_as_near_field(32), AffineKind::AGammaL), 32, 3)};
    case WitnessKind::cyclic: return {recipe, labelled(false, false, N)};
    case WitnessKind::cyclic_matching: return {recipe, labelled(false, true, N)};
    case WitnessKind::dihedral: return {recipe, labelled(true, false, 2ULL * N)};
    case WitnessKind::dihedral_matching: return {recipe, labelled(true, true, 2ULL * N)};
    case WitnessKind::agl5_times_s2: {
      // AGL_1(5) on 0..4 fixing infinity = point 5, with complementation of 3-subsets.
      const auto shift = Permutation::from_images({1, 2, 3, 4, 0, 5});
      const auto scale = Permutation::from_images({0, 2, 4, 1, 3, 5});
      auto H = detail::on_vertices(PermutationGroup::from_generators({shift, scale}), 6, 3);
      auto gens = H.generators();
      gens.push_back(complementation(build_graph(6, 3, full_index_set(3))));
      return {recipe, PermutationGroup::from_generators(std::move(gens), 40)};
    }
    case WitnessKind::psl28_complement: {
      static const CocycleData data = equipartition_setup(build_pointed_psl28());
      return {recipe, complement_group(data, recipe.delta).vertex_group};
    }
  }
  throw std::logic_error("build_witness: unknown kind");
}

}  // namespace mjg
