#pragma once

#include <algorithm>
#include <array>
#include <bitset>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "mjg/finite_field.hpp"
#include "mjg/johnson.hpp"
#include "mjg/permgroup.hpp"

namespace mjg {

inline constexpr int kComplementPoints = 10;
inline constexpr std::size_t kEquipartitions = 126;

/// F_2-valued functions on the 126 equipartitions of 10 points, indexed in key order.
using MVector = std::bitset<kEquipartitions>;

/// PSL_2(8) on P^1(F_8) plus a fixed point: field codes 0..7 are points 0..7,
/// infinity is point 8 and the fixed point p is point 9.
struct PointedPSL28 {
  static constexpr Point kInfinity = 8;
  static constexpr Point kFixed = 9;

  PermutationGroup group;
  std::vector<Permutation> elements;  // enumeration order of the chain
};

inline PointedPSL28 build_pointed_psl28() {
  const auto F = build_field(2, 3);
  const Point inf = PointedPSL28::kInfinity;
  auto make = [&](auto&& f) {
    std::vector<Point> img(kComplementPoints);
    for (Point z = 0; z < 8; ++z) img[z] = f(z);
    img[inf] = f(inf);
    img[PointedPSL28::kFixed] = PointedPSL28::kFixed;
    return Permutation::from_images(img);
  };
  const auto shift = make([&](Point z) { return z == inf ? inf : F.add(z, 1); });
  const auto scale = make([&](Point z) { return z == inf ? inf : F.mul(z, F.omega()); });
  const auto invert = make([&](Point z) -> Point { return z == inf ? 0 : (z == 0 ? inf : F.inv(z)); });
  auto G = PermutationGroup::from_generators({shift, scale, invert}, 504);
  if (G.order() != 504) throw std::logic_error("build_pointed_psl28: order is not 504");
  PointedPSL28 S{G, G.elements()};
  return S;
}

/// The field automorphism a -> a^2 on P^1(F_8), fixing infinity and p.
inline Permutation psl28_frobenius() {
  const auto F = build_field(2, 3);
  std::vector<Point> img(kComplementPoints);
  for (Point z = 0; z < 8; ++z) img[z] = F.mul(z, z);
  img[PointedPSL28::kInfinity] = PointedPSL28::kInfinity;
  img[PointedPSL28::kFixed] = PointedPSL28::kFixed;
  return Permutation::from_images(img);
}

/// Element (m, s) of M x| S with (m1,s1)(m2,s2) = (m1^s2 + m2, s1 s2), (m^s)(phi) = m(phi s^-1).
struct ExtElement {
  MVector m;
  std::uint32_t s = 0;  // index into the element list of S
  friend bool operator==(const ExtElement&, const ExtElement&) = default;
};

/// Equipartitions, the stabilizer V of phi_0, a transversal, and the four
/// homomorphisms delta: V -> F_2 (label 0 is zero; label j > 0 has kernel {1, v_j}).
class CocycleData {
 public:
  explicit CocycleData(PointedPSL28 S) : S_(std::move(S)) {
    const auto& els = S_.elements;
    for (std::uint32_t i = 0; i < els.size(); ++i) index_.emplace(els[i], i);
    identity_ = element_index(Permutation::identity(kComplementPoints));
    for (std::uint32_t i = 0; i < els.size(); ++i) inverse_.push_back(element_index(els[i].inverse()));
    phis_ = all_equipartitions(kComplementPoints);
    if (phis_.size() != kEquipartitions) throw std::logic_error("CocycleData: expected 126 equipartitions");
    for (std::uint32_t i = 0; i < phis_.size(); ++i) phi_index_.emplace(phis_[i].key, i);
    phi_action_.resize(els.size());
    for (std::uint32_t s = 0; s < els.size(); ++s) {
      phi_action_[s].resize(kEquipartitions);
      for (std::uint32_t i = 0; i < kEquipartitions; ++i) phi_action_[s][i] = phi_of(els[s].act(phis_[i].key));
    }
    // Transversal by BFS over generators: phi_0 . t_phi = phi.
    transversal_.assign(kEquipartitions, UINT32_MAX);
    transversal_[0] = identity_;
    std::vector<std::uint32_t> queue{0};
    std::vector<std::uint32_t> gens;
    for (const auto& g : S_.group.generators()) gens.push_back(element_index(g));
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (auto g : gens) {
        const auto next = phi_action_[g][queue[head]];
        if (transversal_[next] == UINT32_MAX) {
          transversal_[next] = product(transversal_[queue[head]], g);
          queue.push_back(next);
        }
      }
    if (queue.size() != kEquipartitions) throw std::logic_error("CocycleData: S is not transitive on equipartitions");
    for (std::uint32_t s = 0; s < els.size(); ++s)
      if (phi_action_[s][0] == 0 && s != identity_) V_.push_back(s);
    std::sort(V_.begin(), V_.end());
    if (V_.size() != 3) throw std::logic_error("CocycleData: stabilizer of phi_0 does not have order 4");
    for (auto v : V_)
      if (product(v, v) != identity_) throw std::logic_error("CocycleData: stabilizer is not a Klein four-group");
  }

  const PointedPSL28& S() const { return S_; }
  std::size_t group_size() const { return S_.elements.size(); }
  const Permutation& element(std::uint32_t s) const { return S_.elements[s]; }
  std::uint32_t identity() const { return identity_; }
  std::uint32_t inverse(std::uint32_t s) const { return inverse_[s]; }
  const std::vector<Equipartition>& equipartitions() const { return phis_; }
  /// Nonidentity elements of V, ascending element index.
  const std::vector<std::uint32_t>& V() const { return V_; }
  std::uint32_t transversal(std::uint32_t phi) const { return transversal_[phi]; }
  std::uint32_t phi_image(std::uint32_t s, std::uint32_t phi) const { return phi_action_[s][phi]; }

  std::uint32_t element_index(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw std::logic_error("CocycleData: permutation is not in S");
    return it->second;
  }

  std::uint32_t product(std::uint32_t a, std::uint32_t b) const { return element_index(element(a) * element(b)); }

  std::uint32_t phi_of(Mask part) const { return phi_index_.at(make_equipartition(kComplementPoints, part).key); }

  /// delta_label(v) for v in V (v = identity gives 0).
  int delta(int label, std::uint32_t v) const {
    if (label < 0 || label > 3) throw std::invalid_argument("delta: label must be 0..3");
    if (v == identity_ || label == 0) return 0;
    const auto pos = std::find(V_.begin(), V_.end(), v);
    if (pos == V_.end()) throw std::logic_error("delta: element outside V");
    return V_[static_cast<std::size_t>(label - 1)] == v ? 0 : 1;
  }

  /// gamma(s)(phi) = delta(t_{phi s^-1} s t_phi^-1).
  MVector induced_cocycle(int label, std::uint32_t s) const {
    MVector out;
    if (label == 0) return out;
    const auto s_inv = inverse_[s];
    for (std::uint32_t phi = 0; phi < kEquipartitions; ++phi) {
      const auto src = phi_action_[s_inv][phi];
      const auto v = product(product(transversal_[src], s), inverse_[transversal_[phi]]);
      if (phi_action_[v][0] != 0) throw std::logic_error("induced_cocycle: decomposition left V");
      out[phi] = delta(label, v) != 0;
    }
    return out;
  }

  /// m^s with (m^s)(phi . s) = m(phi).
  MVector twist(const MVector& m, std::uint32_t s) const {
    MVector out;
    for (std::uint32_t phi = 0; phi < kEquipartitions; ++phi)
      if (m[phi]) out[phi_action_[s][phi]] = true;
    return out;
  }

  ExtElement multiply(const ExtElement& a, const ExtElement& b) const {
    return ExtElement{twist(a.m, b.s) ^ b.m, product(a.s, b.s)};
  }

 private:
  PointedPSL28 S_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
  std::uint32_t identity_ = 0;
  std::vector<std::uint32_t> inverse_;
  std::vector<Equipartition> phis_;
  std::unordered_map<Mask, std::uint32_t> phi_index_;
  std::vector<std::vector<std::uint32_t>> phi_action_;
  std::vector<std::uint32_t> transversal_;
  std::vector<std::uint32_t> V_;
};

inline CocycleData equipartition_setup(PointedPSL28 S) { return CocycleData(std::move(S)); }

struct ComplementGroup {
  int delta_label = 0;
  std::vector<ExtElement> elements;        // (gamma(s), s), indexed by s
  PermutationGroup vertex_group;           // on the 252 five-subsets, co-lex order
  std::vector<std::size_t> orbit_sizes;    // sorted descending
  std::optional<std::uint64_t> regularity; // stabilizer order when transitive
};

/// Vertex action of (m, s): K -> s(K), then complement iff m at the equipartition of s(K) is 1.
inline Permutation vertex_action(const CocycleData& data, const ExtElement& x) {
  const auto verts = all_ksubsets(kComplementPoints, kComplementPoints / 2);
  std::vector<Point> img(verts.size());
  const auto& s = data.element(x.s);
  for (std::size_t v = 0; v < verts.size(); ++v) {
    Mask K = s.act(verts[v]);
    if (x.m[data.phi_of(K)]) K = ~K & low_mask(kComplementPoints);
    img[v] = static_cast<Point>(colex_rank(K));
  }
  return Permutation::from_images(std::move(img));
}

/// The complement {(gamma(s), s)} for one delta, with closure checked over all pairs.
inline ComplementGroup complement_group(const CocycleData& data, int label) {
  ComplementGroup out;
  out.delta_label = label;
  const auto n = static_cast<std::uint32_t>(data.group_size());
  for (std::uint32_t s = 0; s < n; ++s) out.elements.push_back(ExtElement{data.induced_cocycle(label, s), s});
  if (out.elements[data.identity()].m.any()) throw std::logic_error("complement_group: gamma(1) is not zero");
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      const auto c = data.multiply(out.elements[a], out.elements[b]);
      if (c.m != out.elements[c.s].m) throw std::logic_error("complement_group: set is not closed");
    }
  std::vector<Permutation> gens;
  for (const auto& g : data.S().group.generators()) gens.push_back(vertex_action(data, out.elements[data.element_index(g)]));
  out.vertex_group = PermutationGroup::from_generators(std::move(gens), n);
  if (out.vertex_group.order() != n) throw std::logic_error("complement_group: vertex action is not faithful");
  const auto dom = ActionDomain::points(out.vertex_group.degree());
  for (const auto& orb : orbit_partition(out.vertex_group, dom)) out.orbit_sizes.push_back(orb.size());
  std::sort(out.orbit_sizes.rbegin(), out.orbit_sizes.rend());
  out.regularity = regularity_degree(out.vertex_group, dom);
  return out;
}

/// Label of the complement obtained by conjugating the `label` complement by the
/// Frobenius map sigma: delta'(v) = gamma(sigma v sigma^-1)(phi_0 sigma^-1).
inline int frobenius_class_action(const CocycleData& data, int label) {
  const auto sigma = psl28_frobenius();
  const auto sigma_inv = sigma.inverse();
  for (const auto& g : data.S().group.generators())
    if (!data.S().group.contains(sigma_inv * g * sigma)) throw std::logic_error("frobenius: sigma does not normalize S");
  const auto phi0_back = data.phi_of(sigma_inv.act(data.equipartitions()[0].key));
  std::array<int, 3> values{};
  for (std::size_t j = 0; j < 3; ++j) {
    const auto v = data.V()[j];
    const auto conj = data.element_index(sigma * data.element(v) * sigma_inv);
    values[j] = data.induced_cocycle(label, conj)[phi0_back] ? 1 : 0;
  }
  for (int cand = 0; cand < 4; ++cand) {
    bool match = true;
    for (std::size_t j = 0; j < 3; ++j) match = match && data.delta(cand, data.V()[j]) == values[j];
    if (match) return cand;
  }
  throw std::logic_error("frobenius: conjugated cocycle is not a homomorphism on V");
}

}  // namespace mjg
