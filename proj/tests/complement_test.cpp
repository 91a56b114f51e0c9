#include "mjg/complement.hpp"

#include <map>
#include <set>

#include "gtest/gtest.h"

namespace mjg {
namespace {

const CocycleData& data() {
  static const CocycleData d = equipartition_setup(build_pointed_psl28());
  return d;
}

TEST(PointedPSL28Test, OrderAndFixedPoint) {
  const auto& S = data().S();
  EXPECT_EQ(S.group.order(), 504U);
  EXPECT_EQ(S.elements.size(), 504U);
  for (const auto& g : S.elements) EXPECT_EQ(g[PointedPSL28::kFixed], PointedPSL28::kFixed);
  // 3-transitive on the projective line: 9 * 8 * 7 = 504.
  std::set<std::array<Point, 3>> images;
  for (const auto& g : S.elements) images.insert({g[0], g[1], g[8]});
  EXPECT_EQ(images.size(), 504U);
}

TEST(PointedPSL28Test, FourHomogeneousOnProjectiveLine) {
  const auto& S = data().S();
  for (int m = 1; m <= 4; ++m)
    EXPECT_EQ(orbit_partition(S.group, ActionDomain::explicit_sets(10, all_ksubsets(9, m))).size(), 1U);
  const auto orbits = orbit_partition(S.group, ActionDomain::ksubsets(10, 5));
  ASSERT_EQ(orbits.size(), 2U);
  EXPECT_EQ(orbits[0].size(), 126U);
  EXPECT_EQ(regularity_degree(S.group, ActionDomain::ksubsets(10, 5)), std::nullopt);
}

TEST(CocycleDataTest, StabilizerIsKlein) {
  const auto& d = data();
  ASSERT_EQ(d.V().size(), 3U);
  for (auto v : d.V()) {
    EXPECT_EQ(d.phi_image(v, 0), 0U);
    EXPECT_EQ(d.element(v).order(), 2U);
  }
  EXPECT_EQ(d.product(d.V()[0], d.V()[1]), d.V()[2]);
}

TEST(CocycleDataTest, TransversalMapsBasePoint) {
  const auto& d = data();
  for (std::uint32_t phi = 0; phi < kEquipartitions; ++phi) EXPECT_EQ(d.phi_image(d.transversal(phi), 0), phi);
}

TEST(CocycleDataTest, FieldSubsetEquipartitionHasKleinStabilizer) {
  // {0, t, t^2, t^4} with p: codes 0, 2, 4, 6 and point 9.
  const auto& d = data();
  const Mask K = (1U << 0) | (1U << 2) | (1U << 4) | (1U << 6) | (1U << 9);
  const auto phi = d.phi_of(K);
  std::vector<std::uint32_t> stab;
  for (std::uint32_t s = 0; s < d.group_size(); ++s)
    if (d.phi_image(s, phi) == phi) stab.push_back(s);
  ASSERT_EQ(stab.size(), 4U);
  for (auto s : stab) EXPECT_EQ(d.product(s, s), d.identity());
}

TEST(CocycleDataTest, DeltaIsHomomorphism) {
  const auto& d = data();
  std::vector<std::uint32_t> V{d.identity()};
  V.insert(V.end(), d.V().begin(), d.V().end());
  for (int label = 0; label < 4; ++label)
    for (auto a : V)
      for (auto b : V) EXPECT_EQ(d.delta(label, d.product(a, b)), d.delta(label, a) ^ d.delta(label, b));
  EXPECT_THROW(d.delta(4, d.identity()), std::invalid_argument);
}

TEST(CocycleDataTest, CocycleIdentity) {
  const auto& d = data();
  for (int label = 0; label < 4; ++label) {
    std::vector<MVector> gamma;
    for (std::uint32_t s = 0; s < d.group_size(); ++s) gamma.push_back(d.induced_cocycle(label, s));
    for (std::uint32_t a = 0; a < d.group_size(); a += 7)
      for (std::uint32_t b = 0; b < d.group_size(); ++b)
        EXPECT_EQ(gamma[d.product(a, b)], d.twist(gamma[a], b) ^ gamma[b]);
  }
}

TEST(CocycleDataTest, CocycleRestrictsToDeltaAtBase) {
  const auto& d = data();
  for (int label = 0; label < 4; ++label) {
    EXPECT_FALSE(d.induced_cocycle(label, d.identity()).any());
    for (auto v : d.V()) EXPECT_EQ(d.induced_cocycle(label, v)[0] ? 1 : 0, d.delta(label, v));
  }
}

TEST(ExtElementTest, AssociativeOnSamples) {
  const auto& d = data();
  std::mt19937_64 rng(5);
  auto random_element = [&] {
    ExtElement x;
    for (std::size_t i = 0; i < kEquipartitions; ++i) x.m[i] = (rng() & 1U) != 0;
    x.s = static_cast<std::uint32_t>(rng() % d.group_size());
    return x;
  };
  for (int i = 0; i < 2000; ++i) {
    const auto a = random_element(), b = random_element(), c = random_element();
    EXPECT_EQ(d.multiply(d.multiply(a, b), c), d.multiply(a, d.multiply(b, c)));
  }
}

TEST(ExtElementTest, VertexActionIsHomomorphism) {
  const auto& d = data();
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    ExtElement a, b;
    for (std::size_t j = 0; j < kEquipartitions; ++j) {
      a.m[j] = (rng() & 1U) != 0;
      b.m[j] = (rng() & 1U) != 0;
    }
    a.s = static_cast<std::uint32_t>(rng() % d.group_size());
    b.s = static_cast<std::uint32_t>(rng() % d.group_size());
    EXPECT_EQ(vertex_action(d, d.multiply(a, b)), vertex_action(d, a) * vertex_action(d, b));
  }
}

TEST(ComplementGroupTest, OrbitSignatures) {
  const auto& d = data();
  std::map<std::vector<std::size_t>, int> signatures;
  for (int label = 0; label < 4; ++label) {
    const auto G = complement_group(d, label);
    EXPECT_EQ(G.vertex_group.order(), 504U);
    std::size_t total = 0;
    for (auto s : G.orbit_sizes) total += s;
    EXPECT_EQ(total, 252U);
    ++signatures[G.orbit_sizes];
    if (label == 0) {
      EXPECT_EQ(G.orbit_sizes, (std::vector<std::size_t>{126, 126}));
      EXPECT_FALSE(G.regularity.has_value());
    } else {
      EXPECT_EQ(G.orbit_sizes, (std::vector<std::size_t>{252}));
      EXPECT_EQ(G.regularity, std::optional<std::uint64_t>(2));
    }
  }
  EXPECT_EQ(signatures.size(), 2U);
}

TEST(ComplementGroupTest, CommutesWithComplementation) {
  const auto& d = data();
  const auto J = build_graph(10, 5, index_set({1, 4}));
  const auto c = complementation(J);
  for (int label = 0; label < 4; ++label) {
    const auto G = complement_group(d, label);
    for (const auto& g : G.vertex_group.generators()) EXPECT_EQ(g * c, c * g);
  }
}

TEST(FrobeniusTest, PermutesNonzeroClassesInThreeCycle) {
  const auto& d = data();
  EXPECT_EQ(frobenius_class_action(d, 0), 0);
  std::array<int, 4> image{};
  for (int label = 0; label < 4; ++label) image[label] = frobenius_class_action(d, label);
  std::set<int> nonzero{image[1], image[2], image[3]};
  EXPECT_EQ(nonzero, (std::set<int>{1, 2, 3}));
  for (int label = 1; label < 4; ++label) {
    EXPECT_NE(image[label], label);
    EXPECT_EQ(image[image[image[label]]], label);
  }
}

}  // namespace
}  // namespace mjg
