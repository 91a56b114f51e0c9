#include "mjg/verify.hpp"

#include "gtest/gtest.h"
#include "mjg/catalog.hpp"
#include "mjg/classify.hpp"
#include "mjg/near_field.hpp"

namespace mjg {
namespace {

PermutationGroup symmetric(int n) {
  std::vector<Point> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = i;
  return PermutationGroup::from_generators(
      {Permutation::from_cycles(n, {cyc}), Permutation::from_cycles(n, {{0, 1}})});
}

// The same group with extra fixed points appended.
PermutationGroup with_fixed_points(const PermutationGroup& G, std::size_t degree) {
  std::vector<Permutation> gens;
  for (const auto& g : G.generators()) {
    std::vector<Point> img(g.images().begin(), g.images().end());
    for (auto x = static_cast<Point>(img.size()); x < degree; ++x) img.push_back(x);
    gens.push_back(Permutation::from_images(img));
  }
  return PermutationGroup::from_generators(gens);
}

PermutationGroup witness(int n, int k, IndexSet I, int theorem) {
  const auto recipes = theorem == 1 ? classify_cayley(n, k, I).witnesses : classify_two_regular(n, k, I).witnesses;
  return build_witness(recipes.at(0), n, k).group;
}

TEST(IsAutomorphismTest, Examples) {
  auto petersen = build_graph(5, 2, index_set({2}));
  EXPECT_TRUE(is_automorphism(Permutation::identity(10), petersen));
  auto J = build_graph(6, 3, index_set({1, 3}));
  EXPECT_TRUE(is_automorphism(complementation(J), J));
  // Swap an endpoint of an edge with a vertex outside its neighbourhood.
  const auto edge = petersen.edges().front();
  std::uint32_t other = 0;
  while (other == edge.first || petersen.adjacent(edge.first, other)) ++other;
  const auto swap = Permutation::from_cycles(10, {{edge.second, other}});
  const auto bad = broken_edge(swap, petersen);
  ASSERT_TRUE(bad.has_value());
  EXPECT_FALSE(petersen.adjacent(swap[bad->first], swap[bad->second]));
  EXPECT_THROW(is_automorphism(Permutation::identity(9), petersen), std::invalid_argument);
}

TEST(RegularActionTest, Examples) {
  auto ahl = regular_action_check(witness(7, 2, index_set({1}), 1), build_graph(7, 2, index_set({1})), 1, "ahl7");
  EXPECT_TRUE(ahl.confirmed) << ahl.evidence;
  auto psl = regular_action_check(witness(10, 5, index_set({1, 4}), 2), build_graph(10, 5, index_set({1, 4})), 2,
                                  "psl28-complement");
  EXPECT_TRUE(psl.confirmed) << psl.evidence;
  const auto agl5 = induced_subset_action(affine_group(field_as_near_field(5), AffineKind::AGL), 2);
  auto refuted = regular_action_check(agl5, build_graph(5, 2, index_set({2})), 1, "agl5-petersen");
  EXPECT_FALSE(refuted.confirmed);
  EXPECT_NE(refuted.evidence.find("r=2"), std::string::npos);
  EXPECT_EQ(refuted.outcome(), "refuted");
}

TEST(RegularActionTest, BrokenGeneratorIsReported) {
  auto J = build_graph(5, 2, index_set({2}));
  auto G = PermutationGroup::from_generators({Permutation::from_cycles(10, {{0, 1}})});
  auto rep = regular_action_check(G, J, 1, "bad");
  EXPECT_FALSE(rep.confirmed);
  EXPECT_NE(rep.evidence.find("breaks edge"), std::string::npos);
}

TEST(RegularActionTest, SubsetVariantAtLargeDegree) {
  auto rep = regular_on_subsets_check(affine_group(build_dickson(3, 2), AffineKind::AGL), 2, 2, "dickson9");
  EXPECT_TRUE(rep.confirmed) << rep.evidence;
}

TEST(BruteforceAutTest, Examples) {
  EXPECT_EQ(bruteforce_automorphism_group(build_graph(4, 2, index_set({1}))), 48U);
  EXPECT_EQ(bruteforce_automorphism_group(build_graph(4, 2, index_set({2}))), 48U);
  EXPECT_EQ(bruteforce_automorphism_group(build_graph(5, 2, index_set({1}))), 120U);
  EXPECT_EQ(bruteforce_automorphism_group(build_graph(5, 2, index_set({2}))), 120U);
  EXPECT_EQ(bruteforce_automorphism_group(build_graph(4, 2, index_set({1, 2}))), 720U);
  EXPECT_THROW(bruteforce_automorphism_group(build_graph(6, 2, index_set({1}))), std::invalid_argument);
}

TEST(BruteforceAutTest, MatchesDescriptorOnEverySmallGraph) {
  for (int n = 4; n <= 5; ++n)
    for (IndexSet I = 2; I <= full_index_set(2); I += 2) {
      const auto J = build_graph(n, 2, I);
      EXPECT_EQ(BigInt(bruteforce_automorphism_group(J)), *aut_descriptor(n, 2, I).order) << n << " " << I;
    }
}

TEST(BruteforceAutTest, SubgroupHasTheCountedOrder) {
  for (IndexSet I = 2; I <= full_index_set(2); I += 2) {
    const auto J = build_graph(4, 2, I);
    EXPECT_EQ(bruteforce_automorphism_subgroup(J).order(), bruteforce_automorphism_group(J));
  }
}

TEST(RegularSubgroupTest, PetersenInsideS5) {
  auto rep = regular_subgroup_nonexistence(induced_subset_action(symmetric(5), 2), build_graph(5, 2, index_set({2})),
                                           "petersen");
  EXPECT_TRUE(rep.confirmed) << rep.evidence;
}

TEST(RegularSubgroupTest, OctahedronInsideS4AndInsideAut) {
  const auto J = build_graph(4, 2, index_set({1}));
  // The order-6 subgroups of S4 are point stabilizers, intransitive on 2-subsets.
  EXPECT_TRUE(regular_subgroup_nonexistence(induced_subset_action(symmetric(4), 2), J, "s4").confirmed);
  // The full automorphism group does contain a regular subgroup, as the classification says.
  ASSERT_TRUE(classify_cayley(4, 2, index_set({1})).yes);
  auto rep = regular_subgroup_nonexistence(bruteforce_automorphism_subgroup(J), J, "aut");
  EXPECT_FALSE(rep.confirmed);
  EXPECT_NE(rep.evidence.find("regular subgroup"), std::string::npos);
}

TEST(RegularSubgroupTest, AffineNineInsideAgl) {
  auto agl9 = induced_subset_action(affine_group(field_as_near_field(9), AffineKind::AGL), 2);
  ASSERT_EQ(agl9.order(), 72U);
  EXPECT_TRUE(regular_subgroup_nonexistence(agl9, build_graph(9, 2, index_set({1})), "agl9").confirmed);
}

TEST(RegularSubgroupTest, FindsCyclicWitness) {
  // C_10 inside Aut of K_10 restricted to the cyclic witness itself.
  auto G = witness(5, 2, index_set({1, 2}), 1);
  EXPECT_FALSE(regular_subgroup_nonexistence(G, build_graph(5, 2, index_set({1, 2})), "c10").confirmed);
}

TEST(TwoOrbitTest, LemmaRows) {
  const auto c3 = PermutationGroup::from_generators({Permutation::from_cycles(4, {{0, 1, 2}})});
  EXPECT_EQ(two_orbit_regularity(c3), std::optional<std::uint64_t>(1));
  const auto s3 = PermutationGroup::from_generators(
      {Permutation::from_cycles(4, {{0, 1, 2}}), Permutation::from_cycles(4, {{0, 1}})});
  EXPECT_EQ(two_orbit_regularity(s3), std::optional<std::uint64_t>(2));
  const auto agl5 = with_fixed_points(affine_group(field_as_near_field(5), AffineKind::AGL), 6);
  EXPECT_TRUE(lemma_two_orbit_check(agl5, 4, "agl5", 2).confirmed);
  const auto psl28 = with_fixed_points(detail::projective_line_group(8, detail::ProjectiveKind::PSL), 10);
  auto rep = lemma_two_orbit_check(psl28, 4, "psl28", 4);
  EXPECT_TRUE(rep.confirmed) << rep.evidence;
  EXPECT_FALSE(lemma_two_orbit_check(symmetric(6), 4, "s6").confirmed);
  EXPECT_THROW(two_orbit_regularity(symmetric(5)), std::invalid_argument);
}

TEST(RegorbitsTest, ExhaustiveOverS4) {
  EXPECT_EQ(small_symmetric_subgroups(4).size(), 30U);
  EXPECT_EQ(small_symmetric_subgroups(3).size(), 6U);
  auto rep = lemma_regorbits_exhaustive_n4();
  EXPECT_TRUE(rep.confirmed) << rep.evidence;
  EXPECT_EQ(rep.evidence, "subgroups=30 qualifying=4 all C3");
}

TEST(LivingstoneWagnerTest, CatalogAndWitnessGroups) {
  for (const auto& r : catalog_records())
    if (r.constructible() && r.degree <= 16) EXPECT_TRUE(livingstone_wagner_holds(r.build())) << r.name;
  EXPECT_TRUE(livingstone_wagner_holds(symmetric(8)));
  EXPECT_TRUE(livingstone_wagner_holds(affine_group(build_dickson(3, 2), AffineKind::AGL)));
}

TEST(CensusOracleTest, YesVerdictsConfirmedUpToTen) {
  for (int n = 4; n <= 10; ++n)
    for (int k = 2; 2 * k <= n; ++k)
      for (IndexSet I = 2; I <= full_index_set(k); I += 2) {
        const auto J = build_graph(n, k, I);
        for (int t = 1; t <= 2; ++t) {
          const auto recipes =
              t == 1 ? classify_cayley(n, k, I).witnesses : classify_two_regular(n, k, I).witnesses;
          for (const auto& w : recipes)
            EXPECT_TRUE(regular_action_check(build_witness(w, n, k).group, J, w.r(), w.name).confirmed)
                << n << " " << k << " " << I << " " << w.name;
        }
      }
}

}  // namespace
}  // namespace mjg
