#include "mjg/classify.hpp"

#include <functional>
#include <map>
#include <set>

#include "gtest/gtest.h"

namespace mjg {
namespace {

// Clause predicates restated from the automorphism theorem, one lambda per clause.
std::vector<int> matching_aut_clauses(int n, int k, IndexSet I) {
  const IndexSet full = full_index_set(k);
  const bool proper = I != full;
  const bool special_half = I == (IndexSet{1} << k) || I == (full & ~(IndexSet{1} << k));
  IndexSet Ip = I & ~(IndexSet{1} << k), Ipp = 0;
  for (int i = 1; i < k; ++i)
    if ((Ip >> i) & 1U) Ipp |= IndexSet{1} << (k - i);
  IndexSet reflected = 0;
  for (int i = 1; i <= k; ++i)
    if ((I >> i) & 1U) reflected |= IndexSet{1} << (k + 1 - i);
  const bool go = n == 12 && k == 4 && (I == index_set({1, 3}) || I == index_set({2, 4}));
  const std::vector<std::function<bool()>> clauses = {
      [&] { return !proper; },
      [&] { return proper && 2 * k < n - 1 && !go; },
      [&] { return proper && go; },
      [&] { return proper && 2 * k == n - 1 && I != reflected; },
      [&] { return proper && 2 * k == n - 1 && I == reflected; },
      [&] { return proper && 2 * k == n && !special_half && Ip != Ipp; },
      [&] { return proper && 2 * k == n && !special_half && Ip == Ipp; },
      [&] { return proper && 2 * k == n && special_half; },
  };
  std::vector<int> out;
  for (int c = 0; c < 8; ++c)
    if (clauses[c]()) out.push_back(c);
  return out;
}

TEST(AutDescriptorTest, Examples) {
  auto a = aut_descriptor(5, 2, index_set({1}));
  EXPECT_EQ(a.case_id, 3);
  EXPECT_EQ(a.structure, "S_5");
  EXPECT_EQ(*a.order, 120);
  auto go = aut_descriptor(12, 4, index_set({1, 3}));
  EXPECT_EQ(go.case_id, 2);
  EXPECT_EQ(go.structure, "GO^-_10(2)");
  EXPECT_EQ(*go.order, BigInt("50030759116800"));
  auto c6 = aut_descriptor(8, 4, index_set({2}));
  EXPECT_EQ(c6.case_id, 6);
  EXPECT_EQ(*c6.order, big_pow(2, 35) * factorial(8));
  EXPECT_EQ(aut_descriptor(4, 2, index_set({1})).case_id, 7);
  EXPECT_EQ(*aut_descriptor(4, 2, index_set({1})).order, 48);
  EXPECT_EQ(*aut_descriptor(5, 2, index_set({1, 2})).order, factorial(10));
  EXPECT_EQ(aut_descriptor(7, 3, index_set({1, 3})).case_id, 4);
  EXPECT_EQ(*aut_descriptor(7, 3, index_set({1, 3})).order, factorial(8));
  EXPECT_EQ(aut_descriptor(6, 3, index_set({1})).case_id, 5);
}

TEST(AutDescriptorTest, GoMinusOrderFromFactorization) {
  // 2^21 3^6 5^2 7 11 17, the order of GO^-_10(2).
  BigInt expected = big_pow(2, 21) * big_pow(3, 6) * 25 * 7 * 11 * 17;
  EXPECT_EQ(go_minus_order(5, 2), expected);
  EXPECT_EQ(go_minus_order(1, 2), 6);  // GO^-_2(2) is dihedral of order 6
}

TEST(AutDescriptorTest, ExactlyOneClauseUpToFourteen) {
  for (int n = 4; n <= 14; ++n)
    for (int k = 2; 2 * k <= n; ++k)
      for (IndexSet I = 2; I <= full_index_set(k); I += 2) {
        const auto clauses = matching_aut_clauses(n, k, I);
        ASSERT_EQ(clauses.size(), 1U) << n << " " << k << " " << I;
        EXPECT_EQ(aut_descriptor(n, k, I).case_id, clauses[0]);
      }
}

TEST(AutDescriptorTest, Errors) {
  EXPECT_THROW(aut_descriptor(5, 3, index_set({1})), std::invalid_argument);
  EXPECT_THROW(aut_descriptor(5, 2, 0), std::invalid_argument);
  EXPECT_THROW(aut_descriptor(5, 2, index_set({3})), std::invalid_argument);
}

TEST(CayleyTest, Examples) {
  auto v = classify_cayley(7, 2, index_set({1}));
  EXPECT_TRUE(v.yes);
  EXPECT_EQ(v.cases, std::vector<int>{1});
  ASSERT_EQ(v.witnesses.size(), 1U);
  EXPECT_EQ(v.witnesses[0].name, "AHL_1(GF(7))");

  auto petersen = classify_cayley(5, 2, index_set({2}));
  EXPECT_FALSE(petersen.yes);
  EXPECT_EQ(petersen.reason, "aut-is-Sn-no-sharp-group");

  auto go = classify_cayley(12, 4, index_set({2, 4}));
  EXPECT_FALSE(go.yes);
  EXPECT_EQ(go.reason, "GO10-no-regular-subgroup");
  EXPECT_TRUE(go.trusted);

  auto matching = classify_cayley(6, 3, index_set({3}));
  EXPECT_TRUE(matching.yes);
  EXPECT_EQ(matching.cases, std::vector<int>{5});
  EXPECT_TRUE(matching.disconnected);

  EXPECT_EQ(classify_cayley(8, 3, index_set({2})).cases, std::vector<int>{2});
  EXPECT_EQ(classify_cayley(32, 3, index_set({1, 3})).cases, std::vector<int>{3});
  EXPECT_EQ(classify_cayley(7, 2, index_set({1, 2})).cases, (std::vector<int>{1, 4}));
  EXPECT_EQ(classify_cayley(4, 2, index_set({1})).cases, std::vector<int>{5});
  EXPECT_EQ(classify_cayley(8, 4, index_set({2})).reason, "n2k-lemma");
  EXPECT_EQ(classify_cayley(7, 3, index_set({1, 3})).reason, "n-odd-half-lemma");
}

TEST(CayleyTest, DicksonWitnessesForThreeFortyThree) {
  auto v = classify_cayley(343, 2, index_set({1}));
  ASSERT_TRUE(v.yes);
  std::set<std::string> names;
  for (const auto& w : v.witnesses) names.insert(w.name);
  EXPECT_EQ(names, (std::set<std::string>{"AHL_1(GF(343))", "AHL_1(Dickson(7,3))"}));
  // 27 = 3^3 admits no proper Dickson near-field, since 3 does not divide 2.
  EXPECT_EQ(classify_cayley(27, 2, index_set({2})).witnesses.size(), 1U);
}

TEST(TwoRegularTest, Examples) {
  auto v = classify_two_regular(9, 2, index_set({1}));
  EXPECT_EQ(v.cases, std::vector<int>{1});
  std::set<std::string> names;
  for (const auto& w : v.witnesses) names.insert(w.name);
  EXPECT_EQ(names, (std::set<std::string>{"AGL_1(GF(9))", "AGL_1(Dickson(3,2))"}));
  EXPECT_EQ(classify_two_regular(6, 3, index_set({1, 3})).cases, std::vector<int>{2});
  EXPECT_EQ(classify_two_regular(10, 5, index_set({2, 3, 5})).cases, std::vector<int>{3});
  EXPECT_EQ(classify_two_regular(4, 2, index_set({1})).cases, (std::vector<int>{1, 4}));
  EXPECT_EQ(classify_two_regular(6, 3, index_set({3})).cases, (std::vector<int>{2, 4}));
  EXPECT_EQ(classify_two_regular(25, 2, index_set({1})).witnesses.size(), 3U);  // GF(25), Dickson(5,2), exceptional
  auto go = classify_two_regular(12, 4, index_set({1, 3}));
  EXPECT_FALSE(go.yes);
  EXPECT_TRUE(go.trusted);
  EXPECT_FALSE(classify_two_regular(10, 5, index_set({1})).yes);
  EXPECT_FALSE(classify_two_regular(7, 3, index_set({1})).yes);
}

TEST(TwoRegularTest, ClauseThreeExactlyFourIndexSets) {
  std::vector<IndexSet> hits;
  for (IndexSet I = 2; I <= full_index_set(5); I += 2)
    if (classify_two_regular(10, 5, I).yes && I != full_index_set(5) && I != index_set({5}) &&
        I != index_set({1, 2, 3, 4}))
      hits.push_back(I);
  EXPECT_EQ(hits, (std::vector<IndexSet>{index_set({2, 3}), index_set({1, 4}), index_set({2, 3, 5}),
                                         index_set({1, 4, 5})}));
}

TEST(OnlyAnSnTest, Examples) {
  EXPECT_TRUE(only_an_sn(20, 7, index_set({1})));
  EXPECT_FALSE(only_an_sn(12, 5, index_set({1})));
  EXPECT_TRUE(only_an_sn(13, 6, index_set({2})));
  EXPECT_FALSE(only_an_sn(13, 6, index_set({2, 5})));
  EXPECT_TRUE(only_an_sn(14, 5, index_set({1})));
  EXPECT_FALSE(only_an_sn(33, 4, index_set({1})));
  EXPECT_TRUE(only_an_sn(34, 4, index_set({1})));
  EXPECT_FALSE(only_an_sn(10, 4, full_index_set(4)));
}

TEST(CatalogTest, Examples) {
  EXPECT_TRUE(homogeneous_catalog(6).empty());
  std::map<std::string, std::uint64_t> five;
  for (const auto& r : homogeneous_catalog(5)) five[r.name] = r.order;
  EXPECT_EQ(five, (std::map<std::string, std::uint64_t>{{"M12", 95040}, {"M24", 244823040}}));
  bool psl28 = false;
  for (const auto& r : homogeneous_catalog(4)) psl28 = psl28 || (r.name == "PSL_2(8)" && r.degree == 9 && r.order == 504);
  EXPECT_TRUE(psl28);
  std::set<int> d4;
  for (const auto& r : homogeneous_catalog(4)) d4.insert(r.degree);
  EXPECT_EQ(d4, (std::set<int>{9, 11, 12, 23, 24, 33}));
}

TEST(CatalogTest, DegreeSets) {
  EXPECT_TRUE(in_homogeneous_degrees(12, 5));
  EXPECT_FALSE(in_homogeneous_degrees(13, 5));
  EXPECT_TRUE(in_homogeneous_degrees(33, 4));
  EXPECT_TRUE(in_homogeneous_degrees(11, 3));
  EXPECT_FALSE(in_homogeneous_degrees(13, 3));
  for (std::uint64_t n : {4, 5, 6, 10, 13, 15, 21, 28, 36, 65}) EXPECT_TRUE(in_homogeneous_degrees(n, 2)) << n;
  for (std::uint64_t n : {34, 35, 39}) EXPECT_FALSE(in_homogeneous_degrees(n, 2)) << n;
  // Every catalog degree lies in the degree set of its homogeneity.
  for (const auto& r : catalog_records())
    for (int k = 2; k <= r.homogeneity; ++k) EXPECT_TRUE(in_homogeneous_degrees(r.degree, k)) << r.name;
}

// Orbit counts on k-subsets confirm the stated homogeneity of every constructible record.
TEST(CatalogTest, ConstructibleRecordsMatchOrbitCounts) {
  for (const auto& r : catalog_records()) {
    if (!r.constructible()) continue;
    const auto G = r.build();
    EXPECT_EQ(G.order(), r.order) << r.name;
    EXPECT_EQ(G.degree(), static_cast<std::size_t>(r.degree));
    const int k = r.homogeneity;
    EXPECT_EQ(orbit_partition(G, ActionDomain::ksubsets(r.degree, k)).size(), 1U) << r.name;
    if (k + 1 <= r.degree / 2 && binomial(r.degree, k + 1) <= 200000)
      EXPECT_GT(orbit_partition(G, ActionDomain::ksubsets(r.degree, k + 1)).size(), 1U) << r.name;
  }
}

TEST(DeficiencyTest, Examples) {
  auto petersen = cayley_deficiency(5, 2, index_set({2}));
  EXPECT_TRUE(petersen.exact);
  EXPECT_EQ(petersen.value, 2);
  auto big = cayley_deficiency(14, 6, index_set({1}));
  EXPECT_TRUE(big.exact);
  EXPECT_EQ(big.value, 14515200);
  for (int n = 4; n <= 12; ++n)
    for (int k = 2; 2 * k <= n; ++k) {
      auto d = cayley_deficiency(n, k, full_index_set(k));
      EXPECT_TRUE(d.exact);
      EXPECT_EQ(d.value, 1);
    }
  EXPECT_EQ(cayley_deficiency(9, 4, index_set({1})).value, 4);     // PSL_2(8)
  EXPECT_EQ(cayley_deficiency(11, 4, index_set({1})).value, 24);   // M11
  EXPECT_EQ(cayley_deficiency(12, 5, index_set({1})).value, 120);  // M12
  EXPECT_EQ(cayley_deficiency(11, 5, index_set({1})).value, alternating_stabilizer(11, 5));
  auto six = cayley_deficiency(6, 2, index_set({1}));
  EXPECT_FALSE(six.exact);
  EXPECT_EQ(six.lower, 3);
  EXPECT_EQ(six.upper, 4);  // PSL_2(5) on 6 points
  auto go = cayley_deficiency(12, 4, index_set({1, 3}));
  EXPECT_FALSE(go.exact);
  EXPECT_EQ(go.upper, 192);  // M12 on 4-subsets
}

TEST(DeficiencyTest, FormulaWheneverOnlyAnSn) {
  for (int n = 4; n <= 14; ++n)
    for (int k = 2; 2 * k <= n; ++k)
      for (IndexSet I = 2; I < full_index_set(k); I += 2) {
        auto d = cayley_deficiency(n, k, I);
        if (only_an_sn(n, k, I)) {
          EXPECT_TRUE(d.exact);
          EXPECT_EQ(d.value, factorial(k) * factorial(n - k) / 2);
        }
        const bool cay = classify_cayley(n, k, I).yes, two = classify_two_regular(n, k, I).yes;
        if (cay) EXPECT_EQ(d.value, 1);
        if (!cay && two) EXPECT_EQ(d.value, 2);
        if (!cay && !two) EXPECT_TRUE(d.exact ? d.value >= 3 : d.lower == 3 && d.upper > 3);
      }
}

TEST(ConnectivityTest, FormulaMatchesSearch) {
  for (int n = 4; n <= 10; ++n)
    for (int k = 2; 2 * k <= n; ++k)
      for (IndexSet I = 2; I <= full_index_set(k); I += 2)
        EXPECT_EQ(graph_stats(build_graph(n, k, I)).connected, is_connected_formula(n, k, I)) << n << k << I;
}

// Edge-set oracle: a vertex bijection is an automorphism iff it maps every edge to an edge.
bool preserves_edges(const MergedJohnsonGraph& J, const Permutation& g) {
  for (auto [u, v] : J.edges())
    if (!J.adjacent(g[u], g[v])) return false;
  return true;
}

TEST(WitnessTest, EveryYesVerdictUpToTwelve) {
  std::map<std::tuple<int, int, std::string>, PermutationGroup> cache;
  std::size_t checked = 0;
  for (int n = 4; n <= 12; ++n)
    for (int k = 2; 2 * k <= n; ++k)
      for (IndexSet I = 2; I <= full_index_set(k); I += 2) {
        const auto J = build_graph(n, k, I);
        std::vector<WitnessRecipe> recipes = classify_cayley(n, k, I).witnesses;
        for (const auto& w : classify_two_regular(n, k, I).witnesses) recipes.push_back(w);
        for (const auto& w : recipes) {
          const auto key = std::make_tuple(n, k, std::to_string(w.theorem) + w.name);
          auto it = cache.find(key);
          if (it == cache.end()) {
            auto G = build_witness(w, n, k).group;
            EXPECT_EQ(G.order(), static_cast<std::uint64_t>(w.r()) * J.vertex_count()) << w.name;
            EXPECT_EQ(regularity_degree(G, ActionDomain::points(J.vertex_count())),
                      std::optional<std::uint64_t>(w.r()))
                << n << " " << k << " " << w.name;
            it = cache.emplace(key, std::move(G)).first;
          }
          for (const auto& g : it->second.generators()) EXPECT_TRUE(preserves_edges(J, g)) << n << k << I << w.name;
          ++checked;
        }
      }
  EXPECT_GT(checked, 100U);
}

TEST(WitnessTest, LargerRegularCases) {
  auto agl8 = build_witness(classify_cayley(8, 3, index_set({1})).witnesses[0], 8, 3).group;
  EXPECT_EQ(agl8.order(), 56U);
  EXPECT_EQ(regularity_degree(agl8, ActionDomain::points(56)), std::optional<std::uint64_t>(1));
  auto agl32 = build_witness(classify_cayley(32, 3, index_set({1})).witnesses[0], 32, 3).group;
  EXPECT_EQ(agl32.order(), 4960U);
  EXPECT_EQ(regularity_degree(agl32, ActionDomain::points(4960)), std::optional<std::uint64_t>(1));
}

TEST(VerdictTest, Aggregate) {
  auto v = classify(6, 3, index_set({3}));
  EXPECT_FALSE(v.connected);
  EXPECT_TRUE(v.cayley.yes);
  EXPECT_TRUE(v.two_regular.yes);
  EXPECT_EQ(v.vertices, 20);
  EXPECT_EQ(v.deficiency.value, 1);
}

}  // namespace
}  // namespace mjg
