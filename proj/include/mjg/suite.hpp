#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "mjg/catalog.hpp"
#include "mjg/classify.hpp"
#include "mjg/complement.hpp"
#include "mjg/exceptional.hpp"
#include "mjg/near_field.hpp"
#include "mjg/verify.hpp"

namespace mjg {

/// Worker count from MJG_THREADS, else the hardware concurrency.
inline unsigned thread_count() {
  if (const char* env = std::getenv("MJG_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return static_cast<unsigned>(t);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Runs f(i) for i in [0, count) on `threads` workers.
template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& f) {
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(threads, count); ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) f(i);
    });
  for (auto& th : pool) th.join();
}

struct SuiteClaim {
  int criterion = 0;  // acceptance criterion 1..8
  std::string id;
  bool full_only = false;
  std::function<OracleReport()> run;
};

namespace detail {

/// Wraps a throwing check: exceptions become refuted reports.
inline OracleReport guarded(const std::string& id, const std::function<OracleReport()>& f) {
  Stopwatch sw;
  try {
    return f();
  } catch (const std::exception& e) {
    return make_report(id, false, std::string("exception: ") + e.what(), sw);
  }
}

inline OracleReport boolean_claim(const std::string& id, const std::function<std::pair<bool, std::string>()>& f) {
  Stopwatch sw;
  auto [ok, evidence] = f();
  return make_report(id, ok, std::move(evidence), sw);
}

inline const WitnessRecipe& named_witness(const std::vector<WitnessRecipe>& ws, const std::string& name) {
  for (const auto& w : ws)
    if (w.name == name) return w;
  throw std::logic_error("no witness named " + name);
}

inline PermutationGroup with_fixed_points(const PermutationGroup& G, std::size_t degree) {
  std::vector<Permutation> gens;
  for (const auto& g : G.generators()) {
    std::vector<Point> img(g.images().begin(), g.images().end());
    for (auto x = static_cast<Point>(img.size()); x < degree; ++x) img.push_back(x);
    gens.push_back(Permutation::from_images(img));
  }
  return PermutationGroup::from_generators(gens);
}

inline PermutationGroup symmetric_group(int n) {
  std::vector<Point> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = i;
  return PermutationGroup::from_generators({Permutation::from_cycles(n, {cyc}), Permutation::from_cycles(n, {{0, 1}})});
}

/// Clauses of the automorphism theorem whose hypotheses hold, each tested on its own.
inline std::vector<int> aut_clauses_holding(int n, int k, IndexSet I) {
  const IndexSet full = full_index_set(k), top = IndexSet{1} << k;
  const bool proper = I != full;
  const bool special_half = I == top || I == (full & ~top);
  const bool symmetric_prime = index_prime(I, k) == index_double_prime(I, k);
  const bool reflected = I == index_reflect(I, k);
  const bool go = n == 12 && k == 4 && (I == index_set({1, 3}) || I == index_set({2, 4}));
  const bool holds[8] = {
      !proper,
      proper && 2 * k < n - 1 && !go,
      proper && go,
      proper && 2 * k == n - 1 && !reflected,
      proper && 2 * k == n - 1 && reflected,
      proper && 2 * k == n && !special_half && !symmetric_prime,
      proper && 2 * k == n && !special_half && symmetric_prime,
      proper && 2 * k == n && special_half,
  };
  std::vector<int> out;
  for (int c = 0; c < 8; ++c)
    if (holds[c]) out.push_back(c);
  return out;
}

inline OracleReport census_yes_oracle(int n_max, std::uint64_t vertex_cap, const std::string& id) {
  Stopwatch sw;
  std::map<std::tuple<int, int, int, std::string>, PermutationGroup> cache;
  std::size_t checked = 0;
  for (int n = 4; n <= n_max; ++n)
    for (int k = 2; 2 * k <= n; ++k) {
      if (binomial(n, k) > vertex_cap) continue;
      for (IndexSet I = 2; I <= full_index_set(k); I += 2) {
        const auto J = build_graph(n, k, I);
        std::vector<WitnessRecipe> ws = classify_cayley(n, k, I).witnesses;
        for (const auto& w : classify_two_regular(n, k, I).witnesses) ws.push_back(w);
        for (const auto& w : ws) {
          const auto key = std::make_tuple(n, k, w.theorem, w.name);
          auto it = cache.find(key);
          if (it == cache.end()) it = cache.emplace(key, build_witness(w, n, k).group).first;
          const auto rep = regular_action_check(it->second, J, w.r(), w.name);
          ++checked;
          if (!rep.confirmed)
            return make_report(id, false,
                               "J(" + std::to_string(n) + "," + std::to_string(k) + ")_" + format_index_set(I) + " " +
                                   w.name + ": " + rep.evidence,
                               sw);
        }
      }
    }
  return make_report(id, true, std::to_string(checked) + " witness checks", sw);
}

}  // namespace detail

/// Every claim of the verification suite, grouped by acceptance criterion.
inline std::vector<SuiteClaim> verification_claims() {
  using detail::boolean_claim;
  std::vector<SuiteClaim> claims;
  auto add = [&](int criterion, std::string id, bool full_only, std::function<OracleReport()> f) {
    claims.push_back({criterion, id, full_only, [id, f] { return detail::guarded(id, f); }});
  };

  // 1. Regular witnesses.
  for (int q : {7, 11, 19, 23, 27, 31}) {
    const std::string id = "regular-ahl-" + std::to_string(q);
    add(1, id, binomial(q, 2) > 300, [q, id] {
      const auto w = classify_cayley(q, 2, index_set({1})).witnesses.at(0);
      return regular_action_check(build_witness(w, q, 2).group, build_graph(q, 2, index_set({1})), 1, id);
    });
  }
  add(1, "regular-agl-8", false, [] {
    const auto w = detail::named_witness(classify_cayley(8, 3, index_set({1})).witnesses, "AGL_1(8)");
    return regular_action_check(build_witness(w, 8, 3).group, build_graph(8, 3, index_set({1})), 1, "regular-agl-8");
  });
  add(1, "regular-agammal-32", true, [] {
    const auto w = detail::named_witness(classify_cayley(32, 3, index_set({1})).witnesses, "AGammaL_1(32)");
    return regular_action_check(build_witness(w, 32, 3).group, build_graph(32, 3, index_set({1})), 1,
                                "regular-agammal-32");
  });

  // 2. Dickson near-fields.
  add(2, "dickson-9-axioms", false, [] {
    return boolean_claim("dickson-9-axioms", [] {
      build_dickson(3, 2).verify_axioms_exhaustive();
      return std::make_pair(true, std::string("729 triples"));
    });
  });
  add(2, "dickson-9-noncommutative", false, [] {
    return boolean_claim("dickson-9-noncommutative", [] {
      const auto F = build_dickson(3, 2);
      for (FieldElement a = 0; a < 9; ++a)
        for (FieldElement b = 0; b < 9; ++b)
          if (F.multiply(a, b) != F.multiply(b, a))
            return std::make_pair(true, "ab != ba at codes " + std::to_string(a) + "," + std::to_string(b));
      return std::make_pair(false, std::string("multiplication is commutative"));
    });
  });
  add(2, "dickson-9-agl-sharply-2-transitive", false, [] {
    return boolean_claim("dickson-9-agl-sharply-2-transitive", [] {
      const auto G = affine_group(build_dickson(3, 2), AffineKind::AGL);
      return std::make_pair(is_sharply_two_transitive(G), "|G|=" + std::to_string(G.order()));
    });
  });
  add(2, "dickson-9-agl-2-regular", false, [] {
    const auto w = detail::named_witness(classify_two_regular(9, 2, index_set({1})).witnesses, "AGL_1(Dickson(3,2))");
    return regular_action_check(build_witness(w, 9, 2).group, build_graph(9, 2, index_set({1})), 2,
                                "dickson-9-agl-2-regular");
  });
  add(2, "dickson-343-axioms", true, [] {
    return boolean_claim("dickson-343-axioms", [] {
      build_dickson(7, 3).verify_axioms_exhaustive();
      return std::make_pair(true, std::string("40353607 triples"));
    });
  });
  add(2, "dickson-343-ahl-regular", true, [] {
    return regular_on_subsets_check(affine_group(build_dickson(7, 3), AffineKind::AHL), 2, 1,
                                    "dickson-343-ahl-regular");
  });

  // 3. Exceptional near-fields.
  const std::vector<std::tuple<std::uint32_t, int, std::string>> exceptional = {
      {5, 1, "2T"}, {7, 1, "2O"}, {11, 1, "2I"}, {11, 2, "2Tx5"}, {23, 1, "2Ox11"}, {29, 1, "2Ix7"}, {59, 1, "2Ix29"}};
  for (const auto& [p, variant, tag] : exceptional) {
    const std::string id = "exceptional-" + std::to_string(p) + (variant > 1 ? "-b" : "");
    add(3, id, p > 23, [p = p, variant = variant, tag = tag, id] {
      return boolean_claim(id, [&] {
        const auto r = exceptional_group(exceptional_spec(p, variant));
        const bool ok = r.spec.structure == tag && r.g0_elements.size() == std::uint64_t{p} * p - 1 &&
                        is_sharply_two_transitive(r.group);
        return std::make_pair(ok, "G0 " + r.spec.structure + " of order " + std::to_string(r.g0_elements.size()) +
                                      ", degree " + std::to_string(r.group.degree()));
      });
    });
  }

  // 4. Complements of N in N:PSL_2(8).
  add(4, "psl28-complements", true, [] {
    return boolean_claim("psl28-complements", [] {
      const CocycleData data(build_pointed_psl28());
      const auto J14 = build_graph(10, 5, index_set({1, 4}));
      const auto J23 = build_graph(10, 5, index_set({2, 3}));
      std::vector<std::vector<Permutation>> element_sets;
      std::string ev;
      bool ok = true;
      for (int label = 0; label < 4; ++label) {
        const auto C = complement_group(data, label);
        auto elems = C.vertex_group.elements();
        ok = ok && elems.size() == 504;
        if (label == 0) {
          ok = ok && C.orbit_sizes == std::vector<std::size_t>{126, 126};
        } else {
          ok = ok && C.orbit_sizes == std::vector<std::size_t>{252} && C.regularity == 2U;
          for (const auto& g : elems) ok = ok && is_automorphism(g, J14) && is_automorphism(g, J23);
        }
        std::sort(elems.begin(), elems.end());
        element_sets.push_back(std::move(elems));
        ev += "delta" + std::to_string(label) + ":" + std::to_string(C.orbit_sizes.size()) + " orbits; ";
      }
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) ok = ok && element_sets[a] != element_sets[b];
      const int f1 = frobenius_class_action(data, 1), f2 = frobenius_class_action(data, f1),
                f3 = frobenius_class_action(data, f2);
      ok = ok && frobenius_class_action(data, 0) == 0 && f1 != 1 && f2 != 1 && f3 == 1;
      ev += "frobenius 1->" + std::to_string(f1) + "->" + std::to_string(f2) + "->" + std::to_string(f3);
      return std::make_pair(ok, ev);
    });
  });

  // 5. Brute-force automorphism groups.
  for (auto [n, I] : std::vector<std::pair<int, IndexSet>>{
           {4, index_set({1})}, {4, index_set({2})}, {5, index_set({1})}, {5, index_set({2})}, {4, index_set({1, 2})},
           {5, index_set({1, 2})}}) {
    const std::string id = "aut-bruteforce-J(" + std::to_string(n) + ",2)_" + format_index_set(I);
    add(5, id, false, [n = n, I = I, id] {
      return boolean_claim(id, [&] {
        const auto brute = bruteforce_automorphism_group(build_graph(n, 2, I));
        const auto formula = *aut_descriptor(n, 2, I).order;
        return std::make_pair(BigInt(brute) == formula,
                              "bruteforce " + std::to_string(brute) + ", formula " + formula.str());
      });
    });
  }

  // 6. Petersen graph.
  add(6, "petersen-classify-no", false, [] {
    return boolean_claim("petersen-classify-no", [] {
      const auto v = classify_cayley(5, 2, index_set({2}));
      return std::make_pair(!v.yes && 5 % 4 != 3, "reason " + v.reason);
    });
  });
  add(6, "petersen-no-regular-subgroup", false, [] {
    return regular_subgroup_nonexistence(induced_subset_action(detail::symmetric_group(5), 2),
                                         build_graph(5, 2, index_set({2})), "petersen-no-regular-subgroup");
  });
  add(6, "petersen-deficiency-2", false, [] {
    const auto d = cayley_deficiency(5, 2, index_set({2}));
    const auto w = detail::named_witness(classify_two_regular(5, 2, index_set({2})).witnesses, "AGL_1(GF(5))");
    auto rep = regular_action_check(build_witness(w, 5, 2).group, build_graph(5, 2, index_set({2})), 2,
                                    "petersen-deficiency-2");
    rep.confirmed = rep.confirmed && d.exact && d.value == 2;
    rep.evidence = "deficiency " + (d.exact ? d.value.str() : std::string("interval")) + "; " + rep.evidence;
    return rep;
  });

  // 7. Lemmas on orbits of subgroups.
  add(7, "regorbits-n4", false, [] { return lemma_regorbits_exhaustive_n4(); });
  add(7, "rregorbits-c3", false, [] {
    return lemma_two_orbit_check(PermutationGroup::from_generators({Permutation::from_cycles(4, {{0, 1, 2}})}), 4,
                                 "rregorbits-c3", 1);
  });
  add(7, "rregorbits-s3", false, [] {
    return lemma_two_orbit_check(detail::with_fixed_points(detail::symmetric_group(3), 4), 4, "rregorbits-s3", 2);
  });
  add(7, "rregorbits-agl5", false, [] {
    return lemma_two_orbit_check(
        detail::with_fixed_points(affine_group(field_as_near_field(5), AffineKind::AGL), 6), 4, "rregorbits-agl5", 2);
  });
  add(7, "rregorbits-psl28", false, [] {
    return lemma_two_orbit_check(
        detail::with_fixed_points(detail::projective_line_group(8, detail::ProjectiveKind::PSL), 10), 4,
        "rregorbits-psl28", 4);
  });
  add(7, "iso-class-counts", false, [] {
    return boolean_claim("iso-class-counts", [] {
      const auto a = induced_subgraph_classes(SimpleGraph::disjoint_copies(SimpleGraph::complete(2), 4), 3);
      const auto b = induced_subgraph_classes(SimpleGraph::disjoint_copies(SimpleGraph::complete(4), 2), 4);
      const auto c = induced_subgraph_classes(SimpleGraph::cycle(8), 3);
      return std::make_pair(a == 2 && b == 3 && c == 3, "4K2:" + std::to_string(a) + " 2K4:" + std::to_string(b) +
                                                            " C8:" + std::to_string(c));
    });
  });

  // 8. Census properties.
  for (bool full : {false, true}) {
    const int n_max = full ? 12 : 10;
    const std::string suffix = full ? "-n12" : "-n10";
    add(8, "census-one-aut-clause" + suffix, full, [n_max, suffix] {
      return boolean_claim("census-one-aut-clause" + suffix, [&] {
        std::size_t instances = 0;
        for (int n = 4; n <= n_max; ++n)
          for (int k = 2; 2 * k <= n; ++k)
            for (IndexSet I = 2; I <= full_index_set(k); I += 2) {
              const auto clauses = detail::aut_clauses_holding(n, k, I);
              ++instances;
              if (clauses.size() != 1 || clauses[0] != aut_descriptor(n, k, I).case_id)
                return std::make_pair(false, "J(" + std::to_string(n) + "," + std::to_string(k) + ")_" +
                                                 format_index_set(I) + " matches " +
                                                 std::to_string(clauses.size()) + " clauses");
            }
        return std::make_pair(true, std::to_string(instances) + " instances");
      });
    });
    add(8, "census-yes-witnesses" + suffix, full, [n_max, full, suffix] {
      return detail::census_yes_oracle(n_max, full ? 5000 : 300, "census-yes-witnesses" + suffix);
    });
  }
  add(8, "census-deficiency-formula-n14", false, [] {
    return boolean_claim("census-deficiency-formula-n14", [] {
      std::size_t hits = 0;
      for (int n = 4; n <= 14; ++n)
        for (int k = 2; 2 * k <= n; ++k)
          for (IndexSet I = 2; I <= full_index_set(k); I += 2) {
            if (!only_an_sn(n, k, I)) continue;
            ++hits;
            const auto d = cayley_deficiency(n, k, I);
            if (!d.exact || d.value != factorial(k) * factorial(n - k) / 2)
              return std::make_pair(false, "J(" + std::to_string(n) + "," + std::to_string(k) + ")_" +
                                               format_index_set(I));
          }
      const auto spot = cayley_deficiency(14, 6, index_set({1}));
      return std::make_pair(spot.exact && spot.value == 14515200,
                            std::to_string(hits) + " instances; (14,6,{1}) -> " + spot.value.str());
    });
  });
  return claims;
}

/// Runs the selected claims in parallel; reports come back in claim order.
inline std::vector<OracleReport> run_claims(const std::vector<SuiteClaim>& claims, unsigned threads) {
  std::vector<OracleReport> reports(claims.size());
  parallel_for(claims.size(), threads, [&](std::size_t i) { reports[i] = claims[i].run(); });
  return reports;
}

}  // namespace mjg
