#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mjg/johnson.hpp"
#include "mjg/permgroup.hpp"

namespace mjg {

struct OracleReport {
  std::string claim;
  bool confirmed = false;
  std::string evidence;  // counts when confirmed, a counterexample when refuted
  double elapsed_ms = 0;

  std::string outcome() const { return confirmed ? "confirmed" : "refuted"; }
};

namespace detail {

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline OracleReport make_report(std::string claim, bool confirmed, std::string evidence, const Stopwatch& sw) {
  return {std::move(claim), confirmed, std::move(evidence), sw.ms()};
}

inline std::string edge_text(std::uint32_t u, std::uint32_t v) {
  return "(" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ")";
}

}  // namespace detail

/// First edge whose image is a non-edge, if any. Edge counts are preserved by any
/// bijection, so mapping edges into edges also maps non-edges to non-edges.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> broken_edge(const Permutation& p,
                                                                          const MergedJohnsonGraph& J) {
  if (p.degree() != J.vertex_count()) throw std::invalid_argument("is_automorphism: degree mismatch");
  for (std::uint32_t u = 0; u < J.vertex_count(); ++u) {
    std::optional<std::pair<std::uint32_t, std::uint32_t>> bad;
    J.for_each_neighbor(u, [&](std::uint32_t v) {
      if (!bad && u < v && !J.adjacent(p[u], p[v])) bad = std::make_pair(u, v);
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

inline bool is_automorphism(const Permutation& p, const MergedJohnsonGraph& J) { return !broken_edge(p, J); }

/// Confirmed iff every generator is an automorphism of J and G is transitive on
/// the vertices with all stabilizers of order r_expected.
inline OracleReport regular_action_check(const PermutationGroup& G, const MergedJohnsonGraph& J,
                                         std::uint64_t r_expected, std::string claim) {
  detail::Stopwatch sw;
  if (G.degree() != J.vertex_count())
    return detail::make_report(std::move(claim), false, "degree mismatch", sw);
  for (std::size_t i = 0; i < G.generators().size(); ++i)
    if (auto bad = broken_edge(G.generators()[i], J))
      return detail::make_report(std::move(claim), false,
                                 "generator " + std::to_string(i) + " breaks edge " +
                                     detail::edge_text(bad->first, bad->second),
                                 sw);
  const auto r = regularity_degree(G, ActionDomain::points(J.vertex_count()));
  std::ostringstream ev;
  ev << "|G|=" << G.order() << " |V|=" << J.vertex_count() << " r=" << (r ? std::to_string(*r) : "intransitive");
  return detail::make_report(std::move(claim), r == r_expected, ev.str(), sw);
}

/// Same check for a group on the n points acting on k-subsets. Induced actions of
/// point permutations are automorphisms of every J(n,k)_I, so only regularity is tested.
inline OracleReport regular_on_subsets_check(const PermutationGroup& G, int k, std::uint64_t r_expected,
                                             std::string claim) {
  detail::Stopwatch sw;
  const auto dom = ActionDomain::ksubsets(static_cast<int>(G.degree()), k);
  const auto r = regularity_degree(G, dom);
  std::ostringstream ev;
  ev << "|G|=" << G.order() << " |V|=" << dom.size() << " r=" << (r ? std::to_string(*r) : "intransitive");
  return detail::make_report(std::move(claim), r == r_expected, ev.str(), sw);
}

inline constexpr std::size_t kBruteforceMaxVertices = 10;

namespace detail {

/// Per-vertex invariant: sorted common-neighbour counts towards neighbours and
/// towards non-neighbours. Automorphisms preserve it.
inline std::vector<std::vector<int>> vertex_invariants(const std::vector<std::vector<bool>>& adj) {
  const std::size_t V = adj.size();
  std::vector<std::vector<int>> inv(V);
  for (std::size_t u = 0; u < V; ++u) {
    std::vector<int> with_adj, with_non;
    for (std::size_t v = 0; v < V; ++v) {
      if (u == v) continue;
      int common = 0;
      for (std::size_t w = 0; w < V; ++w) common += adj[u][w] && adj[v][w];
      (adj[u][v] ? with_adj : with_non).push_back(common);
    }
    std::sort(with_adj.begin(), with_adj.end());
    std::sort(with_non.begin(), with_non.end());
    inv[u] = {static_cast<int>(with_adj.size())};
    inv[u].insert(inv[u].end(), with_adj.begin(), with_adj.end());
    inv[u].push_back(-1);
    inv[u].insert(inv[u].end(), with_non.begin(), with_non.end());
  }
  return inv;
}

}  // namespace detail

/// Exact automorphisms of J by backtracking over vertex images, pruned by the
/// invariant above and by adjacency to the vertices already placed. Calls f on
/// each automorphism found.
template <class F>
void enumerate_automorphisms(const MergedJohnsonGraph& J, F&& f) {
  const std::size_t V = J.vertex_count();
  if (V > kBruteforceMaxVertices) throw std::invalid_argument("bruteforce_automorphism_group: more than 10 vertices");
  std::vector<std::vector<bool>> adj(V, std::vector<bool>(V, false));
  for (std::size_t u = 0; u < V; ++u)
    for (std::size_t v = 0; v < V; ++v) adj[u][v] = J.adjacent(u, v);
  const auto inv = detail::vertex_invariants(adj);
  std::vector<Point> img(V);
  std::vector<bool> used(V, false);
  std::function<void(std::size_t)> place = [&](std::size_t u) {
    if (u == V) {
      f(Permutation::from_images(img));
      return;
    }
    for (Point w = 0; w < V; ++w) {
      if (used[w] || inv[u] != inv[w]) continue;
      bool ok = true;
      for (std::size_t x = 0; x < u && ok; ++x) ok = adj[x][u] == adj[img[x]][w];
      if (!ok) continue;
      used[w] = true;
      img[u] = w;
      place(u + 1);
      used[w] = false;
    }
  };
  place(0);
}

inline std::uint64_t bruteforce_automorphism_group(const MergedJohnsonGraph& J) {
  std::uint64_t count = 0;
  enumerate_automorphisms(J, [&](const Permutation&) { ++count; });
  return count;
}

/// All automorphisms as a permutation group on the vertices.
inline PermutationGroup bruteforce_automorphism_subgroup(const MergedJohnsonGraph& J) {
  std::vector<Permutation> gens;
  auto G = PermutationGroup::trivial(J.vertex_count());
  enumerate_automorphisms(J, [&](const Permutation& p) {
    if (G.contains(p)) return;
    gens.push_back(p);
    G = PermutationGroup::from_generators(gens);
  });
  return G;
}

inline constexpr std::uint64_t kMaxSearchAmbient = 10'000;
inline constexpr int kMaxSearchGenerators = 3;

/// A regular subgroup of `ambient` (acting on J's vertices), searched among groups
/// generated by at most three elements. Elements of a regular group are
/// fixed-point-free with order dividing |V|, so only those are candidates.
inline std::optional<std::vector<Permutation>> find_regular_subgroup(const PermutationGroup& ambient, std::size_t V) {
  if (ambient.degree() != V) throw std::invalid_argument("regular_subgroup_nonexistence: degree mismatch");
  if (ambient.order() > kMaxSearchAmbient) throw std::invalid_argument("regular_subgroup_nonexistence: ambient too large");
  if (ambient.order() % V != 0) return std::nullopt;
  const auto elements = ambient.elements();
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;
  for (std::uint32_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);
  std::vector<bool> candidate(elements.size(), false);
  std::uint32_t identity = 0;
  for (std::uint32_t i = 0; i < elements.size(); ++i) {
    const auto& g = elements[i];
    if (g.is_identity()) {
      identity = i;
      continue;
    }
    bool fpf = true;
    for (Point x = 0; x < V && fpf; ++x) fpf = g[x] != x;
    candidate[i] = fpf && V % g.order() == 0;
  }

  // Closure of <gens> as sorted element indices; nothing if it leaves the candidates or exceeds |V|.
  auto closure = [&](const std::vector<std::uint32_t>& gens) -> std::optional<std::vector<std::uint32_t>> {
    std::vector<std::uint32_t> group{identity};
    std::vector<bool> in(elements.size(), false);
    in[identity] = true;
    for (std::size_t head = 0; head < group.size(); ++head)
      for (auto s : gens) {
        const auto h = index.at(elements[group[head]] * elements[s]);
        if (in[h]) continue;
        if (!candidate[h] || group.size() == V) return std::nullopt;
        in[h] = true;
        group.push_back(h);
      }
    std::sort(group.begin(), group.end());
    return group;
  };

  std::set<std::vector<std::uint32_t>> seen;
  std::optional<std::vector<Permutation>> found;
  std::function<void(const std::vector<std::uint32_t>&, const std::vector<std::uint32_t>&)> extend =
      [&](const std::vector<std::uint32_t>& gens, const std::vector<std::uint32_t>& group) {
        if (group.size() == V) {
          found.emplace();
          for (auto s : gens) found->push_back(elements[s]);
          return;
        }
        if (static_cast<int>(gens.size()) == kMaxSearchGenerators) return;
        std::vector<bool> in(elements.size(), false);
        for (auto h : group) in[h] = true;
        for (std::uint32_t c = 0; c < elements.size() && !found; ++c) {
          if (!candidate[c] || in[c]) continue;
          auto next_gens = gens;
          next_gens.push_back(c);
          auto next = closure(next_gens);
          if (!next || V % next->size() != 0 || !seen.insert(*next).second) continue;
          extend(next_gens, *next);
        }
      };
  extend({}, {identity});
  return found;
}

/// Confirmed iff no subgroup of `ambient` acts regularly on the vertices of J.
inline OracleReport regular_subgroup_nonexistence(const PermutationGroup& ambient, const MergedJohnsonGraph& J,
                                                  std::string claim) {
  detail::Stopwatch sw;
  const auto V = J.vertex_count();
  if (ambient.order() % V != 0)
    return detail::make_report(std::move(claim), true, "|V| does not divide the ambient order", sw);
  for (const auto& g : ambient.generators())
    if (auto bad = broken_edge(g, J))
      return detail::make_report(std::move(claim), false, "ambient generator breaks an edge", sw);
  const auto found = find_regular_subgroup(ambient, V);
  if (!found)
    return detail::make_report(std::move(claim), true,
                               "no regular subgroup of order " + std::to_string(V) + " in ambient of order " +
                                   std::to_string(ambient.order()),
                               sw);
  std::string ev = "regular subgroup generated by";
  for (const auto& g : *found) ev += " " + g.to_string();
  return detail::make_report(std::move(claim), false, ev, sw);
}

/// r when H (degree n = 2k) has exactly two orbits on k-subsets of equal size,
/// so both orbits are r-regular with r = |H| / orbit size.
inline std::optional<std::uint64_t> two_orbit_regularity(const PermutationGroup& H) {
  const auto n = static_cast<int>(H.degree());
  if (n % 2 != 0) throw std::invalid_argument("lemma_two_orbit_check: degree must be even");
  const auto orbits = orbit_partition(H, ActionDomain::ksubsets(n, n / 2));
  if (orbits.size() != 2 || orbits[0].size() != orbits[1].size()) return std::nullopt;
  return H.order() / orbits[0].size();
}

inline OracleReport lemma_two_orbit_check(const PermutationGroup& H, std::uint64_t r_max, std::string claim,
                                          std::optional<std::uint64_t> r_expected = std::nullopt) {
  detail::Stopwatch sw;
  const auto r = two_orbit_regularity(H);
  std::ostringstream ev;
  ev << "n=" << H.degree() << " |H|=" << H.order() << " r=" << (r ? std::to_string(*r) : "none");
  const bool ok = r && *r <= r_max && (!r_expected || *r == *r_expected);
  return detail::make_report(std::move(claim), ok, ev.str(), sw);
}

/// All subgroups of S_n as generator lists, via closures of element pairs.
/// Complete for n <= 4 since every subgroup of S_4 is 2-generated.
inline std::vector<PermutationGroup> small_symmetric_subgroups(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("small_symmetric_subgroups: n must be 1..4");
  std::vector<Point> img(n);
  std::vector<Permutation> all;
  for (Point i = 0; i < static_cast<Point>(n); ++i) img[i] = i;
  do all.push_back(Permutation::from_images(img));
  while (std::next_permutation(img.begin(), img.end()));
  std::map<std::vector<Permutation>, PermutationGroup> found;
  for (const auto& a : all)
    for (const auto& b : all) {
      std::vector<Permutation> gens;
      if (!a.is_identity()) gens.push_back(a);
      if (!b.is_identity()) gens.push_back(b);
      auto G = gens.empty() ? PermutationGroup::trivial(n) : PermutationGroup::from_generators(gens);
      auto key = gens.empty() ? std::vector<Permutation>{all.front()} : G.elements();
      std::sort(key.begin(), key.end());
      found.emplace(std::move(key), std::move(G));
    }
  std::vector<PermutationGroup> out;
  for (auto& [key, G] : found) out.push_back(std::move(G));
  return out;
}

/// Among all subgroups of S_4, exactly the cyclic groups of order 3 have two
/// regular orbits on 2-subsets.
inline OracleReport lemma_regorbits_exhaustive_n4() {
  detail::Stopwatch sw;
  const auto subgroups = small_symmetric_subgroups(4);
  std::size_t qualifying = 0;
  bool only_c3 = true;
  for (const auto& H : subgroups) {
    const auto r = two_orbit_regularity(H);
    if (r && *r == 1) {
      ++qualifying;
      only_c3 = only_c3 && H.order() == 3;
    }
  }
  std::ostringstream ev;
  ev << "subgroups=" << subgroups.size() << " qualifying=" << qualifying << (only_c3 ? " all C3" : " not all C3");
  return detail::make_report("regorbits-n4-only-C3", subgroups.size() == 30 && qualifying == 4 && only_c3, ev.str(),
                             sw);
}

/// |G| = n(n-1) and G is transitive on ordered pairs of distinct points.
inline bool is_sharply_two_transitive(const PermutationGroup& G) {
  const std::size_t n = G.degree();
  if (n < 2 || G.order() != n * (n - 1)) return false;
  std::vector<bool> seen(n * n, false);
  std::vector<std::size_t> queue{1};
  seen[1] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t x = queue[head] / n, y = queue[head] % n;
    for (const auto& g : G.generators()) {
      const std::size_t code = std::size_t{g[x]} * n + g[y];
      if (!seen[code]) {
        seen[code] = true;
        queue.push_back(code);
      }
    }
  }
  return queue.size() == n * (n - 1);
}

/// Orbit counts on m-subsets are non-decreasing for m <= n/2.
inline bool livingstone_wagner_holds(const PermutationGroup& G) {
  try {
    orbit_counts_on_msubsets(G, static_cast<int>(G.degree()) / 2);
    return true;
  } catch (const std::logic_error&) {
    return false;
  }
}

}  // namespace mjg
