#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mjg/combinatorics.hpp"
#include "mjg/permutation.hpp"

namespace mjg {

/// A set I of distances, bit i set for i in I (1 <= i <= k).
using IndexSet = std::uint32_t;

inline IndexSet full_index_set(int k) { return static_cast<IndexSet>(((1ULL << (k + 1)) - 1) & ~1ULL); }

inline std::vector<int> index_list(IndexSet I) {
  std::vector<int> out;
  for (int i = 1; i < 32; ++i)
    if ((I >> i) & 1U) out.push_back(i);
  return out;
}

inline IndexSet index_set(std::initializer_list<int> items) {
  IndexSet I = 0;
  for (int i : items) I |= IndexSet{1} << i;
  return I;
}

/// Parses "1,4" (1-based distances). Throws std::invalid_argument on bad input.
inline IndexSet parse_index_set(const std::string& text, int k) {
  IndexSet I = 0;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("I: not an integer list: " + text);
    }
    if (used != item.size()) throw std::invalid_argument("I: not an integer list: " + text);
    if (v < 1 || v > k) throw std::invalid_argument("I: element outside 1..k: " + item);
    I |= IndexSet{1} << v;
  }
  if (I == 0) throw std::invalid_argument("I must be nonempty");
  return I;
}

inline std::string format_index_set(IndexSet I) {
  std::string s = "{";
  for (int i : index_list(I)) s += (s.size() > 1 ? "," : "") + std::to_string(i);
  return s + "}";
}

/// I' = I \ {k}.
inline IndexSet index_prime(IndexSet I, int k) { return I & ~(IndexSet{1} << k); }

/// I'' = {k - i : i in I'}.
inline IndexSet index_double_prime(IndexSet I, int k) {
  IndexSet out = 0;
  for (int i : index_list(index_prime(I, k))) out |= IndexSet{1} << (k - i);
  return out;
}

/// k + 1 - I.
inline IndexSet index_reflect(IndexSet I, int k) {
  IndexSet out = 0;
  for (int i : index_list(I)) out |= IndexSet{1} << (k + 1 - i);
  return out;
}

inline void check_parameters(int n, int k, IndexSet I) {
  if (k < 2 || 2 * k > n || n > kMaxGround)
    throw std::invalid_argument("need 2 <= k <= n/2 and n <= 64");
  if (I == 0 || (I & ~full_index_set(k)) != 0) throw std::invalid_argument("need nonempty I within {1..k}");
}

/// Co-lex rank of a k-subset; throws when the mask is not a k-subset of n points.
inline std::uint64_t subset_rank(int n, int k, Mask K) {
  if (popcount(K) != k || (n < 64 && (K >> n) != 0)) throw std::invalid_argument("subset_rank: not a k-subset");
  return colex_rank(K);
}

inline Mask subset_unrank(int n, int k, std::uint64_t rank) {
  if (rank >= binomial(n, k)) throw std::out_of_range("subset_unrank: rank out of range");
  return colex_unrank(rank, k);
}

/// J(n,k)_I: k-subsets of n points, adjacent when k - |K cap K'| lies in I.
/// Vertices are numbered by co-lex rank.
class MergedJohnsonGraph {
 public:
  static constexpr std::uint64_t kMaterializeLimit = 1'000'000;

  MergedJohnsonGraph(int n, int k, IndexSet I) : n_(n), k_(k), I_(I) {
    check_parameters(n, k, I);
    vertices_ = all_ksubsets(n, k);
  }

  int n() const { return n_; }
  int k() const { return k_; }
  IndexSet I() const { return I_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  Mask vertex(std::size_t v) const { return vertices_.at(v); }
  const std::vector<Mask>& vertices() const { return vertices_; }
  std::uint32_t index_of(Mask K) const { return static_cast<std::uint32_t>(subset_rank(n_, k_, K)); }

  bool adjacent_sets(Mask K, Mask L) const {
    if (K == L) throw std::invalid_argument("adjacent: K equals K'");
    return ((I_ >> (k_ - popcount(K & L))) & 1U) != 0;
  }

  bool adjacent(std::size_t u, std::size_t v) const { return u != v && adjacent_sets(vertices_[u], vertices_[v]); }

  /// Sum over i in I of C(k,i) C(n-k,i).
  std::uint64_t degree_formula() const {
    std::uint64_t d = 0;
    for (int i : index_list(I_)) d += binomial(k_, i) * binomial(n_ - k_, i);
    return d;
  }

  /// Calls f(neighbor_mask) for every neighbor of K, by swapping i points out for i points in.
  template <class F>
  void for_each_neighbor_set(Mask K, F&& f) const {
    const Mask outside = ~K & low_mask(n_);
    for (int i : index_list(I_)) {
      for (Mask out : submasks(K, i))
        for (Mask in : submasks(outside, i)) f((K & ~out) | in);
    }
  }

  template <class F>
  void for_each_neighbor(std::size_t v, F&& f) const {
    for_each_neighbor_set(vertices_[v], [&](Mask L) { f(static_cast<std::uint32_t>(colex_rank(L))); });
  }

  std::vector<std::uint32_t> neighbors(std::size_t v) const {
    std::vector<std::uint32_t> out;
    for_each_neighbor(v, [&](std::uint32_t u) { out.push_back(u); });
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Edges (u, v) with u < v, sorted.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const {
    if (vertex_count() > kMaterializeLimit) throw std::invalid_argument("edges: too many vertices to materialize");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::size_t v = 0; v < vertex_count(); ++v)
      for (auto u : neighbors(v))
        if (v < u) out.emplace_back(static_cast<std::uint32_t>(v), u);
    return out;
  }

 private:
  /// All submasks of `from` with exactly `count` bits.
  static std::vector<Mask> submasks(Mask from, int count) {
    std::vector<int> bits;
    for (Mask m = from; m != 0; m &= m - 1) bits.push_back(std::countr_zero(m));
    std::vector<Mask> out;
    if (count > static_cast<int>(bits.size())) return out;
    for (Mask sel : all_ksubsets(static_cast<int>(bits.size()), count)) {
      Mask m = 0;
      for (Mask s = sel; s != 0; s &= s - 1) m |= Mask{1} << bits[std::countr_zero(s)];
      out.push_back(m);
    }
    return out;
  }

  int n_;
  int k_;
  IndexSet I_;
  std::vector<Mask> vertices_;
};

inline MergedJohnsonGraph build_graph(int n, int k, IndexSet I) { return MergedJohnsonGraph(n, k, I); }

inline bool adjacent(int n, int k, IndexSet I, Mask K, Mask L) {
  check_parameters(n, k, I);
  if (popcount(K) != k || popcount(L) != k) throw std::invalid_argument("adjacent: not k-subsets");
  if (K == L) throw std::invalid_argument("adjacent: K equals K'");
  return ((I >> (k - popcount(K & L))) & 1U) != 0;
}

struct GraphStats {
  std::uint64_t degree = 0;
  std::uint64_t edge_count = 0;
  bool connected = false;
  std::size_t component_count = 0;
};

inline GraphStats graph_stats(const MergedJohnsonGraph& J) {
  const std::size_t V = J.vertex_count();
  GraphStats st;
  std::vector<std::uint32_t> comp(V, UINT32_MAX);
  std::uint64_t degree_sum = 0;
  bool first = true;
  for (std::size_t s = 0; s < V; ++s) {
    if (comp[s] != UINT32_MAX) continue;
    const auto c = static_cast<std::uint32_t>(st.component_count++);
    std::vector<std::uint32_t> queue{static_cast<std::uint32_t>(s)};
    comp[s] = c;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::uint64_t deg = 0;
      J.for_each_neighbor(queue[head], [&](std::uint32_t u) {
        ++deg;
        if (comp[u] == UINT32_MAX) {
          comp[u] = c;
          queue.push_back(u);
        }
      });
      if (first) st.degree = deg;
      if (deg != st.degree) throw std::logic_error("graph_stats: graph is not regular");
      first = false;
      degree_sum += deg;
    }
  }
  st.edge_count = degree_sum / 2;
  st.connected = st.component_count == 1;
  return st;
}

/// BFS distance from K to L in J(n,k)_1; throws std::logic_error when it differs from k - |K cap L|.
inline int johnson_distance_check(int n, int k, Mask K, Mask L) {
  MergedJohnsonGraph J(n, k, index_set({1}));
  const auto src = J.index_of(K), dst = J.index_of(L);
  std::vector<int> dist(J.vertex_count(), -1);
  std::vector<std::uint32_t> queue{src};
  dist[src] = 0;
  for (std::size_t head = 0; head < queue.size() && dist[dst] < 0; ++head)
    J.for_each_neighbor(queue[head], [&](std::uint32_t u) {
      if (dist[u] < 0) {
        dist[u] = dist[queue[head]] + 1;
        queue.push_back(u);
      }
    });
  if (dist[dst] != k - popcount(K & L)) throw std::logic_error("johnson_distance_check: BFS disagrees with formula");
  return dist[dst];
}

/// Unordered pair of complementary halves of m points, keyed by the part containing point 0.
struct Equipartition {
  int m = 0;
  Mask key = 0;

  Mask other() const { return ~key & low_mask(m); }
  friend bool operator==(const Equipartition&, const Equipartition&) = default;
};

inline Equipartition make_equipartition(int m, Mask part) {
  if (m % 2 != 0 || m > kMaxGround || popcount(part) != m / 2 || (m < 64 && (part >> m) != 0))
    throw std::invalid_argument("make_equipartition: not a half of an even ground set");
  return Equipartition{m, (part & 1U) != 0 ? part : (~part & low_mask(m))};
}

/// All equipartitions of m points, ordered by co-lex rank of their keys.
inline std::vector<Equipartition> all_equipartitions(int m) {
  std::vector<Equipartition> out;
  for (Mask K : all_ksubsets(m, m / 2))
    if ((K & 1U) != 0) out.push_back(Equipartition{m, K});
  return out;
}

/// For odd n and k = (n-1)/2: K maps to {K + {n}, N \ K} on n + 1 points (point n is the new one).
inline Equipartition equipartition_bijection(int n, Mask K) {
  if (n % 2 == 0 || popcount(K) != (n - 1) / 2 || (K >> n) != 0)
    throw std::invalid_argument("equipartition_bijection: need odd n and a ((n-1)/2)-subset");
  return make_equipartition(n + 1, K | (Mask{1} << n));
}

inline Mask equipartition_inverse(const Equipartition& e) {
  if (e.m % 2 != 0 || e.m < 2) throw std::invalid_argument("equipartition_inverse: bad ground size");
  const Mask extra = Mask{1} << (e.m - 1);
  const Mask part = (e.key & extra) != 0 ? e.key : e.other();
  return part & ~extra;
}

/// Simple graph on at most 64 vertices, rows as bitmasks.
class SimpleGraph {
 public:
  explicit SimpleGraph(int order) : rows_(static_cast<std::size_t>(order), 0) {
    if (order < 0 || order > kMaxGround) throw std::invalid_argument("SimpleGraph: order must be <= 64");
  }

  static SimpleGraph from_edges(int order, const std::vector<std::pair<int, int>>& edges) {
    SimpleGraph g(order);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  static SimpleGraph complete(int order) {
    SimpleGraph g(order);
    for (int u = 0; u < order; ++u)
      for (int v = u + 1; v < order; ++v) g.add_edge(u, v);
    return g;
  }

  static SimpleGraph cycle(int order) {
    SimpleGraph g(order);
    for (int u = 0; u < order; ++u) g.add_edge(u, (u + 1) % order);
    return g;
  }

  /// `copies` disjoint copies of `part`.
  static SimpleGraph disjoint_copies(const SimpleGraph& part, int copies) {
    SimpleGraph g(part.order() * copies);
    for (int c = 0; c < copies; ++c)
      for (int u = 0; u < part.order(); ++u)
        for (int v = u + 1; v < part.order(); ++v)
          if (part.has_edge(u, v)) g.add_edge(c * part.order() + u, c * part.order() + v);
    return g;
  }

  static SimpleGraph from_johnson(const MergedJohnsonGraph& J) {
    if (J.vertex_count() > static_cast<std::size_t>(kMaxGround))
      throw std::invalid_argument("SimpleGraph: Johnson graph has more than 64 vertices");
    SimpleGraph g(static_cast<int>(J.vertex_count()));
    for (auto [u, v] : J.edges()) g.add_edge(static_cast<int>(u), static_cast<int>(v));
    return g;
  }

  int order() const { return static_cast<int>(rows_.size()); }
  Mask row(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  bool has_edge(int u, int v) const { return ((rows_[static_cast<std::size_t>(u)] >> v) & 1U) != 0; }

  void add_edge(int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= order() || v >= order()) throw std::invalid_argument("add_edge: bad edge");
    rows_[static_cast<std::size_t>(u)] |= Mask{1} << v;
    rows_[static_cast<std::size_t>(v)] |= Mask{1} << u;
  }

 private:
  std::vector<Mask> rows_;
};

/// (sorted degree multiset, edge count, triangle count) of the subgraph induced on `subset`.
using SubgraphFingerprint = std::tuple<std::vector<int>, int, int>;

inline SubgraphFingerprint subgraph_fingerprint(const SimpleGraph& g, Mask subset) {
  std::vector<int> verts;
  for (Mask m = subset; m != 0; m &= m - 1) verts.push_back(std::countr_zero(m));
  std::vector<int> degrees;
  int twice_edges = 0, triangles = 0;
  for (int v : verts) {
    const Mask nb = g.row(v) & subset;
    degrees.push_back(popcount(nb));
    twice_edges += popcount(nb);
    for (int u : verts)
      if (u > v && g.has_edge(u, v)) triangles += popcount(nb & g.row(u) & subset & ~low_mask(u + 1));
  }
  std::sort(degrees.begin(), degrees.end());
  return {degrees, twice_edges / 2, triangles};
}

/// True when the fingerprint separates the isomorphism classes of graphs on `m`
/// vertices (checked by brute force over all labelled graphs); m <= 4.
inline bool fingerprint_is_complete(int m) {
  if (m < 1 || m > 4) throw std::invalid_argument("fingerprint_is_complete: m must be 1..4");
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) slots.emplace_back(u, v);
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::map<SubgraphFingerprint, std::set<unsigned>> classes_by_print;
  std::set<unsigned> canon_all;
  for (unsigned code = 0; code < (1U << slots.size()); ++code) {
    SimpleGraph g(m);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((code >> s) & 1U) g.add_edge(slots[s].first, slots[s].second);
    // Canonical label: least edge code over all relabellings.
    unsigned canon = ~0U;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      unsigned c = 0;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        const auto [u, v] = slots[s];
        if (g.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) c |= 1U << s;
      }
      canon = std::min(canon, c);
    } while (std::next_permutation(perm.begin(), perm.end()));
    canon_all.insert(canon);
    classes_by_print[subgraph_fingerprint(g, low_mask(m))].insert(canon);
  }
  for (const auto& [print, classes] : classes_by_print)
    if (classes.size() != 1) return false;
  static constexpr std::array<std::size_t, 5> kClassCounts{0, 1, 2, 4, 11};
  return canon_all.size() == kClassCounts[static_cast<std::size_t>(m)];
}

/// Number of isomorphism classes of induced m-vertex subgraphs, m in {3, 4}.
inline std::size_t induced_subgraph_classes(const SimpleGraph& g, int m) {
  if (m != 3 && m != 4) throw std::invalid_argument("induced_subgraph_classes: m must be 3 or 4");
  static const bool complete = fingerprint_is_complete(3) && fingerprint_is_complete(4);
  if (!complete) throw std::logic_error("induced_subgraph_classes: fingerprint is not complete");
  if (m > g.order()) return 0;
  std::set<SubgraphFingerprint> prints;
  for (Mask S : all_ksubsets(g.order(), m)) prints.insert(subgraph_fingerprint(g, S));
  return prints.size();
}

/// "u v" per line, 1-based vertex ranks.
inline std::string edge_list_text(const MergedJohnsonGraph& J) {
  std::string out;
  for (auto [u, v] : J.edges()) out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

inline std::string dimacs_text(const MergedJohnsonGraph& J) {
  const auto edges = J.edges();
  std::string out = "c J(" + std::to_string(J.n()) + "," + std::to_string(J.k()) + ")_" +
                    format_index_set(J.I()) + "\np edge " + std::to_string(J.vertex_count()) + " " +
                    std::to_string(edges.size()) + "\n";
  for (auto [u, v] : edges) out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

/// Permutation of the vertices induced by a permutation of the n points.
inline Permutation vertex_permutation(const MergedJohnsonGraph& J, const Permutation& g) {
  if (g.degree() != static_cast<std::size_t>(J.n())) throw std::invalid_argument("vertex_permutation: degree mismatch");
  std::vector<Point> img(J.vertex_count());
  for (std::size_t v = 0; v < img.size(); ++v) img[v] = static_cast<Point>(colex_rank(g.act(J.vertex(v))));
  return Permutation::from_images(std::move(img));
}

/// K maps to N \ K on the vertices of J(2k, k)_I.
inline Permutation complementation(const MergedJohnsonGraph& J) {
  if (J.n() != 2 * J.k()) throw std::invalid_argument("complementation: need n = 2k");
  std::vector<Point> img(J.vertex_count());
  for (std::size_t v = 0; v < img.size(); ++v)
    img[v] = static_cast<Point>(colex_rank(~J.vertex(v) & low_mask(J.n())));
  return Permutation::from_images(std::move(img));
}

}  // namespace mjg
