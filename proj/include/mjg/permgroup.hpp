#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mjg/combinatorics.hpp"
#include "mjg/permutation.hpp"

namespace mjg {

/// The set a group acts on: the points themselves, the k-subsets of the points
/// (labelled by co-lex rank), or an explicit list of subsets. An explicit domain
/// may identify each subset with its complement; labels are then keyed by the
/// part containing point 0. Pairs of points on more than 64 points are held by
/// rank alone (C(b,2) + a for a < b), without masks.
class ActionDomain {
 public:
  enum class Kind { points, ksubsets, explicit_sets, pairs };

  static ActionDomain points(std::size_t n) {
    ActionDomain d;
    d.kind_ = Kind::points;
    d.ground_ = static_cast<int>(n);
    d.size_ = n;
    return d;
  }

  static ActionDomain ksubsets(int n, int k) {
    if (k == 2 && n > kMaxGround && n <= kMaxPairGround) {
      ActionDomain d;
      d.kind_ = Kind::pairs;
      d.ground_ = n;
      d.k_ = 2;
      d.size_ = static_cast<std::size_t>(n) * (n - 1) / 2;
      return d;
    }
    if (n < 1 || n > kMaxGround || k < 0 || k > n)
      throw std::invalid_argument("ActionDomain::ksubsets: need 0 <= k <= n <= 64");
    ActionDomain d;
    d.kind_ = Kind::ksubsets;
    d.ground_ = n;
    d.k_ = k;
    d.size_ = binomial(n, k);
    return d;
  }

  static ActionDomain explicit_sets(int n, std::vector<Mask> labels, bool complement_pairs = false) {
    if (n < 1 || n > kMaxGround) throw std::invalid_argument("ActionDomain::explicit_sets: bad ground size");
    ActionDomain d;
    d.kind_ = Kind::explicit_sets;
    d.ground_ = n;
    d.complement_pairs_ = complement_pairs;
    d.size_ = labels.size();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const Mask key = d.canonical(labels[i]);
      if (key != labels[i]) throw std::invalid_argument("ActionDomain::explicit_sets: label not canonical");
      if (!d.index_.emplace(key, static_cast<Point>(i)).second)
        throw std::invalid_argument("ActionDomain::explicit_sets: duplicate label");
    }
    d.labels_ = std::move(labels);
    return d;
  }

  Kind kind() const { return kind_; }
  std::size_t size() const { return size_; }
  int ground() const { return ground_; }
  int k() const { return k_; }
  std::span<const Mask> labels() const { return labels_; }

  /// Subset carried by a label (k-subset or explicit label).
  Mask subset_of(Point label) const {
    switch (kind_) {
      case Kind::points: return Mask{1} << label;
      case Kind::ksubsets: return colex_unrank(label, k_);
      case Kind::explicit_sets: return labels_.at(label);
      case Kind::pairs: throw std::logic_error("ActionDomain: pair domain has no masks");
    }
    return 0;
  }

  /// The pair {a, b}, a < b, with the given co-lex rank.
  static std::pair<Point, Point> unrank_pair(std::uint64_t r) {
    auto b = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(r))) / 2.0);
    while (b * (b - 1) / 2 > r) --b;
    while ((b + 1) * b / 2 <= r) ++b;
    return {static_cast<Point>(r - b * (b - 1) / 2), static_cast<Point>(b)};
  }

  static std::uint64_t rank_pair(Point a, Point b) {
    if (a > b) std::swap(a, b);
    return std::uint64_t{b} * (b - 1) / 2 + a;
  }

  /// Label of a subset, or nothing when it is not in the domain.
  std::optional<Point> label_of(Mask m) const {
    switch (kind_) {
      case Kind::points:
        if (popcount(m) != 1) return std::nullopt;
        return static_cast<Point>(std::countr_zero(m));
      case Kind::ksubsets:
        if (popcount(m) != k_ || (ground_ < 64 && (m >> ground_) != 0)) return std::nullopt;
        return static_cast<Point>(colex_rank(m));
      case Kind::explicit_sets: {
        auto it = index_.find(canonical(m));
        if (it == index_.end()) return std::nullopt;
        return it->second;
      }
      case Kind::pairs: throw std::logic_error("ActionDomain: pair domain has no masks");
    }
    return std::nullopt;
  }

  Point image(const Permutation& g, Point label) const {
    check_degree(g);
    if (kind_ == Kind::points) return g[label];
    if (kind_ == Kind::pairs) {
      const auto [a, b] = unrank_pair(label);
      return static_cast<Point>(rank_pair(g[a], g[b]));
    }
    auto img = label_of(g.act(subset_of(label)));
    if (!img) throw std::logic_error("ActionDomain: image left the domain");
    return *img;
  }

  /// Images of every label under g, indexed by label.
  std::vector<Point> image_table(const Permutation& g) const {
    check_degree(g);
    std::vector<Point> out(size_);
    switch (kind_) {
      case Kind::points:
        std::copy(g.images().begin(), g.images().end(), out.begin());
        break;
      case Kind::ksubsets: {
        Point i = 0;
        for (Mask m : all_ksubsets(ground_, k_)) out[i++] = static_cast<Point>(colex_rank(g.act(m)));
        break;
      }
      case Kind::explicit_sets:
        for (std::size_t i = 0; i < size_; ++i) out[i] = image(g, static_cast<Point>(i));
        break;
      case Kind::pairs: {
        Point i = 0;
        for (Point b = 1; b < static_cast<Point>(ground_); ++b)
          for (Point a = 0; a < b; ++a) out[i++] = static_cast<Point>(rank_pair(g[a], g[b]));
        break;
      }
    }
    return out;
  }

 private:
  Mask canonical(Mask m) const {
    if (!complement_pairs_ || (m & 1U) != 0) return m;
    return ~m & low_mask(ground_);
  }

  void check_degree(const Permutation& g) const {
    if (g.degree() != static_cast<std::size_t>(ground_))
      throw std::invalid_argument("ActionDomain: permutation degree does not match ground set");
  }

  static constexpr int kMaxPairGround = 65536;

  Kind kind_ = Kind::points;
  int ground_ = 0;
  int k_ = 0;
  std::size_t size_ = 0;
  bool complement_pairs_ = false;
  std::vector<Mask> labels_;
  std::unordered_map<Mask, Point> index_;
};

/// A permutation group held as a base and strong generating set. The chain is
/// built by deterministic Schreier-Sims: base points are the smallest points moved
/// by the generators that need them, and every Schreier generator is sifted.
class PermutationGroup {
 public:
  static constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();

  PermutationGroup() = default;

  static PermutationGroup trivial(std::size_t degree) {
    PermutationGroup g;
    g.degree_ = degree;
    return g;
  }

  /// Builds the stabilizer chain. `order_bound`, when given, must be an upper
  /// bound for the group order established by the caller; construction stops as
  /// soon as the chain reaches it (the chain order never exceeds the true order,
  /// so reaching the bound proves equality).
  static PermutationGroup from_generators(std::vector<Permutation> gens,
                                          std::optional<std::uint64_t> order_bound = std::nullopt) {
    if (gens.empty()) throw std::invalid_argument("PermutationGroup: empty generator list");
    PermutationGroup g;
    g.degree_ = gens.front().degree();
    for (const auto& s : gens)
      if (s.degree() != g.degree_) throw std::invalid_argument("PermutationGroup: generator degree mismatch");
    g.generators_ = std::move(gens);
    g.build(order_bound);
    return g;
  }

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  std::size_t base_length() const { return levels_.size(); }

  std::vector<Point> base() const {
    std::vector<Point> b;
    for (const auto& lv : levels_) b.push_back(lv.base);
    return b;
  }

  std::span<const Point> basic_orbit(std::size_t level) const { return levels_.at(level).orbit; }
  const std::vector<Permutation>& strong_generators(std::size_t level) const { return levels_.at(level).gens; }

  std::uint64_t order() const {
    std::uint64_t r = 1;
    for (const auto& lv : levels_) r = checked_mul(r, lv.orbit.size());
    return r;
  }

  /// Coset representative u with base[level] * u == point.
  Permutation transversal(std::size_t level, Point point) const { return rep(levels_.at(level), point); }

  bool contains(const Permutation& p) const {
    if (p.degree() != degree_) return false;
    auto [residue, stop] = sift(p, 0);
    return stop == levels_.size() && residue.is_identity();
  }

  /// Calls f on every element exactly once, in a fixed order.
  template <class F>
  void for_each_element(F&& f) const {
    std::vector<std::vector<Permutation>> reps(levels_.size());
    for (std::size_t l = 0; l < levels_.size(); ++l)
      for (Point x : levels_[l].orbit) reps[l].push_back(rep(levels_[l], x));
    Permutation id = Permutation::identity(degree_);
    enumerate(reps, levels_.size(), id, f);
  }

  std::vector<Permutation> elements(std::uint64_t cap = 1'000'000) const {
    if (order() > cap) throw std::length_error("PermutationGroup::elements: order exceeds cap");
    std::vector<Permutation> out;
    out.reserve(order());
    for_each_element([&](const Permutation& p) { out.push_back(p); });
    return out;
  }

 private:
  struct Level {
    Point base = 0;
    std::vector<Permutation> gens;
    std::vector<Point> orbit;
    std::vector<std::uint32_t> position;  // point -> index in orbit, kAbsent outside
    std::vector<std::uint32_t> via_gen;   // generator used to reach the point
    std::vector<Point> parent;            // predecessor in the Schreier tree
    std::vector<Permutation> reps;        // explicit representatives by orbit index, when affordable
  };

  static constexpr std::size_t kExplicitBudget = std::size_t{1} << 23;

  void build(std::optional<std::uint64_t> bound) {
    std::vector<Permutation> nontrivial;
    for (const auto& s : generators_)
      if (!s.is_identity()) nontrivial.push_back(s);
    if (nontrivial.empty()) return;

    for (const auto& s : nontrivial) {
      bool fixes_all = true;
      for (const auto& lv : levels_)
        if (s[lv.base] != lv.base) fixes_all = false;
      if (fixes_all) {
        Level lv;
        lv.base = static_cast<Point>(s.first_moved());
        levels_.push_back(std::move(lv));
      }
    }
    for (const auto& s : nontrivial) {
      for (auto& lv : levels_) {
        lv.gens.push_back(s);
        if (s[lv.base] != lv.base) break;
      }
    }
    for (auto& lv : levels_) compute_orbit(lv);
    if (reached(bound)) return;

    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
      bool changed = false;
      const std::size_t li = static_cast<std::size_t>(i);
      const std::vector<Point> orbit = levels_[li].orbit;
      const std::size_t ngens = levels_[li].gens.size();
      for (std::size_t xi = 0; xi < orbit.size() && !changed; ++xi) {
        const Point x = orbit[xi];
        for (std::size_t si = 0; si < ngens && !changed; ++si) {
          const Level& lv = levels_[li];
          const Permutation& s = lv.gens[si];
          const Point y = s[x];
          if (lv.via_gen[y] == si && lv.parent[y] == x) continue;  // tree edge: trivial generator
          Permutation h = rep(lv, x) * s * rep(lv, y).inverse();
          if (h.is_identity()) continue;
          auto [residue, stop] = sift(h, li + 1);
          if (stop == levels_.size() && residue.is_identity()) continue;
          if (stop == levels_.size()) {
            Level fresh;
            fresh.base = static_cast<Point>(residue.first_moved());
            levels_.push_back(std::move(fresh));
          }
          for (std::size_t l = li + 1; l <= stop; ++l) {
            levels_[l].gens.push_back(residue);
            compute_orbit(levels_[l]);
          }
          if (reached(bound)) return;
          i = static_cast<std::ptrdiff_t>(stop);
          changed = true;
        }
      }
      if (!changed) --i;
    }
  }

  bool reached(std::optional<std::uint64_t> bound) const {
    if (!bound) return false;
    const std::uint64_t o = order();
    if (o > *bound) throw std::logic_error("PermutationGroup: order bound exceeded");
    return o == *bound;
  }

  void compute_orbit(Level& lv) const {
    lv.orbit.clear();
    lv.reps.clear();
    lv.position.assign(degree_, kAbsent);
    lv.via_gen.assign(degree_, kAbsent);
    lv.parent.assign(degree_, 0);
    lv.orbit.push_back(lv.base);
    lv.position[lv.base] = 0;
    for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
      const Point x = lv.orbit[head];
      for (std::size_t si = 0; si < lv.gens.size(); ++si) {
        const Point y = lv.gens[si][x];
        if (lv.position[y] != kAbsent) continue;
        lv.position[y] = static_cast<std::uint32_t>(lv.orbit.size());
        lv.via_gen[y] = static_cast<std::uint32_t>(si);
        lv.parent[y] = x;
        lv.orbit.push_back(y);
      }
    }
    if (lv.orbit.size() * degree_ <= kExplicitBudget) {
      lv.reps.reserve(lv.orbit.size());
      lv.reps.push_back(Permutation::identity(degree_));
      for (std::size_t j = 1; j < lv.orbit.size(); ++j) {
        const Point y = lv.orbit[j];
        lv.reps.push_back(lv.reps[lv.position[lv.parent[y]]] * lv.gens[lv.via_gen[y]]);
      }
    }
  }

  Permutation rep(const Level& lv, Point y) const {
    if (lv.position[y] == kAbsent) throw std::logic_error("PermutationGroup: point outside basic orbit");
    if (!lv.reps.empty()) return lv.reps[lv.position[y]];
    std::vector<std::uint32_t> path;
    for (Point z = y; z != lv.base; z = lv.parent[z]) path.push_back(lv.via_gen[z]);
    Permutation u = Permutation::identity(degree_);
    for (auto it = path.rbegin(); it != path.rend(); ++it) u = u * lv.gens[*it];
    return u;
  }

  std::pair<Permutation, std::size_t> sift(Permutation h, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
      const Level& lv = levels_[l];
      const Point y = h[lv.base];
      if (lv.position[y] == kAbsent) return {std::move(h), l};
      if (y != lv.base) h = h * rep(lv, y).inverse();
    }
    return {std::move(h), levels_.size()};
  }

  template <class F>
  static void enumerate(const std::vector<std::vector<Permutation>>& reps, std::size_t level,
                        const Permutation& acc, F& f) {
    if (level == 0) {
      f(acc);
      return;
    }
    for (const auto& u : reps[level - 1]) enumerate(reps, level - 1, acc * u, f);
  }

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
};

/// Checked entry point matching the library's naming: builds the chain for gens.
inline PermutationGroup stabilizer_chain(std::vector<Permutation> gens) {
  return PermutationGroup::from_generators(std::move(gens));
}

/// Images of each generator of G on the labels of `dom`.
inline std::vector<std::vector<Point>> generator_tables(const PermutationGroup& G, const ActionDomain& dom) {
  std::vector<std::vector<Point>> tables;
  tables.reserve(G.generators().size());
  for (const auto& s : G.generators()) tables.push_back(dom.image_table(s));
  return tables;
}

/// Orbit of a label with a Schreier tree over the generators of G.
class OrbitResult {
 public:
  OrbitResult(const PermutationGroup& G, std::vector<std::vector<Point>> tables, std::size_t size, Point start)
      : generators_(G.generators()), degree_(G.degree()), tables_(std::move(tables)) {
    if (start >= size) throw std::out_of_range("orbit: label outside the domain");
    position_.assign(size, PermutationGroup::kAbsent);
    via_.assign(size, PermutationGroup::kAbsent);
    parent_.assign(size, 0);
    points_.push_back(start);
    position_[start] = 0;
    for (std::size_t head = 0; head < points_.size(); ++head) {
      const Point x = points_[head];
      for (std::size_t si = 0; si < tables_.size(); ++si) {
        const Point y = tables_[si][x];
        if (position_[y] != PermutationGroup::kAbsent) continue;
        position_[y] = static_cast<std::uint32_t>(points_.size());
        via_[y] = static_cast<std::uint32_t>(si);
        parent_[y] = x;
        points_.push_back(y);
      }
    }
  }

  std::span<const Point> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  Point start() const { return points_.front(); }
  bool contains(Point y) const { return y < position_.size() && position_[y] != PermutationGroup::kAbsent; }

  /// A group element (on the underlying points) taking start() to y.
  Permutation transversal(Point y) const {
    if (!contains(y)) throw std::out_of_range("orbit: label not in orbit");
    std::vector<std::uint32_t> path;
    for (Point z = y; z != points_.front(); z = parent_[z]) path.push_back(via_[z]);
    Permutation u = Permutation::identity(degree_);
    for (auto it = path.rbegin(); it != path.rend(); ++it) u = u * generators_[*it];
    return u;
  }

 private:
  std::vector<Permutation> generators_;
  std::size_t degree_;
  std::vector<std::vector<Point>> tables_;
  std::vector<Point> points_;
  std::vector<std::uint32_t> position_;
  std::vector<std::uint32_t> via_;
  std::vector<Point> parent_;
};

inline OrbitResult orbit(const PermutationGroup& G, Point x, const ActionDomain& dom) {
  if (x >= dom.size()) throw std::out_of_range("orbit: label outside the domain");
  return OrbitResult(G, generator_tables(G, dom), dom.size(), x);
}

/// All orbits on the domain, each sorted, listed by smallest label.
inline std::vector<std::vector<Point>> orbit_partition(const std::vector<std::vector<Point>>& tables,
                                                       std::size_t size) {
  std::vector<std::uint32_t> owner(size, PermutationGroup::kAbsent);
  std::vector<std::vector<Point>> orbits;
  for (Point x = 0; x < size; ++x) {
    if (owner[x] != PermutationGroup::kAbsent) continue;
    const auto id = static_cast<std::uint32_t>(orbits.size());
    std::vector<Point> orb{x};
    owner[x] = id;
    for (std::size_t head = 0; head < orb.size(); ++head) {
      for (const auto& t : tables) {
        const Point y = t[orb[head]];
        if (owner[y] == PermutationGroup::kAbsent) {
          owner[y] = id;
          orb.push_back(y);
        }
      }
    }
    std::sort(orb.begin(), orb.end());
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

inline std::vector<std::vector<Point>> orbit_partition(const PermutationGroup& G, const ActionDomain& dom) {
  return orbit_partition(generator_tables(G, dom), dom.size());
}

/// The group induced by G on `dom`, as a permutation group of degree dom.size().
/// The order of G bounds the induced order; when the chain reaches it the action
/// is faithful, otherwise the full chain computes the quotient order.
inline PermutationGroup induced_action(const PermutationGroup& G, const ActionDomain& dom) {
  std::vector<Permutation> gens;
  for (auto& t : generator_tables(G, dom)) gens.push_back(Permutation::trusted(std::move(t)));
  if (gens.empty()) return PermutationGroup::trivial(dom.size());
  return PermutationGroup::from_generators(std::move(gens), G.order());
}

inline PermutationGroup induced_subset_action(const PermutationGroup& G, int k) {
  const auto n = static_cast<int>(G.degree());
  if (k < 1 || k > n) throw std::invalid_argument("induced_subset_action: k out of range");
  return induced_action(G, ActionDomain::ksubsets(n, k));
}

namespace detail {
inline constexpr std::uint64_t kSweepBudgetPoints = 50'000'000;
inline constexpr std::uint64_t kSweepBudgetSets = 4'000'000;
}  // namespace detail

/// r such that G is transitive on the domain with every label stabilizer of
/// order r (so r * |domain| == |G|); nothing when G is intransitive. When the
/// element sweep is affordable the stabilizer order is counted at every label.
inline std::optional<std::uint64_t> regularity_degree(const PermutationGroup& G, const ActionDomain& dom) {
  if (dom.size() == 0) throw std::invalid_argument("regularity_degree: empty domain");
  auto tables = generator_tables(G, dom);
  OrbitResult orb(G, std::move(tables), dom.size(), 0);
  if (orb.size() != dom.size()) return std::nullopt;
  const std::uint64_t order = G.order();
  if (order % dom.size() != 0) throw std::logic_error("regularity_degree: orbit size does not divide |G|");
  const std::uint64_t r = order / dom.size();

  const std::uint64_t budget = dom.kind() == ActionDomain::Kind::points ? detail::kSweepBudgetPoints
                                                                        : detail::kSweepBudgetSets;
  if (order <= budget / dom.size()) {
    std::vector<std::uint64_t> fixers(dom.size(), 0);
    const bool direct = dom.kind() == ActionDomain::Kind::points;
    G.for_each_element([&](const Permutation& g) {
      if (direct) {
        for (Point x = 0; x < dom.size(); ++x)
          if (g[x] == x) ++fixers[x];
      } else {
        const auto img = dom.image_table(g);
        for (Point x = 0; x < dom.size(); ++x)
          if (img[x] == x) ++fixers[x];
      }
    });
    for (auto c : fixers)
      if (c != r) throw std::logic_error("regularity_degree: stabilizer orders differ across the orbit");
  }
  return r;
}

/// Number of orbits of G on m-subsets for m = 1..m_max. The sequence is
/// non-decreasing for m <= n/2; a decrease is reported as std::logic_error.
inline std::vector<std::size_t> orbit_counts_on_msubsets(const PermutationGroup& G, int m_max) {
  const auto n = static_cast<int>(G.degree());
  if (m_max < 0 || 2 * m_max > n) throw std::invalid_argument("orbit_counts_on_msubsets: need m_max <= n/2");
  std::vector<std::size_t> counts;
  for (int m = 1; m <= m_max; ++m) {
    const auto dom = ActionDomain::ksubsets(n, m);
    counts.push_back(orbit_partition(G, dom).size());
    if (counts.size() >= 2 && counts.back() < counts[counts.size() - 2])
      throw std::logic_error("orbit_counts_on_msubsets: Livingstone-Wagner monotonicity violated");
  }
  return counts;
}

}  // namespace mjg
