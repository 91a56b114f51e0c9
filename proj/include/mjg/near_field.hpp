#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "mjg/combinatorics.hpp"
#include "mjg/finite_field.hpp"
#include "mjg/permgroup.hpp"

namespace mjg {

struct DicksonPair {
  std::uint64_t q = 0;
  unsigned d = 0;
  std::uint64_t n = 0;
};

/// Condition (c): every r dividing d, with r prime or r = 4, also divides q - 1.
inline bool is_dickson_pair(std::uint64_t q, unsigned d) {
  if (!prime_power(q)) throw std::invalid_argument("is_dickson_pair: q is not a prime power");
  if (d == 0) throw std::invalid_argument("is_dickson_pair: d must be positive");
  for (auto r : prime_factors(d))
    if ((q - 1) % r != 0) return false;
  if (d % 4 == 0 && (q - 1) % 4 != 0) return false;
  return true;
}

/// A Dickson near-field: the additive group of GF(q^d) with g o h = g^(q^j) h,
/// where h lies in the coset of the d-th powers indexed by j.
class NearField {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 16;
  static constexpr std::uint64_t kExhaustiveLimit = 81;
  static constexpr std::uint64_t kSampledTriples = 100'000;

  static NearField build(std::uint64_t q, unsigned d) {
    if (!is_dickson_pair(q, d)) throw std::invalid_argument("build_dickson: condition (c) fails");
    const auto pp = *prime_power(q);
    std::uint64_t n = 1;
    for (unsigned i = 0; i < d; ++i) {
      n *= q;
      if (n > kMaxOrder) throw std::invalid_argument("build_dickson: order exceeds 2^16");
    }
    NearField F(FiniteField::build(static_cast<std::uint32_t>(pp.p), pp.e * d), DicksonPair{q, d, n});
    F.setup();
    F.verify_axioms();
    return F;
  }

  const FiniteField& field() const { return field_; }
  const DicksonPair& pair() const { return pair_; }
  std::uint32_t order() const { return field_.order(); }
  bool is_field() const { return pair_.d == 1; }
  /// m(i) = (q^i - 1)/(q - 1) mod d for i = 0..d-1.
  const std::vector<std::uint32_t>& m() const { return m_; }

  unsigned coset_of(FieldElement h) const {
    if (h == 0) throw std::domain_error("coset_of zero");
    return coset_[h];
  }

  FieldElement add(FieldElement a, FieldElement b) const { return field_.add(a, b); }

  FieldElement multiply(FieldElement g, FieldElement h) const {
    if (g == 0 || h == 0) return 0;
    const unsigned j = coset_[h];
    return field_.exp(std::uint64_t{field_.dlog(g)} * qpow_[j] + field_.dlog(h));
  }

  FieldElement inverse(FieldElement a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    for (unsigned j = 0; j < pair_.d; ++j) {
      const FieldElement x = field_.inv(field_.exp(std::uint64_t{field_.dlog(a)} * qpow_[j]));
      if (coset_[x] == j) return x;
    }
    throw std::logic_error("near-field element without inverse");
  }

  /// Associativity and right distributivity for one triple.
  bool check_triple(FieldElement a, FieldElement b, FieldElement c) const {
    return multiply(multiply(a, b), c) == multiply(a, multiply(b, c)) &&
           multiply(add(a, b), c) == add(multiply(a, c), multiply(b, c));
  }

  /// Throws std::logic_error on the first failing axiom.
  void verify_axioms_exhaustive() const {
    check_units();
    const auto n = order();
    for (FieldElement a = 0; a < n; ++a)
      for (FieldElement b = 0; b < n; ++b)
        for (FieldElement c = 0; c < n; ++c)
          if (!check_triple(a, b, c)) throw std::logic_error("near-field axiom fails");
  }

  void verify_axioms_sampled(std::uint64_t count, std::uint64_t seed) const {
    check_units();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<FieldElement> pick(0, order() - 1);
    for (std::uint64_t i = 0; i < count; ++i)
      if (!check_triple(pick(rng), pick(rng), pick(rng))) throw std::logic_error("near-field axiom fails");
  }

 private:
  NearField(FiniteField f, DicksonPair pair) : field_(std::move(f)), pair_(pair) {}

  FiniteField field_;
  DicksonPair pair_;
  std::vector<std::uint32_t> m_;
  std::vector<std::uint64_t> qpow_;  // q^i mod (n - 1)
  std::vector<std::uint8_t> coset_;

  void setup() {
    const unsigned d = pair_.d;
    const std::uint64_t q = pair_.q, n = pair_.n;
    if ((n - 1) % d != 0) throw std::logic_error("condition (a) fails");
    m_.resize(d);
    qpow_.resize(d);
    std::vector<int> index_of(d, -1);
    std::uint64_t mi = 0, qi = 1;
    for (unsigned i = 0; i < d; ++i) {
      m_[i] = static_cast<std::uint32_t>(mi);
      qpow_[i] = qi % (n - 1);
      if (index_of[mi] != -1) throw std::logic_error("condition (b) fails");
      index_of[mi] = static_cast<int>(i);
      mi = (mi + qi) % d;
      qi = qi * q % (n - 1);
    }
    // Closure of the twisted maps: m(i + j) = q^j m(i) + m(j) mod d, indices mod d.
    for (unsigned i = 0; i < d; ++i)
      for (unsigned j = 0; j < d; ++j)
        if (m_[(i + j) % d] != (powmod(q, j, d) * m_[i] + m_[j]) % d)
          throw std::logic_error("coset representatives are not closed");
    coset_.assign(n, 0);
    for (FieldElement h = 1; h < n; ++h) coset_[h] = static_cast<std::uint8_t>(index_of[field_.dlog(h) % d]);
  }

  void check_units() const {
    const auto n = order();
    for (FieldElement a = 0; a < n; ++a) {
      if (multiply(a, 1) != a || multiply(1, a) != a) throw std::logic_error("1 is not an identity");
      if (multiply(a, 0) != 0 || multiply(0, a) != 0) throw std::logic_error("0 does not absorb");
      if (a != 0 && (multiply(a, inverse(a)) != 1 || multiply(inverse(a), a) != 1))
        throw std::logic_error("missing inverse");
    }
  }

  void verify_axioms() const {
    if (order() <= kExhaustiveLimit)
      verify_axioms_exhaustive();
    else
      verify_axioms_sampled(kSampledTriples, pair_.n * 1000003ULL + pair_.d);
  }
};

inline NearField build_dickson(std::uint64_t q, unsigned d) { return NearField::build(q, d); }

/// The field GF(n) viewed as the untwisted near-field.
inline NearField field_as_near_field(std::uint64_t n) { return NearField::build(n, 1); }

inline FieldElement nf_multiply(const NearField& F, FieldElement g, FieldElement h) { return F.multiply(g, h); }

enum class AffineKind { AGL, AHL, AGammaL };

inline std::string to_string(AffineKind k) {
  switch (k) {
    case AffineKind::AGL: return "AGL";
    case AffineKind::AHL: return "AHL";
    case AffineKind::AGammaL: return "AGammaL";
  }
  return "?";
}

namespace detail {

/// Size of the subgroup of (F*, o) generated by `gens`.
inline std::size_t multiplicative_closure(const NearField& F, const std::vector<FieldElement>& gens) {
  std::vector<bool> seen(F.order(), false);
  std::vector<FieldElement> queue{1};
  seen[1] = true;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (FieldElement g : gens) {
      const FieldElement x = F.multiply(queue[head], g);
      if (!seen[x]) {
        seen[x] = true;
        queue.push_back(x);
      }
    }
  return queue.size();
}

}  // namespace detail

/// Multipliers a (in code order, omega or omega^2 first) whose right
/// multiplications generate F* (AGL) or its squares (AHL).
inline std::vector<FieldElement> affine_multipliers(const NearField& F, bool squares_only) {
  const auto& K = F.field();
  const std::size_t target = squares_only ? (F.order() - 1) / 2 : F.order() - 1;
  std::vector<FieldElement> gens;
  std::vector<FieldElement> candidates{squares_only ? K.mul(K.omega(), K.omega()) : K.omega()};
  for (FieldElement a = 2; a < F.order(); ++a) candidates.push_back(a);
  std::size_t size = 1;
  for (FieldElement a : candidates) {
    if (size == target) break;
    if (squares_only && K.dlog(a) % 2 != 0) continue;
    gens.push_back(a);
    const std::size_t next = detail::multiplicative_closure(F, gens);
    if (next == size) gens.pop_back();
    size = next;
  }
  if (size != target) throw std::logic_error("affine_multipliers: generation failed");
  return gens;
}

/// AGL_1(F), AHL_1(F) or AGammaL_1(F) acting on the element codes of F.
inline PermutationGroup affine_group(const NearField& F, AffineKind kind) {
  const std::uint32_t n = F.order();
  const auto& K = F.field();
  if (kind == AffineKind::AHL && n % 4 != 3) throw std::invalid_argument("affine_group: AHL needs n = 3 mod 4");
  if (kind == AffineKind::AGammaL && !F.is_field())
    throw std::invalid_argument("affine_group: AGammaL needs a field");
  std::vector<Permutation> gens;
  std::vector<Point> img(n);
  FieldElement basis = 1;
  for (unsigned i = 0; i < K.degree(); ++i, basis *= K.characteristic()) {
    for (FieldElement t = 0; t < n; ++t) img[t] = K.add(t, basis);
    gens.push_back(Permutation::from_images(img));
  }
  for (FieldElement a : affine_multipliers(F, kind == AffineKind::AHL)) {
    for (FieldElement t = 0; t < n; ++t) img[t] = F.multiply(t, a);
    gens.push_back(Permutation::from_images(img));
  }
  std::uint64_t order = std::uint64_t{n} * (n - 1);
  if (kind == AffineKind::AHL) order /= 2;
  if (kind == AffineKind::AGammaL) {
    if (K.degree() > 1) {
      for (FieldElement t = 0; t < n; ++t) img[t] = K.frobenius_power(t, 1, K.characteristic());
      gens.push_back(Permutation::from_images(img));
    }
    order *= K.degree();
  }
  auto G = PermutationGroup::from_generators(std::move(gens), order);
  if (G.order() != order) throw std::logic_error("affine_group: unexpected order");
  return G;
}

}  // namespace mjg
