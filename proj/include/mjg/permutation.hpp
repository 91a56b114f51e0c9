#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mjg/combinatorics.hpp"

namespace mjg {

using Point = std::uint32_t;

/// A bijection on {0, ..., n-1}. Products compose left to right:
/// x * (p * q) == (x * p) * q, i.e. apply p first.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree) {
    Permutation p;
    p.images_.resize(degree);
    std::iota(p.images_.begin(), p.images_.end(), Point{0});
    return p;
  }

  /// Throws std::invalid_argument unless `images` is a bijection on {0..n-1}.
  static Permutation from_images(std::vector<Point> images) {
    std::vector<bool> seen(images.size(), false);
    for (Point x : images) {
      if (x >= images.size() || seen[x])
        throw std::invalid_argument("Permutation: images are not a bijection");
      seen[x] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  /// Builds from disjoint cycles of 0-based points.
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles) {
    std::vector<std::vector<Point>> cs;
    for (auto c : cycles) cs.emplace_back(c);
    return from_cycles(degree, cs);
  }

  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    std::vector<bool> used(degree, false);
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= degree || used[c[i]]) throw std::invalid_argument("Permutation: bad cycle");
        used[c[i]] = true;
        img[c[i]] = c[(i + 1) % c.size()];
      }
    }
    return from_images(std::move(img));
  }

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
    return r;
  }

  /// Smallest point moved, or degree() when this is the identity.
  std::size_t first_moved() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return i;
    return images_.size();
  }

  std::uint64_t order() const {
    std::uint64_t ord = 1;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    return ord;
  }

  Mask act(Mask m) const {
    Mask out = 0;
    while (m != 0) {
      out |= Mask{1} << images_[static_cast<std::size_t>(std::countr_zero(m))];
      m &= m - 1;
    }
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

  /// Image-list constructor for callers that already guarantee bijectivity.
  static Permutation trusted(std::vector<Point> images) {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i != 0) s += ",";
      s += std::to_string(images_[i] + 1);
    }
    return s + "]";
  }

 private:
  std::vector<Point> images_;
};

/// Left-to-right product: apply p, then q. Throws on degree mismatch.
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<Point> img(p.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = q[p[static_cast<Point>(i)]];
  return Permutation::trusted(std::move(img));
}

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

inline Permutation power(const Permutation& p, std::uint64_t e) {
  Permutation result = Permutation::identity(p.degree());
  Permutation base = p;
  while (e > 0) {
    if (e & 1U) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

/// Image of a subset (bitmask over points) under p. Requires degree <= 64.
inline Mask act_on_subset(const Permutation& p, Mask subset) {
  if (p.degree() > static_cast<std::size_t>(kMaxGround))
    throw std::invalid_argument("act_on_subset: degree exceeds 64");
  if (p.degree() < 64 && (subset >> p.degree()) != 0)
    throw std::invalid_argument("act_on_subset: subset outside {0..n-1}");
  return p.act(subset);
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Point x : p.images()) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

}  // namespace mjg
