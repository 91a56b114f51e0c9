#include "mjg/finite_field.hpp"

#include <utility>
#include <vector>

#include "gtest/gtest.h"

namespace mjg {
namespace {

using Coeffs = std::vector<std::uint32_t>;

// Schoolbook product of coefficient vectors reduced by the monic modulus.
Coeffs oracle_mul(const Coeffs& a, const Coeffs& b, const Coeffs& mod, std::uint32_t p) {
  const std::size_t e = a.size();
  std::vector<std::uint64_t> prod(2 * e, 0);
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  for (std::size_t d = 2 * e; d-- > e;) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= e; ++i) prod[d - e + i] = (prod[d - e + i] + (p - c) * mod[i]) % p;
  }
  Coeffs out(e);
  for (std::size_t i = 0; i < e; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

std::uint64_t eval(const Coeffs& f, std::uint64_t x, std::uint32_t p) {
  std::uint64_t r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = (r * x + f[i]) % p;
  return r;
}

const std::vector<std::pair<std::uint32_t, unsigned>> kSmallFields = {
    {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1},
    {2, 4}, {5, 2}, {3, 3}, {2, 5}, {7, 2}, {2, 6}, {3, 4}};

TEST(FiniteFieldTest, GF8UsesPinnedModulus) {
  auto F = build_field(2, 3);
  EXPECT_EQ(F.modulus(), (Coeffs{1, 1, 0, 1}));
  const FieldElement t = F.from_coeffs({0, 1, 0});
  EXPECT_EQ(F.mul(F.mul(t, t), t), F.from_coeffs({1, 1, 0}));
  EXPECT_EQ(F.omega(), t);
  EXPECT_EQ(F.dlog(F.from_coeffs({1, 1, 0})), 3U);
  EXPECT_EQ(F.to_coeffs(F.add(t, 1)), (Coeffs{1, 1, 0}));
}

TEST(FiniteFieldTest, PrimeFieldOmega) {
  auto F = build_field(5, 1);
  EXPECT_EQ(F.omega(), 2U);
  EXPECT_EQ(F.mul(3, 4), 2U);
  EXPECT_EQ(F.add(3, 4), 2U);
}

TEST(FiniteFieldTest, GF9OmegaOrder) {
  auto F = build_field(3, 2);
  const auto w = F.omega();
  EXPECT_EQ(F.pow(w, 8), 1U);
  EXPECT_EQ(F.pow(w, 4), F.neg(1));
  for (unsigned k = 1; k < 8; ++k) EXPECT_NE(F.pow(w, k), 1U);
  for (FieldElement a = 1; a < 9; ++a) EXPECT_EQ(F.pow(a, 8), 1U);
}

TEST(FiniteFieldTest, ModulusIsLeastIrreducibleForCubicsAndBelow) {
  for (auto [p, e] : kSmallFields) {
    if (e > 3 || (p == 2 && e == 3)) continue;
    auto F = build_field(p, e);
    // For degree <= 3, irreducible iff no root in GF(p).
    Coeffs expected;
    std::uint64_t count = 1;
    for (unsigned i = 0; i < e; ++i) count *= p;
    for (std::uint64_t low = 0; low < count && expected.empty(); ++low) {
      Coeffs f(e + 1);
      std::uint64_t v = low;
      for (unsigned i = 0; i < e; ++i, v /= p) f[i] = static_cast<std::uint32_t>(v % p);
      f[e] = 1;
      bool root = false;
      for (std::uint64_t x = 0; x < p; ++x) root = root || eval(f, x, p) == 0;
      if (!root || e == 1) expected = f;
    }
    EXPECT_EQ(F.modulus(), expected) << p << "^" << e;
  }
}

TEST(FiniteFieldTest, MultiplicationMatchesSchoolbookOracle) {
  for (auto [p, e] : kSmallFields) {
    auto F = build_field(p, e);
    for (FieldElement a = 0; a < F.order(); ++a)
      for (FieldElement b = 0; b < F.order(); ++b)
        ASSERT_EQ(F.to_coeffs(F.mul(a, b)), oracle_mul(F.to_coeffs(a), F.to_coeffs(b), F.modulus(), p))
            << p << "^" << e << " " << a << "*" << b;
  }
}

TEST(FiniteFieldTest, AdditionIsCoefficientwise) {
  for (auto [p, e] : kSmallFields) {
    auto F = build_field(p, e);
    for (FieldElement a = 0; a < F.order(); ++a)
      for (FieldElement b = 0; b < F.order(); ++b) {
        const auto ca = F.to_coeffs(a), cb = F.to_coeffs(b), cs = F.to_coeffs(F.add(a, b));
        for (unsigned i = 0; i < e; ++i) ASSERT_EQ(cs[i], (ca[i] + cb[i]) % p);
      }
  }
}

TEST(FiniteFieldTest, FieldAxiomsExhaustive) {
  for (auto [p, e] : kSmallFields) {
    auto F = build_field(p, e);
    const auto n = F.order();
    for (FieldElement a = 0; a < n; ++a) {
      ASSERT_EQ(F.add(a, 0), a);
      ASSERT_EQ(F.mul(a, 1), a);
      ASSERT_EQ(F.add(a, F.neg(a)), 0U);
      if (a != 0) ASSERT_EQ(F.mul(a, F.inv(a)), 1U);
      for (FieldElement b = 0; b < n; ++b) {
        ASSERT_EQ(F.mul(a, b), F.mul(b, a));
        for (FieldElement c = 0; c < n; ++c) {
          ASSERT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
          ASSERT_EQ(F.add(F.add(a, b), c), F.add(a, F.add(b, c)));
          ASSERT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
        }
      }
    }
  }
}

TEST(FiniteFieldTest, DiscreteLogRoundTrip) {
  for (auto [p, e] : kSmallFields) {
    auto F = build_field(p, e);
    EXPECT_EQ(F.dlog(F.omega()), F.order() == 2 ? 0U : 1U);
    for (FieldElement a = 1; a < F.order(); ++a) {
      const auto x = F.dlog(a);
      EXPECT_LE(x, F.order() - 2);
      EXPECT_EQ(F.pow(F.omega(), x), a);
    }
  }
  EXPECT_THROW(build_field(3, 2).dlog(0), std::domain_error);
}

TEST(FiniteFieldTest, Frobenius) {
  auto F8 = build_field(2, 3);
  const FieldElement t = F8.from_coeffs({0, 1, 0});
  EXPECT_EQ(F8.frobenius_power(t, 1, 2), F8.mul(t, t));
  EXPECT_EQ(F8.frobenius_power(t, 0, 2), t);

  auto F9 = build_field(3, 2);
  for (FieldElement a = 0; a < 9; ++a)
    for (FieldElement b = 0; b < 9; ++b)
      EXPECT_EQ(F9.frobenius_power(F9.add(a, b), 1, 3), F9.add(F9.frobenius_power(a, 1, 3), F9.frobenius_power(b, 1, 3)));

  // q^d = order gives the identity map; the subfield of order q is fixed pointwise.
  auto F64 = build_field(2, 6);
  for (std::uint64_t q : {2ULL, 4ULL, 8ULL, 64ULL}) {
    unsigned d = 0;
    for (std::uint64_t x = 1; x < 64; x *= q) ++d;
    std::size_t fixed = 0;
    for (FieldElement a = 0; a < 64; ++a) {
      EXPECT_EQ(F64.frobenius_power(a, d, q), a);
      if (F64.frobenius_power(a, 1, q) == a) ++fixed;
    }
    EXPECT_EQ(fixed, q);
  }
  EXPECT_THROW(F64.frobenius_power(1, 1, 32), std::invalid_argument);
  EXPECT_THROW(F64.frobenius_power(1, 1, 3), std::invalid_argument);
}

TEST(FiniteFieldTest, Errors) {
  EXPECT_THROW(build_field(4, 1), std::invalid_argument);
  EXPECT_THROW(build_field(2, 0), std::invalid_argument);
  EXPECT_THROW(build_field(2, 21), std::invalid_argument);
  auto F = build_field(7, 1);
  EXPECT_THROW(F.inv(0), std::domain_error);
  EXPECT_THROW(F.from_coeffs({7}), std::invalid_argument);
  EXPECT_THROW(F.from_coeffs({1, 2}), std::invalid_argument);
}

TEST(FiniteFieldTest, LargerFieldsBuild) {
  auto F = build_field(7, 3);
  EXPECT_EQ(F.order(), 343U);
  EXPECT_EQ(F.pow(F.omega(), 342), 1U);
  EXPECT_EQ(F.pow(F.omega(), 171), F.neg(1));
  auto G = build_field(2, 5);
  EXPECT_EQ(G.order(), 32U);
  EXPECT_EQ(G.to_string(G.from_coeffs({1, 0, 1, 0, 0})), "t^2+1");
}

}  // namespace
}  // namespace mjg
