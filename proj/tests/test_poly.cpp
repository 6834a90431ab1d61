#include <gtest/gtest.h>

#include "mzv/error.hpp"
#include "mzv/ratfunc.hpp"
#include "support.hpp"

using namespace mzv;
using mzv::testing::P;
using mzv::testing::random_poly;

TEST(Poly, BasicShape) {
  const Field F = FieldCtx::create(3, 1);
  EXPECT_EQ(Poly(F).degree(), -1);
  const Poly f = P(F, {1, 0, 2});
  EXPECT_EQ(f.degree(), 2);
  EXPECT_EQ(f.lead(), FieldElem{2});
  EXPECT_EQ(P(F, {3, 3, 0}).degree(), -1);
  EXPECT_EQ(f.monic(), P(F, {2, 0, 1}));
  EXPECT_EQ(Poly::t(F).shifted(3), Poly::monomial(F, F->one(), 4));
  EXPECT_EQ(P(F, {1, 1}).inflated(3), P(F, {1, 0, 0, 1}));
}

TEST(Poly, FrobeniusInCharacteristicP) {
  for (std::uint32_t q : {2U, 3U, 4U, 5U}) {
    const Field F = mzv::testing::field(q);
    std::mt19937_64 rng(q);
    const Poly a = random_poly(F, rng, 12), b = random_poly(F, rng, 9);
    const std::uint32_t p = F->p();
    EXPECT_EQ((a + b).pow(p), a.pow(p) + b.pow(p));
  }
}

class PolyMul : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(PolyMul, DenseProductMatchesSchoolbook) {
  const Field F = mzv::testing::field(GetParam());
  std::mt19937_64 rng(GetParam() * 7919);
  for (std::size_t la : {1U, 5U, 47U, 48U, 130U, 700U}) {
    for (std::size_t lb : {1U, 3U, 60U, 513U}) {
      const Poly a = random_poly(F, rng, la), b = random_poly(F, rng, lb);
      const auto fast = detail::mul_dense(*F, a.coeffs(), b.coeffs());
      const auto slow = detail::mul_schoolbook(*F, a.coeffs(), b.coeffs());
      EXPECT_EQ(Poly(F, fast), Poly(F, slow)) << la << "x" << lb;
    }
  }
}

TEST_P(PolyMul, DivisionReconstructs) {
  const Field F = mzv::testing::field(GetParam());
  std::mt19937_64 rng(GetParam() * 104729);
  for (std::size_t la : {1U, 10U, 200U, 900U}) {
    for (std::size_t lb : {1U, 7U, 100U, 400U}) {
      const Poly a = random_poly(F, rng, la);
      Poly b = random_poly(F, rng, lb);
      if (b.is_zero()) b = Poly::one(F);
      const auto [quo, rem] = Poly::divmod(a, b);
      EXPECT_LT(rem.degree(), b.degree());
      EXPECT_EQ(quo * b + rem, a);
    }
  }
}

TEST_P(PolyMul, GcdDividesAndScales) {
  const Field F = mzv::testing::field(GetParam());
  std::mt19937_64 rng(GetParam() * 31);
  for (int it = 0; it < 20; ++it) {
    const Poly a = random_poly(F, rng, 15), b = random_poly(F, rng, 11);
    Poly c = random_poly(F, rng, 6);
    if (c.is_zero() || a.is_zero() || b.is_zero()) continue;
    const Poly g = gcd(a, b);
    EXPECT_TRUE(a.divisible_by(g));
    EXPECT_TRUE(b.divisible_by(g));
    EXPECT_EQ(gcd(a * c, b * c), (g * c).monic());
    EXPECT_TRUE(lcm(a, b).divisible_by(a));
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, PolyMul, ::testing::Values(2U, 3U, 4U, 5U, 8U, 9U));

TEST(Poly, ZeroDivisorThrows) {
  const Field F = FieldCtx::create(2, 1);
  try {
    Poly::divmod(P(F, {1, 1}), Poly(F));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroDenominator);
  }
}

TEST(Poly, DegreeBoundIsEnforced) {
  const Field F = FieldCtx::create(2, 1);
  try {
    Poly::t(F).pow(kMaxDegree + 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ExponentOverflow);
  }
}

TEST(Poly, ExactDivisionRejectsRemainders) {
  const Field F = FieldCtx::create(3, 1);
  EXPECT_EQ((P(F, {1, 1}) * P(F, {2, 0, 1})).exact_div(P(F, {1, 1})), P(F, {2, 0, 1}));
  EXPECT_THROW(P(F, {1, 0, 1}).exact_div(P(F, {0, 1})), Error);
}

TEST(RatFunc, NormalizationExamples) {
  const Field F = FieldCtx::create(2, 1);
  const RatFunc r = rat_normalize(P(F, {0, 1, 1}), P(F, {0, 1}));
  EXPECT_EQ(r.num(), P(F, {1, 1}));
  EXPECT_TRUE(r.den().is_one());
  const Poly f = P(F, {1, 0, 1, 1});
  EXPECT_EQ(rat_normalize(f, Poly::one(F)), RatFunc(f));
  EXPECT_TRUE(rat_normalize(Poly(F), f).is_zero());
  EXPECT_TRUE(rat_normalize(Poly(F), f).den().is_one());
  EXPECT_THROW(rat_normalize(f, Poly(F)), Error);
}

TEST(RatFunc, FieldOperationsOnRandomElements) {
  for (std::uint32_t q : {2U, 3U, 4U, 5U}) {
    const Field F = mzv::testing::field(q);
    std::mt19937_64 rng(q + 11);
    for (int it = 0; it < 25; ++it) {
      Poly n1 = random_poly(F, rng, 6), d1 = random_poly(F, rng, 5), n2 = random_poly(F, rng, 4), d2 = random_poly(F, rng, 7);
      if (d1.is_zero() || d2.is_zero() || n1.is_zero() || n2.is_zero()) continue;
      const RatFunc x = rat_normalize(n1, d1), y = rat_normalize(n2, d2);
      EXPECT_TRUE(x.den().lead() == F->one());
      EXPECT_TRUE(gcd(x.num(), x.den()).is_one());
      EXPECT_EQ(x * x.inverse(), RatFunc::one(F));
      EXPECT_EQ((x + y) - y, x);
      EXPECT_EQ((x * y) / y, x);
      EXPECT_EQ(x * (x + y), x * x + x * y);
      EXPECT_EQ(x.pow(3), x * x * x);
      EXPECT_EQ(x.pow(-2), (x * x).inverse());
    }
  }
}
