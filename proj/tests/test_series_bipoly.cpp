#include <gtest/gtest.h>

#include "mzv/bipoly.hpp"
#include "mzv/error.hpp"
#include "mzv/series.hpp"
#include "support.hpp"

using namespace mzv;
using mzv::testing::P;

TEST(Series, GeometricInverse) {
  const Field F = FieldCtx::create(3, 1);
  Series s(F, 4);
  s[0] = RatFunc::one(F);
  s[1] = -RatFunc::one(F);
  const Series inv = series_inverse(s);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(inv[i], RatFunc::one(F));
}

TEST(Series, RationalRatio) {
  const Field F = FieldCtx::create(2, 1);
  const RatFunc r = RatFunc(P(F, {0, 1, 1})).inverse();
  Series s(F, 3);
  s[0] = RatFunc::one(F);
  s[1] = -r;
  const Series inv = series_inverse(s);
  EXPECT_EQ(inv[0], RatFunc::one(F));
  EXPECT_EQ(inv[1], r);
  EXPECT_EQ(inv[2], r * r);
}

TEST(Series, InverseIsTwoSided) {
  const Field F = FieldCtx::create(5, 1);
  std::mt19937_64 rng(5);
  Series s(F, 8);
  for (std::size_t i = 0; i < 8; ++i) {
    Poly n = mzv::testing::random_poly(F, rng, 4), d = mzv::testing::random_poly(F, rng, 3);
    if (d.is_zero()) d = Poly::one(F);
    s[i] = rat_normalize(n, d);
  }
  s[0] = RatFunc(P(F, {2, 1}));
  const Series prod = s * series_inverse(s);
  EXPECT_EQ(prod[0], RatFunc::one(F));
  for (std::size_t i = 1; i < 8; ++i) EXPECT_TRUE(prod[i].is_zero());
}

TEST(Series, NonUnitConstantTermThrows) {
  const Field F = FieldCtx::create(2, 1);
  Series s(F, 3);
  s[1] = RatFunc::one(F);
  try {
    series_inverse(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonUnitConstantTerm);
  }
}

TEST(BiPoly, EvaluationExamples) {
  const Field F = FieldCtx::create(2, 1);
  const BiPoly one = BiPoly::constant(RatFunc::one(F));
  for (std::uint64_t d = 0; d < 4; ++d) EXPECT_EQ(one.eval_T(d), RatFunc::one(F));
  EXPECT_EQ(BiPoly::T(F).eval_T(0), RatFunc(Poly::t(F)));
  const RatFunc c2 = RatFunc(P(F, {0, 1, 1})).inverse();
  const RatFunc c0 = rat_normalize(P(F, {0, 1}), P(F, {1, 1}));
  const BiPoly h = BiPoly::from_terms(F, {{2, c2}, {0, c0}});
  EXPECT_EQ(bipoly_eval_T(h, 1), RatFunc(P(F, {0, 1, 1})));
}

TEST(BiPoly, RingOperationsCommuteWithEvaluation) {
  const Field F = FieldCtx::create(3, 1);
  std::mt19937_64 rng(17);
  auto rnd = [&] {
    std::vector<std::pair<std::uint64_t, RatFunc>> terms;
    for (std::uint64_t e = 0; e < 4; ++e) {
      Poly n = mzv::testing::random_poly(F, rng, 3), d = mzv::testing::random_poly(F, rng, 3);
      if (d.is_zero()) d = Poly::one(F);
      terms.emplace_back(e, rat_normalize(n, d));
    }
    return BiPoly::from_terms(F, terms);
  };
  for (int it = 0; it < 10; ++it) {
    const BiPoly a = rnd(), b = rnd();
    for (std::uint64_t d = 0; d <= 2; ++d) {
      EXPECT_EQ((a * b).eval_T(d), a.eval_T(d) * b.eval_T(d));
      EXPECT_EQ((a + b).eval_T(d), a.eval_T(d) + b.eval_T(d));
      EXPECT_EQ((a - b).eval_T(d), a.eval_T(d) - b.eval_T(d));
    }
    EXPECT_EQ(a.compose_T_power(3).eval_T(1), a.eval_T(2));
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(BiPoly, ExponentBound) {
  const Field F = FieldCtx::create(5, 1);
  try {
    BiPoly::T(F).eval_T(40);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ExponentOverflow);
  }
}
