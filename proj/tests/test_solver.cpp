#include <gtest/gtest.h>

#include "mzv/error.hpp"
#include "mzv/solver.hpp"
#include "support.hpp"

using namespace mzv;

namespace {

std::shared_ptr<Workbench> bench(std::uint32_t q) { return Workbench::create(mzv::testing::field(q)); }

const std::vector<ShufflePair> kExample{{3, 4}, {2, 8}, {1, 12}, {4, 20}, {3, 24}, {2, 28}};

}  // namespace

TEST(Solver, WorkedExampleAtQ5) {
  auto wb = bench(5);
  const ShuffleSet s = solve_shuffle(*wb, 2, 30);
  EXPECT_EQ(s.pairs, kExample);
  EXPECT_EQ(s.certified, "bivariate");
  for (std::uint32_t d = 0; d <= 3; ++d) EXPECT_TRUE(verify_at_d(*wb, s, d)) << d;
}

TEST(Solver, PrincipalExpansionOfTheExample) {
  auto wb = bench(5);
  EXPECT_EQ(principal_expansion(*wb->field(), 2, 30), kExample);
}

TEST(Solver, MethodsAgree) {
  for (std::uint32_t q : {2U, 3U, 4U, 5U}) {
    auto wb = bench(q);
    for (std::int64_t a = 1; a <= 7; ++a) {
      for (std::int64_t b = 1; b <= 9; ++b) {
        SolveOptions o;
        const ShuffleSet s = solve_shuffle(*wb, a, b, o);
        o.method = SolveMethod::Bivariate;
        EXPECT_EQ(solve_shuffle(*wb, a, b, o).pairs, s.pairs) << q << " " << a << " " << b;
        o.method = SolveMethod::PerD;
        EXPECT_EQ(solve_shuffle(*wb, a, b, o).pairs, s.pairs) << q << " " << a << " " << b;
      }
    }
  }
}

TEST(Solver, RelationIsSymmetric) {
  auto wb = bench(3);
  for (std::int64_t a = 1; a <= 8; ++a) {
    for (std::int64_t b = a + 1; b <= 10; ++b) EXPECT_EQ(solve_shuffle(*wb, a, b).pairs, solve_shuffle(*wb, b, a).pairs);
  }
}

TEST(Solver, EveryTermIsEven) {
  for (std::uint32_t q : {3U, 4U, 5U}) {
    auto wb = bench(q);
    for (std::int64_t a = 1; a <= 8; ++a) {
      for (std::int64_t b = 1; b <= 12; ++b) {
        const ShuffleSet s = solve_shuffle(*wb, a, b);
        for (const auto& pr : s.pairs) EXPECT_EQ((s.weight() - pr.aj) % (q - 1), 0);
      }
    }
  }
}

TEST(Solver, FrobeniusScaling) {
  for (std::uint32_t q : {2U, 3U}) {
    auto wb = bench(q);
    const std::int64_t p = wb->field()->p();
    for (std::int64_t a = 1; a <= 4; ++a) {
      for (std::int64_t b = 1; b <= 5; ++b) {
        const ShuffleSet s = solve_shuffle(*wb, a, b);
        std::vector<ShufflePair> scaled;
        for (const auto& pr : s.pairs) scaled.push_back({pr.c, p * pr.aj});
        EXPECT_EQ(solve_shuffle(*wb, p * a, p * b).pairs, scaled);
      }
    }
  }
}

TEST(Solver, LargeWeightsAreCertifiedNumerically) {
  auto wb = bench(3);
  SolveOptions o;
  o.prove_limit = 10;
  const ShuffleSet s = solve_shuffle(*wb, 5, 20, o);
  EXPECT_EQ(s.certified, "numeric");
  o.prove_limit = 96;
  EXPECT_EQ(solve_shuffle(*wb, 5, 20, o).pairs, s.pairs);
}

TEST(Solver, ExtractT) {
  auto wb = bench(5);
  const std::vector<ShufflePair> want{{1, 12}, {4, 20}, {3, 24}, {2, 28}};
  EXPECT_EQ(extract_T(*wb, 2, 30), want);
  EXPECT_THROW(extract_T(*wb, 2, 10), Error);
}

TEST(Solver, WrongRelationFailsVerification) {
  auto wb = bench(5);
  ShuffleSet s = solve_shuffle(*wb, 2, 30);
  s.pairs[0].c = 1;
  EXPECT_FALSE(verify_at_d(*wb, s, 1));
  EXPECT_FALSE(verify_at_d(*wb, s, 2));
}

TEST(Solver, InvalidIndices) {
  auto wb = bench(2);
  EXPECT_THROW(solve_shuffle(*wb, 0, 3), Error);
  EXPECT_THROW(solve_shuffle(*wb, 3, -1), Error);
}

TEST(ShuffleSetJson, RoundTrip) {
  auto wb = bench(5);
  const ShuffleSet s = solve_shuffle(*wb, 2, 30);
  const ShuffleSet back = shuffle_from_json(to_json(s));
  EXPECT_TRUE(back.same_relation(s));
  auto j = to_json(s);
  j["weight"] = 33;
  EXPECT_THROW(shuffle_from_json(j), Error);
}

TEST(ShuffleSetJson, CanonicalizeMergesModP) {
  ShuffleSet s;
  s.p = 3;
  s.a = 2;
  s.b = 4;
  s.pairs = {{2, 3}, {1, 3}, {1, 2}, {2, 2}, {1, 5}};
  s.canonicalize();
  EXPECT_EQ(s.pairs, (std::vector<ShufflePair>{{1, 5}}));
}
