#include <gtest/gtest.h>

#include "mzv/error.hpp"
#include "mzv/recipes.hpp"
#include "mzv/solver.hpp"
#include "support.hpp"

using namespace mzv;

namespace {

std::vector<std::pair<std::uint32_t, std::int64_t>> entries(const TaSet& t) {
  std::vector<std::pair<std::uint32_t, std::int64_t>> out;
  for (const auto& e : t.entries) out.emplace_back(e.c, e.phi);
  return out;
}

std::vector<ShufflePair> sorted(std::vector<ShufflePair> v) {
  std::sort(v.begin(), v.end(), [](const ShufflePair& x, const ShufflePair& y) { return x.aj < y.aj; });
  return v;
}

}  // namespace

TEST(StructParams, Examples) {
  const auto a = struct_params(5, 5, 2);
  EXPECT_EQ(a.m, 1U);
  EXPECT_EQ(a.r, 20);
  EXPECT_EQ(a.j_max, 4);
  EXPECT_EQ(a.phi(0, 0), 18);
  for (std::uint64_t q : {2U, 4U, 8U}) EXPECT_EQ(struct_params(q, 2, 2).r, static_cast<std::int64_t>(2 * (q - 1)));
  const auto b = struct_params(4, 2, 3);
  EXPECT_EQ(b.m, 2U);
  EXPECT_EQ(b.r, 12);
  EXPECT_EQ(struct_params(3, 3, 1).r, 2);
  EXPECT_THROW(struct_params(3, 3, 0), Error);
}

TEST(StructParams, EvenInvariants) {
  for (auto [q, p] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 2}, {3, 3}, {4, 2}, {5, 5}, {9, 3}}) {
    for (std::int64_t a = 1; a <= 40; ++a) {
      const auto sp = struct_params(q, p, a);
      EXPECT_EQ(sp.r % static_cast<std::int64_t>(q - 1), 0);
      for (std::int64_t j = 0; j <= sp.j_max; ++j) {
        EXPECT_GE(sp.phi(j), 0);
        EXPECT_EQ((a + sp.phi(2, j)) % static_cast<std::int64_t>(q - 1), 0);
      }
    }
  }
}

TEST(TOf, Examples) {
  EXPECT_EQ(t_of(2, 3), 2);
  EXPECT_EQ(t_of(5, 2), 4);
  EXPECT_EQ(t_of(3, 1), 1);
  for (std::uint32_t p : {2U, 3U, 5U}) {
    for (std::int64_t m = 1, pm = p; m <= 3; ++m, pm *= p) EXPECT_EQ(t_of(p, pm), 1);
  }
}

TEST(TOf, InvariantUnderMultiplicationByP) {
  for (std::uint32_t p : {2U, 3U, 5U}) {
    for (std::int64_t a = 1; a <= 30; ++a) {
      for (std::int64_t pm = p, m = 1; m <= 3; ++m, pm *= p) EXPECT_EQ(t_of(p, a), t_of(p, pm * a)) << p << " " << a;
    }
  }
}

TEST(COf, Examples) {
  const Field F5 = FieldCtx::create(5, 1);
  EXPECT_EQ(c_of(*F5, 7, 0), 1U);
  EXPECT_EQ(c_of(*F5, 2, 2), 4U);
  EXPECT_EQ(c_of(*F5, 3, 4), 3U);
  EXPECT_THROW(c_of(*F5, 2, 9), Error);
  const Field F4 = FieldCtx::create(2, 2);
  try {
    c_of(*F4, 3, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotApplicable);
  }
}

TEST(TaPrime, Examples) {
  const Field F5 = FieldCtx::create(5, 1);
  using E = std::vector<std::pair<std::uint32_t, std::int64_t>>;
  EXPECT_EQ(entries(ta_prime(*F5, 2)), (E{{1, 18}, {4, 10}, {3, 6}, {2, 2}}));
  EXPECT_EQ(entries(ta_prime(*F5, 3)), (E{{1, 17}, {1, 5}, {3, 1}}));
  EXPECT_EQ(entries(ta_prime(*FieldCtx::create(2, 1), 2)), (E{{1, 0}}));
}

TEST(TaPrime, SizeIsTAndContainsTheLeadingIncrement) {
  for (std::uint32_t p : {2U, 3U, 5U, 7U}) {
    const Field F = FieldCtx::create(p, 1);
    for (std::int64_t a = 1; a <= 30; ++a) {
      const TaSet t = ta_prime(*F, a);
      EXPECT_EQ(static_cast<std::int64_t>(t.entries.size()), t_of(p, a)) << p << " " << a;
      ASSERT_FALSE(t.entries.empty());
      EXPECT_EQ(t.entries.front().c, 1U);
      EXPECT_EQ(t.entries.front().phi, struct_params(*F, a).r - a);
    }
  }
}

TEST(TaPrime, ScalesWithPowersOfP) {
  for (std::uint32_t p : {2U, 3U, 5U}) {
    const Field F = FieldCtx::create(p, 1);
    for (std::int64_t a = 1; a <= 12; ++a) {
      const auto base = entries(ta_prime(*F, a));
      for (std::int64_t pm = p; pm * a <= 60; pm *= p) {
        auto scaled = base;
        for (auto& e : scaled) e.second *= pm;
        EXPECT_EQ(entries(ta_prime(*F, pm * a)), scaled) << p << " " << a << " " << pm;
      }
    }
  }
}

TEST(TaQ4, Examples) {
  const Field F = FieldCtx::create(2, 2);
  using E = std::vector<std::pair<std::uint32_t, std::int64_t>>;
  EXPECT_EQ(entries(ta_q4(*F, 3)), (E{{1, 9}, {1, 0}}));
  const auto sp7 = struct_params(*F, 7);
  EXPECT_EQ(entries(ta_q4(*F, 7)), (E{{1, sp7.phi(0)}, {1, sp7.phi(3)}}));
  EXPECT_EQ(entries(ta_q4(*F, 2)), (E{{1, struct_params(*F, 2).phi(0)}}));
  EXPECT_THROW(ta_q4(*FieldCtx::create(2, 3), 3), Error);
}

TEST(TaTable, RowsAndAgreementWithQ4Rule) {
  const Field F8 = FieldCtx::create(2, 3);
  using E = std::vector<std::pair<std::uint32_t, std::int64_t>>;
  EXPECT_EQ(entries(ta_table_small_a(*F8, 4)), (E{{1, 24}}));
  EXPECT_EQ(entries(ta_table_small_a(*F8, 3)).size(), 2U);
  const Field F4 = FieldCtx::create(2, 2);
  for (std::int64_t a = 2; a <= 4; ++a) EXPECT_EQ(entries(ta_table_small_a(*F4, a)), entries(ta_q4(*F4, a)));
  EXPECT_THROW(ta_table_small_a(*FieldCtx::create(3, 1), 2), Error);
}

TEST(Predict, WorkedExample) {
  auto wb = Workbench::create(FieldCtx::create(5, 1));
  const Prediction pr = predict_S(*wb, 2, 30);
  EXPECT_EQ(pr.recipe, "main");
  EXPECT_EQ(pr.initial_provenance, "full-formula");
  EXPECT_EQ(pr.predicted.pairs, (std::vector<ShufflePair>{{3, 4}, {2, 8}, {1, 12}, {4, 20}, {3, 24}, {2, 28}}));
  EXPECT_EQ(full_delta_small_a(*wb->field(), 2, 30).predicted.pairs, pr.predicted.pairs);
}

TEST(Predict, SmallCharacteristicTwoExamples) {
  auto wb = Workbench::create(FieldCtx::create(2, 1));
  EXPECT_TRUE(predict_S(*wb, 2, 2).predicted.pairs.empty());
  EXPECT_EQ(predict_S(*wb, 3, 5).predicted.pairs, (std::vector<ShufflePair>{{1, 2}, {1, 3}, {1, 4}, {1, 5}}));
  EXPECT_EQ(full_delta_small_a(*wb->field(), 2, 3).predicted.pairs, (std::vector<ShufflePair>{{1, 2}, {1, 3}}));
}

TEST(Predict, BandInitialValues) {
  auto wb = Workbench::create(FieldCtx::create(7, 1));
  const auto sp = struct_params(*wb->field(), 4);
  const Prediction pr = predict_S(*wb, 4, sp.r + sp.r - 1, TaSource::Auto, InitialSource::NoSolver);
  EXPECT_EQ(pr.initial_provenance, "band");
  EXPECT_EQ(pr.predicted.pairs, solve_shuffle(*wb, 4, 2 * sp.r - 1).pairs);
}

TEST(Predict, PartialWithoutInitialValues) {
  auto wb = Workbench::create(FieldCtx::create(7, 1));
  const Prediction pr = predict_S(*wb, 4, 30, TaSource::Auto, InitialSource::NoSolver);
  EXPECT_TRUE(pr.partial());
  const Prediction helped = predict_S(*wb, 4, 30);
  EXPECT_EQ(helped.initial_provenance, "solver-assisted");
  EXPECT_EQ(helped.predicted.pairs, solve_shuffle(*wb, 4, 30).pairs);
}

TEST(Predict, ExperimentalAtAOne) {
  auto wb = Workbench::create(FieldCtx::create(3, 1));
  const Prediction pr = predict_S(*wb, 1, 7);
  ASSERT_FALSE(pr.warnings.empty());
  EXPECT_NE(pr.warnings.front().find("experimental"), std::string::npos);
}

TEST(Predict, JsonCarriesProvenance) {
  auto wb = Workbench::create(FieldCtx::create(5, 1));
  const auto j = to_json(predict_S(*wb, 2, 30));
  EXPECT_EQ(j["recipe"], "main");
  EXPECT_EQ(j["initial_provenance"], "full-formula");
  EXPECT_TRUE(j["warnings"].is_array());
  EXPECT_EQ(j["pairs"].size(), 6U);
}

TEST(FullFormulas, CoverageTable) {
  EXPECT_TRUE(full_covered(*FieldCtx::create(2, 2), 4));
  EXPECT_FALSE(full_covered(*FieldCtx::create(2, 2), 5));
  EXPECT_TRUE(full_covered(*FieldCtx::create(3, 1), 3));
  EXPECT_FALSE(full_covered(*FieldCtx::create(3, 1), 4));
  try {
    full_delta_small_a(*FieldCtx::create(5, 1), 4, 9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotCovered);
  }
}

TEST(FullFormulas, OddAThreeSupportAtQ5) {
  const Field F = FieldCtx::create(5, 1);
  const auto sp = struct_params(*F, 3);
  const std::int64_t b = 3 * sp.r + 3;
  const auto pr = full_delta_small_a(*F, 3, b).predicted;
  std::vector<ShufflePair> recursive;
  for (const auto& pair : pr.pairs) {
    if (pair.aj > 3) recursive.push_back(pair);
  }
  std::vector<ShufflePair> want;
  for (std::int64_t i = 0; i < 3; ++i) {
    want.push_back({1, b - sp.phi(i, 0)});
    want.push_back({1, b - sp.phi(i, 3)});
    want.push_back({3, b - sp.phi(i, 4)});
  }
  EXPECT_EQ(recursive, sorted(want));
}

TEST(FullFormulas, AgreeWithTheRecursionOnCoveredGrids) {
  for (std::uint32_t q : {2U, 3U, 4U, 5U, 8U}) {
    auto wb = Workbench::create(mzv::testing::field(q));
    for (std::int64_t a = 2; a <= 4; ++a) {
      if (!full_covered(*wb->field(), a)) continue;
      for (std::int64_t b = 1; b <= 45; ++b) {
        const auto full = full_delta_small_a(*wb->field(), a, b).predicted;
        const auto main = predict_S(*wb, a, b, TaSource::Auto, InitialSource::NoSolver).predicted;
        EXPECT_EQ(full.pairs, main.pairs) << q << " " << a << " " << b;
        for (const auto& pr : full.pairs) EXPECT_EQ((full.weight() - pr.aj) % (q - 1), 0);
      }
    }
  }
}

TEST(LargeIndex, Examples) {
  const Field F2 = FieldCtx::create(2, 1);
  const auto top = large_index_delta(*F2, LargeFamily::QnQnm1, 1).predicted;
  EXPECT_EQ(top.a, 2);
  EXPECT_EQ(top.b, 1);
  EXPECT_EQ(top.pairs, (std::vector<ShufflePair>{{1, 2}}));
  const Field F5 = FieldCtx::create(5, 1);
  const auto top5 = large_index_delta(*F5, LargeFamily::QnQnm1, 2).predicted;
  EXPECT_EQ(top5.pairs, (std::vector<ShufflePair>{{4, 25}}));
}

TEST(LargeIndex, ShiftAtZeroIsTheSecondFamily) {
  for (std::uint32_t q : {2U, 3U, 4U, 5U}) {
    const Field F = mzv::testing::field(q);
    for (std::uint32_t n = 1; n <= 3; ++n) {
      const auto a = large_index_delta(*F, LargeFamily::Qnp1Shift, n, 0).predicted;
      const auto b = large_index_delta(*F, LargeFamily::Qnp1Qn, n).predicted;
      EXPECT_TRUE(a.same_relation(b));
    }
  }
}

TEST(LargeIndex, WeightsAreConsistent) {
  for (std::uint32_t q : {2U, 3U, 4U, 5U}) {
    const Field F = mzv::testing::field(q);
    for (std::uint32_t n = 1; n <= 3; ++n) {
      for (LargeFamily f : {LargeFamily::QnQnm1, LargeFamily::Qnp1Qn, LargeFamily::Qnm1Qnp1, LargeFamily::Qnm1nQnp1}) {
        const auto pr = large_index_delta(*F, f, n).predicted;
        for (const auto& pair : pr.pairs) {
          EXPECT_GE(pair.aj, 1);
          EXPECT_LT(pair.aj, pr.weight());
          EXPECT_EQ((pr.weight() - pair.aj) % (q - 1), 0);
        }
      }
    }
  }
}

TEST(LargeIndex, FirstThreeFamiliesMatchTheSolver) {
  for (std::uint32_t q : {2U, 3U, 4U, 5U}) {
    auto wb = Workbench::create(mzv::testing::field(q));
    for (std::uint32_t n = 1; ipow(q, n) <= 30; ++n) {
      for (LargeFamily f : {LargeFamily::QnQnm1, LargeFamily::Qnp1Qn, LargeFamily::Qnm1Qnp1}) {
        const auto pr = large_index_delta(*wb->field(), f, n).predicted;
        EXPECT_EQ(solve_shuffle(*wb, pr.a, pr.b).pairs, pr.pairs) << q << " " << n << " " << family_name(f);
      }
    }
  }
}

TEST(LargeIndex, FamilyNamesAndErrors) {
  for (LargeFamily f : {LargeFamily::QnQnm1, LargeFamily::Qnp1Qn, LargeFamily::Qnm1Qnp1, LargeFamily::Qnm1nQnp1, LargeFamily::Qnp1Shift}) {
    EXPECT_EQ(parse_family(family_name(f)), f);
  }
  const Field F = FieldCtx::create(3, 1);
  for (auto call : {+[](const FieldCtx& G) { large_index_delta(G, LargeFamily::Qnp1Shift, 2, 3); },
                    +[](const FieldCtx& G) { large_index_delta(G, LargeFamily::QnQnm1, 0); },
                    +[](const FieldCtx&) { parse_family("nope"); }}) {
    try {
      call(*F);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::InvalidFamily);
    }
  }
}

TEST(ShiftConjecture, SmallCases) {
  auto wb = Workbench::create(FieldCtx::create(2, 2));
  EXPECT_TRUE(check_shift_conjecture(*wb, 5, 1));
  EXPECT_TRUE(check_shift_conjecture(*wb, 6, 1));
  EXPECT_TRUE(check_shift_conjecture(*wb, 17, 2));
  EXPECT_THROW(check_shift_conjecture(*wb, 4, 1), Error);
  auto wb3 = Workbench::create(FieldCtx::create(3, 1));
  EXPECT_THROW(check_shift_conjecture(*wb3, 6, 1), Error);
}
