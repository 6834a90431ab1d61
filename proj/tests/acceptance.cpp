// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "mzv/error.hpp"
#include "mzv/prover.hpp"
#include "mzv/recipes.hpp"
#include "mzv/solver.hpp"
#include "mzv/sweep.hpp"

using namespace mzv;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Field field_q(std::uint32_t q) {
  switch (q) {
    case 4: return FieldCtx::create(2, 2);
    case 8: return FieldCtx::create(2, 3);
    default: return FieldCtx::create(q, 1);
  }
}

const std::vector<ShufflePair> kExample{{3, 4}, {2, 8}, {1, 12}, {4, 20}, {3, 24}, {2, 28}};

Outcome example_solve() {
  auto wb = Workbench::create(field_q(5));
  const ShuffleSet s = solve_shuffle(*wb, 2, 30);
  return {s.pairs == kExample, std::to_string(s.pairs.size()) + " terms, certified " + s.certified};
}

Outcome example_prove() {
  auto wb = Workbench::create(field_q(5));
  ShuffleSet s;
  s.p = 5;
  s.a = 2;
  s.b = 30;
  s.pairs = kExample;
  const ProofResult r = prove_identity(*wb, s);
  return {r.status == ProofResult::Status::Proved, status_name(r.status)};
}

Outcome oracle_equivalence() {
  std::size_t checked = 0, bad = 0;
  for (std::uint32_t q : {2U, 3U, 4U, 5U}) {
    PowerSums ps(field_q(q));
    const std::uint32_t dmax = q <= 3 ? 3 : 2;
    for (std::uint32_t d = 0; d <= dmax; ++d) {
      for (std::int64_t k = 1; k <= 40; ++k, ++checked) bad += ps.power_sum(d, k) == ps.power_sum_oracle(d, k) ? 0 : 1;
    }
  }
  return {bad == 0, std::to_string(checked) + " values, " + std::to_string(bad) + " differ"};
}

Outcome carlitz_identities() {
  std::size_t checked = 0, bad = 0;
  for (std::uint32_t q : {2U, 3U, 4U, 5U}) {
    PowerSums ps(field_q(q));
    const std::uint32_t p = ps.field()->p(), dmax = q == 5 ? 3 : 5;
    for (std::uint32_t d = 0; d <= dmax; ++d) {
      ++checked;
      bad += ps.power_sum(d, 1) == RatFunc(ps.carlitz().ell(d)).inverse() ? 0 : 1;
      for (std::int64_t s = 1; s <= 20; ++s, ++checked) bad += ps.power_sum(d, p * s) == ps.power_sum(d, s).pow(p) ? 0 : 1;
    }
  }
  return {bad == 0, std::to_string(checked) + " identities, " + std::to_string(bad) + " fail"};
}

Outcome hg_property() {
  std::size_t checked = 0, bad = 0, absent = 0;
  for (std::uint32_t q : {2U, 3U, 4U, 5U}) {
    auto wb = Workbench::create(field_q(q));
    const PowerSums& ps = wb->power_sums();
    for (std::int64_t k = 1; k <= 25; ++k) {
      const BiPoly H = wb->hg().compute_H(k);
      std::optional<BiPoly> G;
      try {
        G = wb->hg().compute_G(k);
      } catch (const Error& e) {
        if (e.code() != Errc::NoPolynomialSolution || k % (q - 1) == 0) throw;
        ++absent;
      }
      for (std::uint32_t d = 0; d <= 3; ++d) {
        ++checked;
        bad += H.eval_T(d) == RatFunc(ps.scaled_sum(d, k)) ? 0 : 1;
        if (G) {
          ++checked;
          bad += G->eval_T(d) == RatFunc(ps.scaled_less(d, k)) ? 0 : 1;
        }
      }
    }
  }
  return {bad == 0, std::to_string(checked) + " evaluations, " + std::to_string(bad) + " fail; G_k absent for " +
                        std::to_string(absent) + " non-even k"};
}

struct SweepSpec {
  std::uint32_t q;
  std::vector<std::int64_t> as;
  std::int64_t b_max;
  std::string recipe;
};

const std::vector<SweepSpec> kSweeps{
    {2, {2, 3, 4}, 40, "full"}, {4, {2, 3, 4}, 40, "full"}, {4, {2, 3, 4}, 40, "q4"},
    {3, {2, 3}, 40, "full"},    {5, {2, 3}, 60, "full"},    {8, {2}, 30, "full"},
};

std::string sweep_all(unsigned jobs, std::int64_t* evenness, std::string* detail, bool* all_match) {
  std::ostringstream os;
  std::size_t match = 0, partial = 0, other = 0;
  std::int64_t odd = 0;
  for (const auto& s : kSweeps) {
    auto wb = Workbench::create(field_q(s.q));
    SweepGrid g;
    g.as = s.as;
    g.b_max = s.b_max;
    g.recipe = s.recipe;
    g.jobs = jobs;
    const SweepReport rep = run_sweep(*wb, g);
    rep.write_csv(os);
    match += rep.count(MatchKind::Match);
    partial += rep.count(MatchKind::Partial);
    other += rep.rows.size() - rep.count(MatchKind::Match) - rep.count(MatchKind::Partial);
    odd += rep.evenness_violations();
  }
  if (evenness) *evenness = odd;
  if (detail) {
    *detail = std::to_string(match) + " MATCH, " + std::to_string(partial) + " PARTIAL, " + std::to_string(other) + " other";
  }
  if (all_match) *all_match = other == 0;
  return os.str();
}

std::string g_first_sweep;
std::int64_t g_evenness = -1;

Outcome recipe_sweeps() {
  Outcome o;
  g_first_sweep = sweep_all(1, &g_evenness, &o.detail, &o.ok);
  return o;
}

Outcome main_structure() {
  std::size_t steps = 0, bad = 0, size_bad = 0;
  for (std::uint32_t q : {2U, 3U, 5U}) {
    auto wb = Workbench::create(field_q(q));
    const FieldCtx& F = *wb->field();
    for (std::int64_t a = 1; a <= 10; ++a) {
      if (a % q == 0) continue;
      const TaSet T = ta_prime(F, a);
      size_bad += static_cast<std::int64_t>(T.entries.size()) == t_of(F.p(), a) ? 0 : 1;
      const std::int64_t r = struct_params(F, a).r;
      for (std::int64_t s = 1; s <= 3; ++s, ++steps) {
        const std::int64_t b = 1 + s * r;
        std::vector<ShufflePair> want;
        for (const auto& e : T.entries) want.push_back({e.c, b - e.phi});
        std::sort(want.begin(), want.end(), [](const ShufflePair& x, const ShufflePair& y) { return x.aj < y.aj; });
        bad += extract_T(*wb, a, b) == want ? 0 : 1;
      }
    }
  }
  return {bad == 0 && size_bad == 0, std::to_string(steps) + " recursion steps, " + std::to_string(bad) +
                                         " differ; |T_a| != t_a for " + std::to_string(size_bad)};
}

Outcome large_index() {
  std::size_t proved = 0, total = 0;
  for (auto [q, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {3, 1}, {3, 2}, {4, 1}, {5, 1}}) {
    auto wb = Workbench::create(field_q(q));
    const Prediction pr = large_index_delta(*wb->field(), LargeFamily::QnQnm1, n);
    ++total;
    proved += prove_identity(*wb, pr.predicted).status == ProofResult::Status::Proved ? 1 : 0;
  }
  return {proved == total, std::to_string(proved) + "/" + std::to_string(total) + " proved"};
}

Outcome closed_form() {
  std::size_t checked = 0, bad = 0;
  for (std::uint32_t q : {2U, 3U, 4U}) {
    PowerSums ps(field_q(q));
    for (std::int64_t m = 2; m <= q; ++m) {
      for (std::uint32_t i = 0; i <= 2; ++i) {
        for (std::uint32_t d = 0; d <= 3; ++d, ++checked) bad += ps.closed_form_Sd(m, i, d).equal ? 0 : 1;
      }
    }
  }
  return {bad == 0, std::to_string(checked) + " instances, " + std::to_string(bad) + " fail"};
}

Outcome scaling() {
  std::size_t checked = 0, bad = 0;
  for (std::uint32_t q : {2U, 3U, 5U}) {
    auto wb = Workbench::create(field_q(q));
    const std::int64_t p = q;
    const std::vector<std::pair<std::int64_t, std::int64_t>> cells{{1, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5},
                                                                    {4, 3}, {5, 7}, {3, 8}, {6, 5}, {7, 9}};
    for (auto [a, b] : cells) {
      const ShuffleSet s = solve_shuffle(*wb, a, b);
      std::vector<ShufflePair> want;
      for (const auto& pr : s.pairs) want.push_back({pr.c, p * pr.aj});
      ++checked;
      bad += solve_shuffle(*wb, p * a, p * b).pairs == want ? 0 : 1;
    }
    for (std::int64_t a = 1; a <= 30; ++a) {
      for (std::int64_t pm = p, m = 1; m <= 3; ++m, pm *= p, ++checked) bad += t_of(q, a) == t_of(q, pm * a) ? 0 : 1;
    }
  }
  return {bad == 0, std::to_string(checked) + " checks, " + std::to_string(bad) + " fail"};
}

Outcome evenness() {
  if (g_evenness < 0) return {false, "sweeps did not run"};
  return {g_evenness == 0, std::to_string(g_evenness) + " violations"};
}

Outcome shift_conjecture() {
  auto wb = Workbench::create(field_q(4));
  std::size_t checked = 0, bad = 0;
  for (std::int64_t a = 2; a <= 20; ++a) {
    for (std::uint32_t j = 0; a - ipow(4, j) >= 1; ++j, ++checked) bad += check_shift_conjecture(*wb, a, j) ? 0 : 1;
  }
  return {bad == 0, std::to_string(checked) + " pairs (a, j), " + std::to_string(bad) + " fail"};
}

Outcome determinism() {
  if (g_first_sweep.empty()) return {false, "sweeps did not run"};
  const std::string again = sweep_all(4, nullptr, nullptr, nullptr);
  return {again == g_first_sweep, std::to_string(g_first_sweep.size()) + " bytes, jobs 1 vs 4"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0: no limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "example reproduction", 30, example_solve},
      {2, "proof of the example", 60, example_prove},
      {3, "oracle equivalence", 300, oracle_equivalence},
      {4, "Carlitz identities", 0, carlitz_identities},
      {5, "H/G defining property", 0, hg_property},
      {6, "recipe sweeps at 100% MATCH", 7200, recipe_sweeps},
      {7, "main-conjecture structure", 0, main_structure},
      {8, "large-index family proved", 600, large_index},
      {9, "closed form S_d(mq^i-1)", 0, closed_form},
      {10, "scaling laws", 0, scaling},
      {11, "evenness", 0, evenness},
      {12, "q=4 shift conjecture", 0, shift_conjecture},
      {13, "determinism", 0, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs > c.limit_s) {
      o.ok = false;
      o.detail += "; over the time limit";
    }
    failures += o.ok ? 0 : 1;
    std::printf("%s  criterion %2d  %-30s %8.2fs  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
