#include "mzv/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <optional>
#include <ostream>
#include <thread>

#include "mzv/error.hpp"
#include "mzv/recipes.hpp"

namespace mzv {

namespace {

std::int64_t odd_pairs(const ShuffleSet& s, std::int64_t q1) {
  std::int64_t bad = 0;
  for (const auto& pr : s.pairs) bad += (s.weight() - pr.aj) % q1 != 0 ? 1 : 0;
  return bad;
}

// (a, b) as a member of one of the large-index families, if any
std::optional<Prediction> large_index_for(const FieldCtx& F, std::int64_t a, std::int64_t b) {
  const std::int64_t q = F.q();
  for (std::uint32_t n = 1; ipow(q, n - 1) <= a + b; ++n) {
    const std::int64_t qn = ipow(q, n);
    for (LargeFamily f : {LargeFamily::QnQnm1, LargeFamily::Qnp1Qn, LargeFamily::Qnm1Qnp1, LargeFamily::Qnm1nQnp1}) {
      try {
        Prediction p = large_index_delta(F, f, n);
        if (p.predicted.a == a && p.predicted.b == b) return p;
      } catch (const Error&) {
      }
    }
    if (a == qn + 1) {
      for (std::uint32_t i = 1; i <= n; ++i) {
        if (b == qn + 1 - ipow(q, i)) return large_index_delta(F, LargeFamily::Qnp1Shift, n, i);
      }
    }
  }
  return std::nullopt;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

const char* match_name(MatchKind m) noexcept {
  switch (m) {
    case MatchKind::Match: return "MATCH";
    case MatchKind::Mismatch: return "MISMATCH";
    case MatchKind::Partial: return "PARTIAL";
    case MatchKind::Ambiguous: return "AMBIGUOUS";
    case MatchKind::Error: return "ERROR";
  }
  return "ERROR";
}

SweepRow sweep_cell(const Workbench& wb, std::int64_t a, std::int64_t b, const std::string& recipe,
                    const SolveOptions& solve, bool timing) {
  const FieldCtx& F = *wb.field();
  const std::int64_t q1 = F.q() - 1;
  const auto t0 = std::chrono::steady_clock::now();
  SweepRow row;
  row.a = a;
  row.b = b;
  row.recipe = recipe;
  ShuffleSet truth;
  try {
    truth = solve_shuffle(wb, a, b, solve);
    row.solver_status = truth.certified;
    row.n_terms = static_cast<std::int64_t>(truth.pairs.size());
    row.odd_pairs += odd_pairs(truth, q1);
  } catch (const NonUniqueError&) {
    row.solver_status = "NonUniqueSolution";
    row.match = MatchKind::Ambiguous;
  } catch (const Error& e) {
    row.solver_status = std::string(errc_name(e.code()));
    row.warnings.push_back(e.what());
    row.match = MatchKind::Error;
  }
  if (row.n_terms >= 0) {
    try {
      std::optional<Prediction> pred;
      if (recipe == "full" || (recipe == "auto" && full_covered(F, a))) {
        if (full_covered(F, a)) pred = full_delta_small_a(F, a, b);
      } else if (recipe == "main" || recipe == "auto") {
        pred = predict_S(wb, a, b);
      } else if (recipe == "q4") {
        pred = predict_S(wb, a, b, TaSource::Q4);
      } else if (recipe == "large-index") {
        pred = large_index_for(F, a, b);
      } else {
        throw Error(Errc::InvalidArgument, "unknown recipe '" + recipe + "'");
      }
      if (!pred) {
        row.match = MatchKind::Partial;
        row.warnings.push_back("recipe silent");
      } else {
        for (const auto& w : pred->warnings) row.warnings.push_back(w);
        if (pred->initial_provenance != "none" && pred->initial_provenance != "full-formula") {
          row.warnings.push_back("initial=" + pred->initial_provenance);
        }
        row.odd_pairs += odd_pairs(pred->predicted, q1);
        if (pred->partial()) {
          row.match = MatchKind::Partial;
        } else {
          row.match = pred->predicted.pairs == truth.pairs ? MatchKind::Match : MatchKind::Mismatch;
        }
      }
    } catch (const Error& e) {
      if (e.code() == Errc::NotCovered || e.code() == Errc::NotApplicable) {
        row.match = MatchKind::Partial;
      } else {
        row.match = MatchKind::Error;
      }
      row.warnings.push_back(e.what());
    }
  }
  if (timing) row.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

SweepReport run_sweep(const Workbench& wb, const SweepGrid& grid) {
  std::vector<std::pair<std::int64_t, std::int64_t>> cells;
  for (std::int64_t a : grid.as) {
    for (std::int64_t b = grid.b_min; b <= grid.b_max; ++b) cells.emplace_back(a, b);
  }
  if (cells.empty()) throw Error(Errc::InvalidArgument, "empty sweep grid");
  SweepReport rep;
  rep.p = wb.field()->p();
  rep.n = wb.field()->n();
  rep.rows.resize(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) {
      rep.rows[i] = sweep_cell(wb, cells[i].first, cells[i].second, grid.recipe, grid.solve, grid.timing);
    }
  };
  const unsigned jobs = std::max(1U, std::min<unsigned>(grid.jobs, static_cast<unsigned>(cells.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rep;
}

std::size_t SweepReport::count(MatchKind m) const {
  std::size_t c = 0;
  for (const auto& r : rows) c += r.match == m ? 1 : 0;
  return c;
}

double SweepReport::match_percent() const {
  const std::size_t denom = rows.size() - count(MatchKind::Partial);
  return denom == 0 ? 100.0 : 100.0 * static_cast<double>(count(MatchKind::Match)) / static_cast<double>(denom);
}

std::int64_t SweepReport::evenness_violations() const {
  std::int64_t v = 0;
  for (const auto& r : rows) v += r.odd_pairs;
  return v;
}

void SweepReport::write_csv(std::ostream& os) const {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) q *= p;
  os << "q,p,n,a,b,recipe,match,n_terms,time_ms,warnings\n";
  for (const auto& r : rows) {
    std::string warn;
    for (const auto& w : r.warnings) warn += (warn.empty() ? "" : "; ") + w;
    os << q << ',' << p << ',' << n << ',' << r.a << ',' << r.b << ',' << csv_field(r.recipe) << ','
       << match_name(r.match) << ',';
    if (r.n_terms >= 0) os << r.n_terms;
    os << ',';
    if (r.time_ms >= 0) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", r.time_ms);
      os << buf;
    }
    os << ',' << csv_field(warn) << '\n';
  }
}

nlohmann::json SweepReport::summary() const {
  nlohmann::json j;
  j["p"] = p;
  j["n"] = n;
  j["cells"] = rows.size();
  for (MatchKind m : {MatchKind::Match, MatchKind::Mismatch, MatchKind::Partial, MatchKind::Ambiguous, MatchKind::Error}) {
    j[match_name(m)] = count(m);
  }
  j["match_percent"] = match_percent();
  j["evenness_violations"] = evenness_violations();
  return j;
}

}  // namespace mzv
