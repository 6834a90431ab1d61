#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mzv/solver.hpp"
#include "mzv/workbench.hpp"

namespace mzv {

enum class MatchKind { Match, Mismatch, Partial, Ambiguous, Error };

const char* match_name(MatchKind m) noexcept;

struct SweepGrid {
  std::vector<std::int64_t> as;
  std::int64_t b_min = 1, b_max = 1;
  /// auto | main | full | q4 | large-index
  std::string recipe = "auto";
  unsigned jobs = 1;
  bool timing = false;
  SolveOptions solve;
};

struct SweepRow {
  std::int64_t a = 0, b = 0;
  std::string recipe;
  MatchKind match = MatchKind::Error;
  /// certified kind, or the error code name
  std::string solver_status;
  std::int64_t n_terms = -1;
  double time_ms = -1;
  std::vector<std::string> warnings;
  /// pairs whose w - a_j is not a multiple of q - 1, in either set
  std::int64_t odd_pairs = 0;
};

struct SweepReport {
  std::uint32_t p = 2, n = 1;
  std::vector<SweepRow> rows;

  std::size_t count(MatchKind m) const;
  /// MATCH / (cells - PARTIAL); 100 for an empty denominator
  double match_percent() const;
  std::int64_t evenness_violations() const;

  void write_csv(std::ostream& os) const;
  nlohmann::json summary() const;
};

/// Runs solver and recipe on every (a, b) of the grid with a bounded worker
/// pool. Rows come back in grid order whatever the number of jobs.
SweepReport run_sweep(const Workbench& wb, const SweepGrid& grid);

/// One cell, exposed for the CLI and the tests.
SweepRow sweep_cell(const Workbench& wb, std::int64_t a, std::int64_t b, const std::string& recipe,
                    const SolveOptions& solve, bool timing);

}  // namespace mzv
