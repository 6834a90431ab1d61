#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace mzv {

/// Incremental Gaussian elimination over F_p for systems A c = b with a
/// fixed number of unknowns; rows arrive one at a time and are kept in
/// reduced echelon form. Pivots are chosen by lowest column index, so the
/// result depends only on the row sequence.
class FpSystem {
 public:
  FpSystem(std::uint32_t p, std::size_t unknowns);

  /// Adds sum_j coeffs[j] c_j = rhs (entries already reduced mod p).
  /// Returns false once the system has become inconsistent.
  bool add_row(std::vector<std::uint32_t> coeffs, std::uint32_t rhs);

  std::size_t unknowns() const noexcept { return n_; }
  std::size_t rank() const noexcept { return pivots_.size(); }
  bool consistent() const noexcept { return consistent_; }
  bool full_rank() const noexcept { return rank() == n_; }

  /// The solution with free variables set to zero; nullopt if inconsistent.
  std::optional<std::vector<std::uint32_t>> particular() const;
  /// Basis of the null space (one vector per free column).
  std::vector<std::vector<std::uint32_t>> kernel() const;

 private:
  std::uint32_t inv(std::uint32_t x) const;

  std::uint32_t p_;
  std::size_t n_;
  bool consistent_ = true;
  // rows_[i] has length n_+1 (last entry rhs), leading 1 at pivots_[i]
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::int64_t> pivot_row_;  // column -> row index or -1
};

}  // namespace mzv
