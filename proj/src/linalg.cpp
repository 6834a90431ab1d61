#include "mzv/linalg.hpp"

#include "mzv/error.hpp"

namespace mzv {

FpSystem::FpSystem(std::uint32_t p, std::size_t unknowns) : p_(p), n_(unknowns), pivot_row_(unknowns, -1) {
  if (p < 2) throw Error(Errc::InvalidArgument, "modulus must be prime");
}

std::uint32_t FpSystem::inv(std::uint32_t x) const {
  // Fermat; p is small
  std::uint64_t r = 1, b = x, e = p_ - 2;
  while (e) {
    if (e & 1) r = r * b % p_;
    b = b * b % p_;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

bool FpSystem::add_row(std::vector<std::uint32_t> row, std::uint32_t rhs) {
  if (!consistent_) return false;
  if (row.size() != n_) throw Error(Errc::InvalidArgument, "row length does not match the unknown count");
  row.push_back(rhs % p_);
  // reduce against existing pivots
  for (std::size_t c = 0; c < n_; ++c) {
    if (row[c] == 0 || pivot_row_[c] < 0) continue;
    const std::uint32_t f = row[c];
    const auto& pr = rows_[static_cast<std::size_t>(pivot_row_[c])];
    for (std::size_t j = c; j <= n_; ++j) {
      if (pr[j]) row[j] = static_cast<std::uint32_t>((row[j] + static_cast<std::uint64_t>(p_ - f) * pr[j]) % p_);
    }
  }
  std::size_t lead = 0;
  while (lead < n_ && row[lead] == 0) ++lead;
  if (lead == n_) {
    if (row[n_] != 0) consistent_ = false;
    return consistent_;
  }
  const std::uint32_t li = inv(row[lead]);
  for (std::size_t j = lead; j <= n_; ++j) row[j] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(row[j]) * li % p_);
  // keep the echelon form reduced
  for (auto& r : rows_) {
    const std::uint32_t f = r[lead];
    if (f == 0) continue;
    for (std::size_t j = lead; j <= n_; ++j) {
      if (row[j]) r[j] = static_cast<std::uint32_t>((r[j] + static_cast<std::uint64_t>(p_ - f) * row[j]) % p_);
    }
  }
  pivot_row_[lead] = static_cast<std::int64_t>(rows_.size());
  pivots_.push_back(lead);
  rows_.push_back(std::move(row));
  return true;
}

std::optional<std::vector<std::uint32_t>> FpSystem::particular() const {
  if (!consistent_) return std::nullopt;
  std::vector<std::uint32_t> x(n_, 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) x[pivots_[i]] = rows_[i][n_];
  return x;
}

std::vector<std::vector<std::uint32_t>> FpSystem::kernel() const {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t free = 0; free < n_; ++free) {
    if (pivot_row_[free] >= 0) continue;
    std::vector<std::uint32_t> v(n_, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::uint32_t c = rows_[i][free];
      if (c) v[pivots_[i]] = (p_ - c) % p_;
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace mzv
