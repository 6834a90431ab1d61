#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "mzv/bipoly.hpp"
#include "mzv/powersums.hpp"

namespace mzv {

/// The polynomials H_k, G_k in F_q(t)[T] with
///   H_k(t^{q^d}) = l_d^k S_d(k),   G_k(t^{q^d}) = l_d^k S_{<d}(k)   for all d >= 0.
///
/// H_k is the coefficient of y^{k-1} in 1 / (1 - sum_i (-1)^i B_i(T)/D_i y^{q^i}),
/// B_i(T) = prod_{s=1}^{i} (T^{q^s} - t^{q^i}). G_k is the polynomial solution of
/// G(T^q) = (t - T^q)^k (G(T) + H_k(T)) with G(t) = 0. Every entry is checked
/// against the power sums at d = 0..3 before it is handed out; entries read
/// back from the disk cache are re-checked at d = 1.
class HGCache {
 public:
  /// An empty cache_dir disables persistence.
  HGCache(const PowerSums& ps, std::filesystem::path cache_dir = {});

  const Field& field() const noexcept { return ps_.field(); }
  const PowerSums& power_sums() const noexcept { return ps_; }

  BiPoly compute_H(std::int64_t k) const;
  BiPoly compute_G(std::int64_t k) const;

  /// Largest d used for the pre-store check.
  static constexpr std::uint32_t kCheckDepth = 3;

  struct Stats {
    std::size_t disk_hits = 0, disk_rejects = 0, computed = 0;
  };
  Stats stats() const;

 private:
  struct Fixed {
    Poly den;
    BiRows rows;
  };
  void extend_h_rows(std::size_t m) const;
  bool check_at(const BiPoly& h, std::int64_t k, bool is_G, std::uint32_t d) const;
  BiPoly solve_G(std::int64_t k, const BiPoly& H) const;
  std::optional<BiPoly> load(std::int64_t k, bool is_G) const;
  void store(std::int64_t k, bool is_G, const BiPoly& h) const;
  std::filesystem::path entry_path(std::int64_t k, bool is_G) const;

  const PowerSums& ps_;
  std::filesystem::path dir_;
  mutable std::recursive_mutex mu_;
  mutable std::vector<Fixed> h_rows_;  // index m holds H_{m+1} over Den_m
  mutable std::map<std::int64_t, BiPoly> H_, G_;
  mutable Stats stats_;
};

/// FNV-1a over the bytes of s.
std::uint64_t fnv1a(std::string_view s) noexcept;

}  // namespace mzv
