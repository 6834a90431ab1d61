#pragma once

#include <filesystem>
#include <memory>

#include "mzv/hg.hpp"
#include "mzv/powersums.hpp"

namespace mzv {

/// Per-field bundle of the power-sum and H/G caches shared by the solver,
/// the prover and the recipes.
class Workbench {
 public:
  static std::shared_ptr<Workbench> create(Field f, std::filesystem::path cache_dir = {}) {
    return std::shared_ptr<Workbench>(new Workbench(std::move(f), std::move(cache_dir)));
  }
  Workbench(const Workbench&) = delete;
  Workbench& operator=(const Workbench&) = delete;

  const Field& field() const noexcept { return f_; }
  const PowerSums& power_sums() const noexcept { return ps_; }
  const HGCache& hg() const noexcept { return hg_; }

 private:
  Workbench(Field f, std::filesystem::path dir) : f_(f), ps_(f), hg_(ps_, std::move(dir)) {}

  Field f_;
  PowerSums ps_;
  HGCache hg_;
};

}  // namespace mzv
